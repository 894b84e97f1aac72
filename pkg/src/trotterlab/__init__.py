"""Products of matrix exponentials over all letter orderings.

Words over an N-letter alphabet with equal letter counts, exact metrics on
them, counting bounds, a dense complex-matrix toolkit with its own matrix
exponential, and experiments showing that the products e^{A_{w[1]}/n} ...
e^{A_{w[Nn]}/n} crowd around e^{A_1 + ... + A_N}.
"""

__version__ = "0.1.0"

from .errors import CapExceededError, ShapeError, UnsupportedAlphabetError
from .words import (
    StepFunction,
    Word,
    enumerate_words,
    prefix_counts,
    sample_word,
    standard_word,
    step_function,
    word_count,
    word_from_step_function,
)
from .metrics import area_distance, max_gap_distance, span, swap_distance, swap_distance_bfs
from .combinatorics import (
    ProportionBound,
    binomial,
    count_words_far,
    entropy_rate,
    large_deviation_ratio,
    multinomial,
    multinomial_ratio_identity,
    reflection_bound,
    stirling_proportion,
)
from .linalg import (
    as_matrix,
    commutator,
    determinant,
    expm,
    expm_series,
    matmul,
    matrix_from_json,
    matrix_norm,
    matrix_to_json,
    matrix_unit,
)
from .products import (
    BoundCheck,
    bound_onsets,
    check_lipschitz,
    check_one_swap,
    check_step_bounds,
    check_trotter_bound,
    check_uniform_bound,
    closed_form_product,
    lie_trotter,
    prefix_products,
    step_function_product,
    word_product,
)
from .experiments import (
    AlmostSureRun,
    ConcentrationReport,
    PointCloud,
    almost_sure_run,
    concentration_experiment,
    generate_point_cloud,
)

__all__ = [name for name in dir() if not name.startswith("_")]
