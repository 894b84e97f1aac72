"""Ordered products of matrix exponentials over a word's letters.

The product map sends a word w to e^{A_{w[1]}/n} e^{A_{w[2]}/n} ... ; the
letter exponentials are computed once per (matrix tuple, n) and cached, so
exhaustive sweeps cost one small matmul per letter.

Inequality checks return :class:`BoundCheck` records instead of asserting, so
experiments and tests can aggregate them.  All bound checks use the induced
one-norm: it is sub-multiplicative with ||I|| = 1, which the uniform product
bound needs (the Frobenius norm has ||I|| = sqrt(d) and fails it trivially at
the zero matrix).  Distances elsewhere default to Frobenius.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .errors import ShapeError
from .metrics import area_distance
from .words import StepFunction, Word, standard_word
from . import linalg

BOUND_NORM = "one"

_EXP_CACHE: dict = {}
_EXP_CACHE_LIMIT = 64


def validate_matrices(matrices) -> tuple[np.ndarray, ...]:
    """Validate a tuple of at least two same-dimension square matrices."""
    ms = tuple(linalg.as_matrix(m) for m in matrices)
    if len(ms) < 2:
        raise ShapeError("need at least two matrices")
    d = ms[0].shape[0]
    if any(m.shape[0] != d for m in ms):
        raise ShapeError("all matrices must share one dimension")
    return ms


def letter_exponentials(matrices, n: int) -> tuple[np.ndarray, ...]:
    """The cached exponentials e^{A_k / n}, one per letter."""
    ms = validate_matrices(matrices)
    if n < 1:
        raise ValueError("n must be a positive integer")
    key = (n, ms[0].shape[0]) + tuple(m.tobytes() for m in ms)
    hit = _EXP_CACHE.get(key)
    if hit is None:
        hit = tuple(linalg.expm(m / n) for m in ms)
        if len(_EXP_CACHE) >= _EXP_CACHE_LIMIT:
            _EXP_CACHE.pop(next(iter(_EXP_CACHE)))
        _EXP_CACHE[key] = hit
    return hit


def _require_alphabet(word: Word, matrices) -> tuple[np.ndarray, ...]:
    ms = validate_matrices(matrices)
    if word.alphabet_size != len(ms):
        raise ShapeError(
            f"word uses {word.alphabet_size} letters but {len(ms)} matrices were given"
        )
    return ms


def word_product(word: Word, matrices) -> np.ndarray:
    """Left-to-right product of the letter exponentials along the word."""
    ms = _require_alphabet(word, matrices)
    exps = letter_exponentials(ms, word.n)
    product = exps[word.letters[0]]
    for k in word.letters[1:]:
        product = product @ exps[k]
    return product


def prefix_products(word: Word, matrices) -> list[np.ndarray]:
    """All partial products; the last entry is exactly word_product's result."""
    ms = _require_alphabet(word, matrices)
    exps = letter_exponentials(ms, word.n)
    product = exps[word.letters[0]]
    out = [product]
    for k in word.letters[1:]:
        product = product @ exps[k]
        out.append(product)
    return out


def batch_word_products(letters: np.ndarray, matrices, n: int) -> np.ndarray:
    """Products for many words at once.

    ``letters`` has one word per row; returns an array of shape (rows, d, d).
    Same arithmetic as :func:`word_product`, batched per position.
    """
    ms = validate_matrices(matrices)
    exps = np.stack(letter_exponentials(ms, n))
    letters = np.asarray(letters)
    products = exps[letters[:, 0]]
    for j in range(1, letters.shape[1]):
        products = products @ exps[letters[:, j]]
    return products


def _power(m: np.ndarray, n: int) -> np.ndarray:
    if n & (n - 1) == 0:  # power of two: repeated squaring
        while n > 1:
            m = m @ m
            n >>= 1
        return m
    product = m
    for _ in range(n - 1):
        product = product @ m
    return product


def lie_trotter(a, b, n: int) -> np.ndarray:
    """The alternating-order approximant (e^{A/n} e^{B/n})^n."""
    x, y = linalg.as_matrix(a), linalg.as_matrix(b)
    if x.shape != y.shape:
        raise ShapeError(f"dimension mismatch: {x.shape} vs {y.shape}")
    if n < 1:
        raise ValueError("n must be a positive integer")
    step = linalg.expm(x / n) @ linalg.expm(y / n)
    return _power(step, n)


@dataclass(frozen=True)
class BoundCheck:
    """One evaluated inequality: holds exactly when lhs <= rhs."""

    name: str
    lhs: float
    rhs: float
    holds: bool
    context: dict

    @classmethod
    def of(cls, name, lhs, rhs, **context):
        return cls(name, float(lhs), float(rhs), bool(lhs <= rhs), context)


def check_uniform_bound(word: Word, matrices) -> BoundCheck:
    """||F(w)|| <= e^{sum_k ||A_k||}, uniform over words."""
    ms = _require_alphabet(word, matrices)
    lhs = linalg.matrix_norm(word_product(word, ms), BOUND_NORM)
    rhs = math.exp(sum(linalg.matrix_norm(m, BOUND_NORM) for m in ms))
    return BoundCheck.of("uniform_product", lhs, rhs, n=word.n, word=word.to_text())


def check_step_bounds(a, b, n: int) -> tuple[BoundCheck, BoundCheck]:
    """The two single-step estimates that drive everything else:

    ||e^{A/n} e^{B/n} - e^{(A+B)/n}||  <= ||AB - BA|| / n^2
    ||e^{A/n} e^{B/n} - e^{B/n} e^{A/n}|| <= 2 ||AB - BA|| / n^2

    Both are promised only for large n.  Commuting inputs short-circuit to
    trivially holding checks (both sides are exactly zero then).
    """
    x, y = linalg.as_matrix(a), linalg.as_matrix(b)
    comm_norm = linalg.matrix_norm(linalg.commutator(x, y), BOUND_NORM)
    if comm_norm == 0.0:
        split = BoundCheck.of("step_split", 0.0, 0.0, n=n, commuting=True)
        commute = BoundCheck.of("step_commute", 0.0, 0.0, n=n, commuting=True)
        return split, commute
    ea, eb = linalg.expm(x / n), linalg.expm(y / n)
    forward = ea @ eb
    split = BoundCheck.of(
        "step_split",
        linalg.matrix_norm(forward - linalg.expm((x + y) / n), BOUND_NORM),
        comm_norm / n**2,
        n=n,
    )
    commute = BoundCheck.of(
        "step_commute",
        linalg.matrix_norm(forward - eb @ ea, BOUND_NORM),
        2.0 * comm_norm / n**2,
        n=n,
    )
    return split, commute


def check_trotter_bound(a, b, n: int) -> BoundCheck:
    """||(e^{A/n} e^{B/n})^n - e^{A+B}|| <= ||AB - BA|| e^{||A||+||B||} / n."""
    x, y = linalg.as_matrix(a), linalg.as_matrix(b)
    lhs = linalg.matrix_norm(lie_trotter(x, y, n) - linalg.expm(x + y), BOUND_NORM)
    rhs = (
        linalg.matrix_norm(linalg.commutator(x, y), BOUND_NORM)
        * math.exp(linalg.matrix_norm(x, BOUND_NORM) + linalg.matrix_norm(y, BOUND_NORM))
        / n
    )
    return BoundCheck.of("trotter", lhs, rhs, n=n)


def swap_positions(word: Word, i: int) -> Word:
    """The word with positions i and i+1 (zero-based) exchanged."""
    if not 0 <= i < len(word) - 1:
        raise ValueError(f"swap position {i} outside 0..{len(word) - 2}")
    letters = list(word.letters)
    letters[i], letters[i + 1] = letters[i + 1], letters[i]
    return Word(tuple(letters), word.alphabet_size)


def check_one_swap(word: Word, i: int, matrices) -> BoundCheck:
    """Swapping two unequal neighboring letters moves the product by at most
    2 ||AB - BA|| e^{||A||+||B||} / n^2 (two-letter words)."""
    ms = _require_alphabet(word, matrices)
    if len(ms) != 2:
        raise ShapeError("the one-swap bound is stated for two matrices")
    if word.letters[i] == word.letters[i + 1]:
        raise ValueError(f"positions {i} and {i + 1} hold the same letter")
    swapped = swap_positions(word, i)
    lhs = linalg.matrix_norm(word_product(word, ms) - word_product(swapped, ms), BOUND_NORM)
    rhs = (
        2.0
        * linalg.matrix_norm(linalg.commutator(ms[0], ms[1]), BOUND_NORM)
        * math.exp(sum(linalg.matrix_norm(m, BOUND_NORM) for m in ms))
        / word.n**2
    )
    return BoundCheck.of("one_swap", lhs, rhs, n=word.n, word=word.to_text(), position=i)


def check_lipschitz(w: Word, v: Word, matrices) -> BoundCheck:
    """||F(w) - F(v)|| <= area_distance(w, v) * 2 ||AB-BA|| e^{||A||+||B||}."""
    ms = _require_alphabet(w, matrices)
    if len(ms) != 2:
        raise ShapeError("the Lipschitz bound is stated for two matrices")
    lhs = linalg.matrix_norm(word_product(w, ms) - word_product(v, ms), BOUND_NORM)
    rhs = (
        float(area_distance(w, v))
        * 2.0
        * linalg.matrix_norm(linalg.commutator(ms[0], ms[1]), BOUND_NORM)
        * math.exp(sum(linalg.matrix_norm(m, BOUND_NORM) for m in ms))
    )
    return BoundCheck.of("lipschitz", lhs, rhs, n=w.n, words=(w.to_text(), v.to_text()))


def bound_onsets(a, b, max_n: int = 64, checks=("step_split", "step_commute", "trotter")) -> dict:
    """Smallest n0 <= max_n from which each inequality holds for every tested
    n >= n0; None when no such onset exists in range."""
    results = {}
    for name in checks:
        last_failure = 0
        for n in range(1, max_n + 1):
            if name == "trotter":
                check = check_trotter_bound(a, b, n)
            else:
                split, commute = check_step_bounds(a, b, n)
                check = split if name == "step_split" else commute
            if not check.holds:
                last_failure = n
        results[name] = last_failure + 1 if last_failure < max_n else None
    return results


def closed_form_product(word: Word) -> np.ndarray:
    """Closed form of the product for the fixed pair A = E12, B = E11 (2x2).

    The product is upper triangular with (1,1) entry e, (2,2) entry 1, and
    (1,2) entry (1/n) sum_i e^{heights[i]/n}: a Riemann-type sum of the word's
    step function.  No matrix products are performed.
    """
    from .words import step_function

    heights = step_function(word).heights
    n = word.n
    entry = sum(math.exp(h / n) for h in heights) / n
    return np.array([[math.e, entry], [0.0, 1.0]], dtype=np.complex128)


def step_function_product(
    profile: StepFunction | Callable[[float], float], a, b, m: int
) -> np.ndarray:
    """Product along the lattice word closest to a non-decreasing profile.

    The profile is sampled at the m interval midpoints, rounded to multiples
    of 1/m (ties round down), forced monotone by a running maximum, and the
    resulting word's product is returned.
    """
    if m < 1:
        raise ValueError("discretization m must be positive")
    levels = []
    top = 0
    for i in range(1, m + 1):
        value = float(profile((i - 0.5) / m))
        if not 0.0 <= value <= 1.0 + 1e-12:
            raise ValueError(f"profile value {value} outside [0, 1]")
        # round(..., 9) absorbs float noise around exact half-ties so that
        # ties reliably round down
        level = math.ceil(round(value * m, 9) - 0.5)
        level = min(max(level, 0), m)
        if level < top:
            raise ValueError("profile must be non-decreasing")
        top = max(top, level)
        levels.append(top)
    word = _word_from_heights(levels)
    return word_product(word, (a, b))


def _word_from_heights(heights: Sequence[int]) -> Word:
    n = len(heights)
    letters = [1] * (2 * n)
    for i, h in enumerate(heights, start=1):
        letters[i + h - 1] = 0
    return Word(tuple(letters), 2)


def exp_of_sum(matrices) -> np.ndarray:
    """e^{A_1 + ... + A_N}, the concentration target."""
    ms = validate_matrices(matrices)
    total = ms[0]
    for m in ms[1:]:
        total = total + m
    return linalg.expm(total)


def cloud_markers(matrices, n: int) -> dict:
    """The four named reference products drawn alongside every point cloud."""
    ms = validate_matrices(matrices)
    forward = linalg.expm(ms[0])
    for m in ms[1:]:
        forward = forward @ linalg.expm(m)
    reverse = linalg.expm(ms[-1])
    for m in reversed(ms[:-1]):
        reverse = reverse @ linalg.expm(m)
    return {
        "exp_of_sum": exp_of_sum(ms),
        "ordered_product": forward,
        "reversed_product": reverse,
        "standard_word": word_product(standard_word(n, len(ms)), ms),
    }
