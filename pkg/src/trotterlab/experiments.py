"""Concentration experiments, almost-sure sampling runs, and point clouds.

Distances to the target e^{sum A_k} are measured in the Frobenius norm; the
concentration constant and bound curves use the induced one-norm, matching
the bound checks.  Word-level work is independent, so it can be chunked
across threads; results are reduced in word order and are identical for any
thread count.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import linalg
from .products import batch_word_products, cloud_markers, exp_of_sum, validate_matrices
from .words import DEFAULT_ENUMERATION_CAP, enumerate_words, letters_to_text

DISTANCE_NORM = "frobenius"
CONSTANT_NORM = "one"
QUANTILES = (0.5, 0.9, 0.99)


def default_threshold(n: int) -> float:
    """The radius sqrt(ln n / n) used when no override is given."""
    return math.sqrt(math.log(n) / n)


def concentration_constant(matrices) -> float | None:
    """The exponent c = 1 / (4 ||AB-BA|| e^{||A||+||B||})^2 (one-norm).

    Defined only for two non-commuting matrices; otherwise None.
    """
    ms = validate_matrices(matrices)
    if len(ms) != 2:
        return None
    scale = linalg.matrix_norm(linalg.commutator(ms[0], ms[1]), CONSTANT_NORM) * math.exp(
        linalg.matrix_norm(ms[0], CONSTANT_NORM) + linalg.matrix_norm(ms[1], CONSTANT_NORM)
    )
    if scale == 0.0:
        return None
    return 1.0 / (4.0 * scale) ** 2


@dataclass(frozen=True)
class ConcentrationReport:
    """Distance statistics of all (or sampled) products against e^{sum A_k}."""

    n: int
    alphabet_size: int
    dim: int
    mode: str
    count: int | None
    seed: int
    threshold: float
    proportion_within: float
    count_within: int
    count_total: int
    c_constant: float | None
    proportion_lower_bound: float | None
    distances: np.ndarray = field(repr=False)
    matrices: tuple = field(repr=False)
    distance_norm: str = DISTANCE_NORM
    constant_norm: str = CONSTANT_NORM


@dataclass(frozen=True)
class PointCloud:
    """All (or sampled) products of a matrix tuple, with reference markers."""

    n: int
    alphabet_size: int
    dim: int
    mode: str
    count: int
    count_requested: int | None
    seed: int
    words: list
    products: np.ndarray = field(repr=False)
    markers: dict = field(repr=False)
    matrices: tuple = field(repr=False)


@dataclass(frozen=True)
class AlmostSureRun:
    """One uniform word per n, with errors against the concentration target."""

    seed: int
    n_values: tuple
    errors: np.ndarray
    bound_curve: np.ndarray | None
    bound_onset_n: int | None
    c_constant: float | None
    alphabet_size: int
    dim: int
    matrices: tuple = field(repr=False)
    distance_norm: str = DISTANCE_NORM
    constant_norm: str = CONSTANT_NORM


def _exhaustive_letters(n, alphabet_size, cap) -> np.ndarray:
    rows = [w.letters for w in enumerate_words(n, alphabet_size, cap=cap)]
    return np.array(rows, dtype=np.int8)


def _sampled_letters(n, alphabet_size, count, seed) -> np.ndarray:
    if count is None or count < 1:
        raise ValueError("sample mode needs a positive count")
    rng = np.random.default_rng(np.random.SeedSequence(seed & (2**64 - 1)))
    rows = np.tile(np.repeat(np.arange(alphabet_size, dtype=np.int8), n), (count, 1))
    return rng.permuted(rows, axis=1)


def _letters_for_mode(matrices, n, mode, count, seed, cap):
    ms = validate_matrices(matrices)
    if mode == "exhaustive":
        return ms, _exhaustive_letters(n, len(ms), cap)
    if mode == "sample":
        return ms, _sampled_letters(n, len(ms), count, seed)
    raise ValueError(f"unknown mode {mode!r}")


def _chunked_products(letters, matrices, n, threads) -> np.ndarray:
    if threads <= 1 or letters.shape[0] < 2 * threads:
        return batch_word_products(letters, matrices, n)
    chunks = np.array_split(letters, threads)
    with ThreadPoolExecutor(max_workers=threads) as pool:
        parts = list(pool.map(lambda rows: batch_word_products(rows, matrices, n), chunks))
    return np.concatenate(parts)


def _frobenius_distances(products, target) -> np.ndarray:
    diff = products - target
    return np.sqrt((np.abs(diff) ** 2).sum(axis=(1, 2)))


def concentration_experiment(
    matrices,
    n: int,
    mode: str = "exhaustive",
    count: int | None = None,
    seed: int = 0,
    threshold: float | None = None,
    cap: int = DEFAULT_ENUMERATION_CAP,
    threads: int = 1,
) -> ConcentrationReport:
    """Proportion of products lying strictly within ``threshold`` of e^{sum A_k}."""
    ms, letters = _letters_for_mode(matrices, n, mode, count, seed, cap)
    if threshold is None:
        threshold = default_threshold(n)
    products = _chunked_products(letters, ms, n, threads)
    distances = _frobenius_distances(products, exp_of_sum(ms))
    count_within = int((distances < threshold).sum())
    total = distances.shape[0]
    c = concentration_constant(ms)
    lower = 1.0 - 2.0 / n**c if c is not None else None
    return ConcentrationReport(
        n=n,
        alphabet_size=len(ms),
        dim=ms[0].shape[0],
        mode=mode,
        count=count if mode == "sample" else None,
        seed=seed,
        threshold=float(threshold),
        proportion_within=count_within / total,
        count_within=count_within,
        count_total=total,
        c_constant=c,
        proportion_lower_bound=lower,
        distances=distances,
        matrices=ms,
    )


def distances_summary(distances: np.ndarray) -> dict:
    """min/max/mean and the fixed quantiles of a distance list."""
    qs = np.quantile(distances, QUANTILES)
    return {
        "min": float(distances.min()),
        "max": float(distances.max()),
        "mean": float(distances.mean()),
        "quantiles": {str(q): float(v) for q, v in zip(QUANTILES, qs)},
    }


def distance_histogram(distances: np.ndarray, bins: int = 40) -> dict:
    """Fixed-bin histogram of a distance list, for clients that only render.

    Bins span [0, max]; a degenerate all-zero list gets a unit range so the
    edges stay distinct.
    """
    top = float(distances.max())
    if top <= 0.0:
        top = 1.0
    counts, edges = np.histogram(distances, bins=bins, range=(0.0, top))
    return {"edges": [float(e) for e in edges], "counts": [int(c) for c in counts]}


def almost_sure_run(matrices, n_values, seed: int = 0) -> AlmostSureRun:
    """Draw one uniform word per n and track the error against e^{sum A_k}.

    The bound curve is 4 sqrt(c ln n / n) ||AB-BA|| e^{||A||+||B||}; the
    recorded onset is the first n from which every later error stays at or
    below the curve.
    """
    n_values = tuple(int(n) for n in n_values)
    if any(b <= a for a, b in zip(n_values, n_values[1:])) or not n_values:
        raise ValueError("n_values must be non-empty and strictly increasing")
    ms = validate_matrices(matrices)
    target = exp_of_sum(ms)
    errors = []
    for idx, n in enumerate(n_values):
        child = np.random.SeedSequence([seed & (2**64 - 1), idx])
        rng = np.random.default_rng(child)
        letters = rng.permutation(np.repeat(np.arange(len(ms), dtype=np.int8), n))
        product = batch_word_products(letters[None, :], ms, n)[0]
        errors.append(float(linalg.matrix_norm(product - target, DISTANCE_NORM)))
    errors = np.array(errors)

    c = concentration_constant(ms)
    bound_curve = None
    onset = None
    if c is not None:
        scale = linalg.matrix_norm(linalg.commutator(ms[0], ms[1]), CONSTANT_NORM) * math.exp(
            linalg.matrix_norm(ms[0], CONSTANT_NORM) + linalg.matrix_norm(ms[1], CONSTANT_NORM)
        )
        bound_curve = np.array(
            [4.0 * math.sqrt(c * math.log(n) / n) * scale for n in n_values]
        )
        within = errors <= bound_curve
        for i in range(len(n_values)):
            if within[i:].all():
                onset = n_values[i]
                break
    return AlmostSureRun(
        seed=seed,
        n_values=n_values,
        errors=errors,
        bound_curve=bound_curve,
        bound_onset_n=onset,
        c_constant=c,
        alphabet_size=len(ms),
        dim=ms[0].shape[0],
        matrices=ms,
    )


def generate_point_cloud(
    matrices,
    n: int,
    mode: str = "exhaustive",
    count: int | None = None,
    seed: int = 0,
    cap: int = DEFAULT_ENUMERATION_CAP,
    threads: int = 1,
) -> PointCloud:
    """All (or sampled) products with word labels, in lexicographic word order
    for exhaustive mode, plus the four reference markers."""
    ms, letters = _letters_for_mode(matrices, n, mode, count, seed, cap)
    products = _chunked_products(letters, ms, n, threads)
    words = [letters_to_text(row) for row in letters]
    return PointCloud(
        n=n,
        alphabet_size=len(ms),
        dim=ms[0].shape[0],
        mode=mode,
        count=len(words),
        count_requested=count if mode == "sample" else None,
        seed=seed,
        words=words,
        products=products,
        markers=cloud_markers(ms, n),
        matrices=ms,
    )
