"""Exact binomial/multinomial arithmetic, reflection-principle bounds, and tail estimators.

Everything that can be checked exactly is computed with arbitrary-precision
integers; log-gamma floats are used only past ``EXACT_LIMIT``, where exact
binomials stop being practical.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath

# Largest n for which tail ratios are evaluated with exact integer binomials.
EXACT_LIMIT = 10_000


def binomial(a: int, b: int) -> int:
    """C(a, b), with the convention 0 for b < 0 or b > a."""
    if a < 0:
        raise ValueError("upper index must be non-negative")
    if b < 0 or b > a:
        return 0
    return math.comb(a, b)


def multinomial(parts) -> int:
    """(sum parts)! / prod(part!) for non-negative integer parts."""
    parts = list(parts)
    if not parts:
        return 1
    if any(p < 0 for p in parts):
        raise ValueError("multinomial parts must be non-negative")
    total = 0
    result = 1
    for p in parts:
        total += p
        result *= math.comb(total, p)
    return result


def reflection_bound(n: int, m: int) -> int:
    """Reflection-principle bound 2*C(2n, n-m+1) on the number of words whose
    maximal-gap distance to the alternating word is at least m/n."""
    if not 1 <= m <= n:
        raise ValueError(f"m must lie in 1..{n}, got {m}")
    return 2 * binomial(2 * n, n - m + 1)


def multinomial_gap_bound(n: int, m: int, alphabet_size: int) -> int:
    """N-letter analogue: 2*N^2 * multinomial(Nn; n-m, n+m, n, ..., n)."""
    if alphabet_size < 2:
        raise ValueError("alphabet size must be at least 2")
    if not 0 <= m <= n:
        raise ValueError(f"m must lie in 0..{n}, got {m}")
    parts = [n - m, n + m] + [n] * (alphabet_size - 2)
    return 2 * alphabet_size**2 * multinomial(parts)


@dataclass(frozen=True)
class ProportionBound:
    """Exhaustive count of far words next to the counting bound that dominates it."""

    count_far: int
    total: int
    bound: int
    ratio: float

    def __post_init__(self):
        if not 0 <= self.count_far <= self.total:
            raise ValueError("count_far must lie in 0..total")


def count_words_far(n, threshold, alphabet_size=2, cap=None) -> ProportionBound:
    """Count words whose maximal-gap distance to the standard word is >= threshold.

    The bound field holds the applicable counting bound: the reflection bound
    for two letters (threshold m/n), the multinomial bound for more letters
    (threshold (2m+2)/n).  Thresholds too small for either bound fall back to
    the trivial bound (the total count).
    """
    from . import metrics, words

    threshold = Fraction(threshold)
    if threshold < 0:
        raise ValueError("threshold must be non-negative")

    kwargs = {} if cap is None else {"cap": cap}
    wst = words.standard_word(n, alphabet_size)
    count_far = 0
    total = 0
    for w in words.enumerate_words(n, alphabet_size, **kwargs):
        total += 1
        if metrics.max_gap_distance(w, wst) >= threshold:
            count_far += 1

    if alphabet_size == 2:
        m = min(math.floor(n * threshold), n)
        bound = reflection_bound(n, m) if m >= 1 else total
    else:
        m = min(math.floor((n * threshold - 2) / 2), n)
        bound = multinomial_gap_bound(n, m, alphabet_size) if m >= 0 else total
    return ProportionBound(count_far, total, bound, count_far / total)


def entropy_rate(eps: float) -> float:
    """Large-deviation rate (1+e)ln(1+e) + (1-e)ln(1-e), with 0*ln(0) = 0."""
    if not 0.0 <= eps <= 1.0:
        raise ValueError("eps must lie in [0, 1]")
    if eps == 1.0:
        return 2.0 * math.log(2.0)
    return (1.0 + eps) * math.log1p(eps) + (1.0 - eps) * math.log1p(-eps)


def _log_binomial(a: int, b: int) -> float:
    return math.lgamma(a + 1) - math.lgamma(b + 1) - math.lgamma(a - b + 1)


def large_deviation_ratio(n: int, eps: float):
    """Tail ratio C(2n, n-[n*eps]) / C(2n, n) and its first-order approximation.

    Returns ``(exact, asymptotic)`` as mpmath floats: for large n both values
    underflow double precision (they decay like e^{-rate*n}), so extended
    exponent range is required to return them at all.  The asymptotic value is
    e^{-entropy_rate(eps)*n} / sqrt(1 - eps^2); exact/asymptotic tends to 1.
    """
    if not 0.0 < eps < 1.0:
        raise ValueError("eps must lie strictly between 0 and 1")
    shift = math.floor(n * eps)
    if n <= EXACT_LIMIT:
        exact = mpmath.mpf(binomial(2 * n, n - shift)) / mpmath.mpf(binomial(2 * n, n))
    else:
        exact = mpmath.exp(_log_binomial(2 * n, n - shift) - _log_binomial(2 * n, n))
    asymptotic = mpmath.exp(-mpmath.mpf(entropy_rate(eps)) * n) / mpmath.sqrt(1 - eps * eps)
    return exact, asymptotic


def stirling_proportion(n: int, p: float) -> float:
    """The quantity 2*C(2n, n-[sqrt(n)*p]+1) / C(2n, n), which for p fixed and
    n large behaves like 2*e^{-p^2}."""
    if p <= 0:
        raise ValueError("p must be positive")
    shift = math.floor(math.sqrt(n) * p)
    if shift > n:
        raise ValueError("sqrt(n)*p must not exceed n")
    k = n - shift + 1
    if n <= EXACT_LIMIT:
        return float(2 * Fraction(binomial(2 * n, k), binomial(2 * n, n)))
    return 2.0 * math.exp(_log_binomial(2 * n, k) - _log_binomial(2 * n, n))


def multinomial_ratio_identity(n: int, m: int, alphabet_size: int):
    """Both sides of the exact ratio identity

        multinomial(Nn; n-m, n+m, n, ..., n) / multinomial(Nn; n, ..., n)
            = C(2n, n-m) / C(2n, n)

    as exact fractions."""
    if not 0 <= m <= n:
        raise ValueError(f"m must lie in 0..{n}, got {m}")
    if alphabet_size < 2:
        raise ValueError("alphabet size must be at least 2")
    shifted = [n - m, n + m] + [n] * (alphabet_size - 2)
    flat = [n] * alphabet_size
    lhs = Fraction(multinomial(shifted), multinomial(flat))
    rhs = Fraction(binomial(2 * n, n - m), binomial(2 * n, n))
    return lhs, rhs
