"""Metrics on equal-count words: area, maximal gap, swap distance, and span.

All values are exact rationals or integers; the identities between these
metrics are exact, so no floating point enters here.
"""

from __future__ import annotations

from collections import deque
from fractions import Fraction

import numpy as np

from .errors import CapExceededError, ShapeError
from .words import Word, prefix_counts, word_count


def _require_same_shape(w: Word, v: Word):
    if w.alphabet_size != v.alphabet_size or w.n != v.n:
        raise ShapeError(
            f"words have different shapes: (n={w.n}, N={w.alphabet_size}) vs "
            f"(n={v.n}, N={v.alphabet_size})"
        )


def area_distance(w: Word, v: Word) -> Fraction:
    """Normalized area of the region between the two words' lattice paths.

    For two letters this is sum_j |w_A[j] - v_A[j]| / n^2; for larger
    alphabets the prefix gaps of all letters are summed and normalized by
    (Nn)^2.
    """
    _require_same_shape(w, v)
    gaps = np.abs(prefix_counts(w) - prefix_counts(v))
    if w.alphabet_size == 2:
        return Fraction(int(gaps[0].sum()), w.n**2)
    return Fraction(int(gaps.sum()), (w.alphabet_size * w.n) ** 2)


def max_gap_distance(w: Word, v: Word) -> Fraction:
    """(2/n) times the maximal prefix-count gap over all letters and prefixes."""
    _require_same_shape(w, v)
    gap = int(np.abs(prefix_counts(w) - prefix_counts(v)).max())
    return Fraction(2 * gap, w.n)


def matching_permutation(w: Word, v: Word) -> tuple[int, ...]:
    """Order-preserving matching: position in v of the i-th occurrence (in w)
    of each letter.  Its inversion count is the swap distance."""
    _require_same_shape(w, v)
    positions = [deque() for _ in range(v.alphabet_size)]
    for j, k in enumerate(v.letters):
        positions[k].append(j)
    return tuple(positions[k].popleft() for k in w.letters)


def swap_distance(w: Word, v: Word) -> int:
    """Minimal number of adjacent transpositions turning w into v."""
    perm = matching_permutation(w, v)
    inversions = 0
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                inversions += 1
    return inversions


def swap_distance_bfs(w: Word, v: Word, *, length_cap: int = 10) -> int:
    """Exact shortest-path swap distance by breadth-first search.

    Only intended as an oracle for :func:`swap_distance`; the state space is
    all words of the same shape, so the length is capped.
    """
    _require_same_shape(w, v)
    if len(w) > length_cap:
        raise CapExceededError(
            f"BFS over words of length {len(w)} would visit up to "
            f"{word_count(w.n, w.alphabet_size)} states (cap {length_cap} letters)",
            count=word_count(w.n, w.alphabet_size),
        )
    source, target = w.letters, v.letters
    if source == target:
        return 0
    frontier = deque([(source, 0)])
    visited = {source}
    while frontier:
        current, steps = frontier.popleft()
        for i in range(len(current) - 1):
            if current[i] == current[i + 1]:
                continue
            swapped = current[:i] + (current[i + 1], current[i]) + current[i + 2 :]
            if swapped == target:
                return steps + 1
            if swapped not in visited:
                visited.add(swapped)
                frontier.append((swapped, steps + 1))
    raise RuntimeError("unreachable: equal-shape words are always connected by swaps")


def span(word: Word) -> Fraction:
    """(1/n) times the maximal discrepancy between any two letters' prefix counts."""
    counts = prefix_counts(word)
    gap = int((counts.max(axis=0) - counts.min(axis=0)).max())
    return Fraction(gap, word.n)
