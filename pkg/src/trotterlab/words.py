"""Words over a fixed alphabet with equal letter counts, and their lattice-path views.

A word of size ``n`` over an alphabet of ``N >= 2`` letters contains every
letter exactly ``n`` times.  Words are stored as tuples of small integer
indices ``0..N-1``; rendering as ``A, B, C, ...`` happens only at I/O edges.
Words and step functions are immutable values, safe to share across threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

import numpy as np

from .combinatorics import multinomial
from .errors import CapExceededError, UnsupportedAlphabetError

# Default guard on N*n: enumerating anything longer is almost certainly a
# mistake (the streams grow like N^(Nn)).
DEFAULT_ENUMERATION_CAP = 24

_LETTER_BASE = ord("A")


def letters_to_text(letters) -> str:
    return "".join(chr(_LETTER_BASE + k) for k in letters)


@dataclass(frozen=True)
class Word:
    """Immutable word in which every letter index occurs equally often."""

    letters: tuple[int, ...]
    alphabet_size: int

    def __post_init__(self):
        if self.alphabet_size < 2:
            raise ValueError("alphabet size must be at least 2")
        length = len(self.letters)
        if length == 0 or length % self.alphabet_size != 0:
            raise ValueError(
                f"word length {length} is not a positive multiple of the "
                f"alphabet size {self.alphabet_size}"
            )
        n = length // self.alphabet_size
        counts = [0] * self.alphabet_size
        for k in self.letters:
            if not 0 <= k < self.alphabet_size:
                raise ValueError(f"letter index {k} outside alphabet of size {self.alphabet_size}")
            counts[k] += 1
        if any(c != n for c in counts):
            raise ValueError(f"every letter must occur exactly {n} times, got counts {counts}")

    @property
    def n(self) -> int:
        """Occurrences of each letter."""
        return len(self.letters) // self.alphabet_size

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return self.to_text()

    def to_text(self) -> str:
        return letters_to_text(self.letters)

    @classmethod
    def from_text(cls, text: str, alphabet_size: int | None = None) -> "Word":
        """Parse an uppercase-letter rendering; rejects unequal letter counts."""
        letters = []
        for ch in text:
            k = ord(ch) - _LETTER_BASE
            if not 0 <= k < 26:
                raise ValueError(f"invalid letter {ch!r} in word text")
            letters.append(k)
        if not letters:
            raise ValueError("empty word text")
        if alphabet_size is None:
            alphabet_size = max(letters) + 1
        return cls(tuple(letters), max(alphabet_size, 2))


def word_count(n: int, alphabet_size: int = 2) -> int:
    """Exact size of the word space: (Nn)! / (n!)^N."""
    _validate_size(n, alphabet_size)
    return multinomial([n] * alphabet_size)


def _validate_size(n, alphabet_size):
    if n < 1:
        raise ValueError("n must be a positive integer")
    if alphabet_size < 2:
        raise ValueError("alphabet size must be at least 2")


def standard_word(n: int, alphabet_size: int = 2) -> Word:
    """The cyclic word ABC...ABC... with n repetitions of the full alphabet."""
    _validate_size(n, alphabet_size)
    return Word(tuple(range(alphabet_size)) * n, alphabet_size)


def _advance(letters: list[int]) -> bool:
    # In-place lexicographic successor for a multiset permutation.
    i = len(letters) - 2
    while i >= 0 and letters[i] >= letters[i + 1]:
        i -= 1
    if i < 0:
        return False
    j = len(letters) - 1
    while letters[j] <= letters[i]:
        j -= 1
    letters[i], letters[j] = letters[j], letters[i]
    letters[i + 1 :] = reversed(letters[i + 1 :])
    return True


def enumerate_words(
    n: int,
    alphabet_size: int = 2,
    *,
    start: int = 0,
    stop: int | None = None,
    cap: int = DEFAULT_ENUMERATION_CAP,
) -> Iterator[Word]:
    """Yield every word exactly once, in lexicographic order of letter indices.

    ``start``/``stop`` select a rank range so consumers can partition the
    stream.  Raises :class:`CapExceededError` when N*n exceeds ``cap``.
    """
    _validate_size(n, alphabet_size)
    total = word_count(n, alphabet_size)
    if alphabet_size * n > cap:
        raise CapExceededError(
            f"enumerating words with n={n} over {alphabet_size} letters would "
            f"generate {total} words (length {alphabet_size * n} exceeds cap {cap})",
            count=total,
        )
    if stop is None or stop > total:
        stop = total
    if start < 0 or start > stop:
        raise ValueError(f"invalid rank range [{start}, {stop})")

    current = list(word_at_rank(n, alphabet_size, start).letters) if start < stop else []
    for _ in range(stop - start):
        yield Word(tuple(current), alphabet_size)
        if not _advance(current):
            break


def word_rank(word: Word) -> int:
    """Lexicographic rank of a word within its word space (0-based)."""
    counts = [word.n] * word.alphabet_size
    rank = 0
    for letter in word.letters:
        for k in range(letter):
            if counts[k] > 0:
                counts[k] -= 1
                rank += multinomial(counts)
                counts[k] += 1
        counts[letter] -= 1
    return rank


def word_at_rank(n: int, alphabet_size: int, rank: int) -> Word:
    """Inverse of :func:`word_rank`."""
    _validate_size(n, alphabet_size)
    total = word_count(n, alphabet_size)
    if not 0 <= rank < total:
        raise ValueError(f"rank {rank} outside 0..{total - 1}")
    counts = [n] * alphabet_size
    letters = []
    for _ in range(alphabet_size * n):
        for k in range(alphabet_size):
            if counts[k] == 0:
                continue
            counts[k] -= 1
            block = multinomial(counts)
            if rank < block:
                letters.append(k)
                break
            rank -= block
            counts[k] += 1
    return Word(tuple(letters), alphabet_size)


def sample_word(n: int, alphabet_size: int = 2, seed: int = 0) -> Word:
    """Uniform draw from the word space: a seeded shuffle of the fixed multiset."""
    _validate_size(n, alphabet_size)
    rng = np.random.default_rng(seed)
    base = np.repeat(np.arange(alphabet_size), n)
    return Word(tuple(int(k) for k in rng.permutation(base)), alphabet_size)


def prefix_counts(word: Word) -> np.ndarray:
    """counts[k, j] = occurrences of letter k among the first j letters, j = 0..len.

    Column sums satisfy sum_k counts[k, j] = j.
    """
    length = len(word)
    indicator = np.zeros((word.alphabet_size, length), dtype=np.int64)
    indicator[np.fromiter(word.letters, dtype=np.int64), np.arange(length)] = 1
    counts = np.zeros((word.alphabet_size, length + 1), dtype=np.int64)
    np.cumsum(indicator, axis=1, out=counts[:, 1:])
    return counts


@dataclass(frozen=True)
class StepFunction:
    """Non-decreasing step function [0,1] -> [0,1] taking values k/n.

    ``heights[i-1]`` is the integer numerator of the value on ((i-1)/n, i/n).
    """

    heights: tuple[int, ...]

    def __post_init__(self):
        n = len(self.heights)
        if n == 0:
            raise ValueError("step function needs at least one level")
        previous = 0
        for h in self.heights:
            if not 0 <= h <= n:
                raise ValueError(f"height {h} outside 0..{n}")
            if h < previous:
                raise ValueError("heights must be non-decreasing")
            previous = h

    @property
    def n(self) -> int:
        return len(self.heights)

    @property
    def values(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(h, self.n) for h in self.heights)

    def __call__(self, x: float) -> float:
        if x <= 0.0:
            return self.heights[0] / self.n
        if x >= 1.0:
            return self.heights[-1] / self.n
        i = min(self.n - 1, max(0, math.ceil(x * self.n) - 1))
        return self.heights[i] / self.n


def step_function(word: Word) -> StepFunction:
    """Step-function view of a two-letter word.

    Level i is (number of B's before the i-th A) / n; equivalently the i-th A
    sits at position i + heights[i-1].
    """
    if word.alphabet_size != 2:
        raise UnsupportedAlphabetError(
            f"step functions are defined for two-letter words, got alphabet size {word.alphabet_size}"
        )
    heights = []
    seen_b = 0
    for k in word.letters:
        if k == 0:
            heights.append(seen_b)
        else:
            seen_b += 1
    return StepFunction(tuple(heights))


def word_from_step_function(sf: StepFunction) -> Word:
    """Reconstruct the unique two-letter word whose step function is ``sf``."""
    n = sf.n
    letters = [1] * (2 * n)
    for i, h in enumerate(sf.heights, start=1):
        letters[i + h - 1] = 0
    return Word(tuple(letters), 2)
