"""Word construction, enumeration, sampling, and step-function views."""

from fractions import Fraction

import numpy as np
import pytest

from trotterlab.combinatorics import binomial, multinomial
from trotterlab.errors import CapExceededError, UnsupportedAlphabetError
from trotterlab.words import (
    Word,
    enumerate_words,
    prefix_counts,
    sample_word,
    standard_word,
    step_function,
    word_at_rank,
    word_count,
    word_from_step_function,
    word_rank,
)

FIGURE_WORD = "AABBBBAAABAABBBAABAB"


def texts(stream):
    return [w.to_text() for w in stream]


class TestWordType:
    def test_from_text_round_trip(self):
        w = Word.from_text("AABB")
        assert w.letters == (0, 0, 1, 1)
        assert w.n == 2 and w.alphabet_size == 2
        assert w.to_text() == "AABB" and str(w) == "AABB"

    def test_parser_rejects_wrong_counts(self):
        with pytest.raises(ValueError):
            Word.from_text("AAB")
        with pytest.raises(ValueError):
            Word.from_text("AACC")  # B missing entirely
        with pytest.raises(ValueError):
            Word.from_text("A1B2")
        with pytest.raises(ValueError):
            Word.from_text("")

    def test_alphabet_inference(self):
        assert Word.from_text("ABC").alphabet_size == 3
        assert Word.from_text("AABB", alphabet_size=2).n == 2


class TestEnumerate:
    def test_n2_exact_order(self):
        assert texts(enumerate_words(2)) == ["AABB", "ABAB", "ABBA", "BAAB", "BABA", "BBAA"]

    def test_three_letters_n1(self):
        got = texts(enumerate_words(1, 3))
        assert len(got) == 6
        assert got == sorted(got)
        assert set(got) == {"ABC", "ACB", "BAC", "BCA", "CAB", "CBA"}

    def test_n8_stream_count(self):
        assert sum(1 for _ in enumerate_words(8)) == binomial(16, 8) == 12870

    def test_letter_counts_exhaustive(self):
        for n in range(1, 5):
            for w in enumerate_words(n, 2):
                assert all(w.letters.count(k) == n for k in range(2))
        for w in enumerate_words(2, 3):
            assert all(w.letters.count(k) == 2 for k in range(3))

    def test_counts_match_multinomial(self):
        # Every shape with N*n <= 16 whose stream is small enough to walk.
        for alphabet_size in range(2, 17):
            for n in range(1, 16 // alphabet_size + 1):
                total = multinomial([n] * alphabet_size)
                if total > 150_000:
                    continue
                seen = sum(1 for _ in enumerate_words(n, alphabet_size, cap=16))
                assert seen == total == word_count(n, alphabet_size)

    def test_cap_error_names_count(self):
        with pytest.raises(CapExceededError) as err:
            list(enumerate_words(13, 2))
        assert err.value.count == binomial(26, 13)
        assert str(binomial(26, 13)) in str(err.value)

    def test_cap_overridable(self):
        stream = enumerate_words(13, 2, cap=26, stop=3)
        assert len(texts(stream)) == 3

    def test_rank_round_trip(self):
        for n, alphabet_size in [(3, 2), (2, 3)]:
            all_words = list(enumerate_words(n, alphabet_size))
            for rank, w in enumerate(all_words):
                assert word_rank(w) == rank
                assert word_at_rank(n, alphabet_size, rank) == w

    def test_rank_range_partition(self):
        full = texts(enumerate_words(3, 2))
        pieces = []
        for lo in range(0, 20, 7):
            pieces += texts(enumerate_words(3, 2, start=lo, stop=min(lo + 7, 20)))
        assert pieces == full


class TestStandardWord:
    def test_two_letters(self):
        assert standard_word(2).to_text() == "ABAB"
        assert standard_word(3).to_text() == "ABABAB"

    def test_three_letters(self):
        assert standard_word(1, 3).to_text() == "ABC"
        assert standard_word(2, 3).to_text() == "ABCABC"


class TestSampleWord:
    def test_two_element_space(self):
        seen = {sample_word(1, 2, seed).to_text() for seed in range(32)}
        assert seen == {"AB", "BA"}

    def test_deterministic(self):
        assert sample_word(3, 2, seed=99) == sample_word(3, 2, seed=99)

    def test_chi_square_uniform_over_w2(self):
        cells = {w.to_text(): 0 for w in enumerate_words(2)}
        draws = 60_000
        for seed in range(draws):
            cells[sample_word(2, 2, seed).to_text()] += 1
        expected = draws / 6
        statistic = sum((c - expected) ** 2 / expected for c in cells.values())
        # chi-square critical value, 5 degrees of freedom, significance 0.001
        assert statistic < 20.515


class TestPrefixCounts:
    def test_aabb(self):
        counts = prefix_counts(Word.from_text("AABB"))
        assert counts[0, 1:].tolist() == [1, 2, 2, 2]
        assert counts[1, 1:].tolist() == [0, 0, 1, 2]

    def test_abab(self):
        assert prefix_counts(Word.from_text("ABAB"))[0, 1:].tolist() == [1, 1, 2, 2]

    def test_figure_word_totals(self):
        counts = prefix_counts(Word.from_text(FIGURE_WORD))
        assert counts[0, 20] == 10 and counts[1, 20] == 10

    def test_column_sums_and_monotonicity(self):
        for w in enumerate_words(3, 2):
            counts = prefix_counts(w)
            length = len(w)
            assert counts.sum(axis=0).tolist() == list(range(length + 1))
            steps = np.diff(counts, axis=1)
            assert set(steps.ravel().tolist()) <= {0, 1}
            assert counts[:, -1].tolist() == [w.n, w.n]


class TestStepFunction:
    def test_single_letter_words(self):
        assert step_function(Word.from_text("AB")).heights == (0,)
        assert step_function(Word.from_text("BA")).heights == (1,)
        assert step_function(Word.from_text("BA")).values == (Fraction(1, 1),)

    def test_figure_word_heights(self):
        sf = step_function(Word.from_text(FIGURE_WORD))
        assert sf.heights == (0, 0, 4, 4, 4, 5, 5, 8, 8, 9)
        assert sf.values == tuple(Fraction(h, 10) for h in sf.heights)

    def test_rejects_other_alphabets(self):
        with pytest.raises(UnsupportedAlphabetError):
            step_function(Word.from_text("ABC"))

    def test_round_trip_bijection(self):
        for n in range(1, 7):
            seen = set()
            for w in enumerate_words(n, 2):
                sf = step_function(w)
                assert word_from_step_function(sf) == w
                seen.add(sf.heights)
            assert len(seen) == binomial(2 * n, n)

    def test_evaluation(self):
        sf = step_function(Word.from_text("ABBA"))  # heights (0, 2)
        assert sf(0.25) == 0.0
        assert sf(0.75) == 1.0
        assert sf(0.0) == 0.0 and sf(1.0) == 1.0

    def test_validation(self):
        from trotterlab.words import StepFunction

        with pytest.raises(ValueError):
            StepFunction((2, 1))
        with pytest.raises(ValueError):
            StepFunction((0, 3))
        with pytest.raises(ValueError):
            StepFunction(())
