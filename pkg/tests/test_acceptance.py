"""Acceptance suite: one test per release criterion, each printing a verdict line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the verdict lines.
"""

import itertools
import json
import math
import time
from fractions import Fraction

import numpy as np
import pytest
from fastapi.testclient import TestClient

from trotterlab import cli
from trotterlab.combinatorics import (
    binomial,
    large_deviation_ratio,
    multinomial_ratio_identity,
    reflection_bound,
    stirling_proportion,
)
from trotterlab.experiments import concentration_experiment
from trotterlab.linalg import expm, expm_series, matrix_norm, matrix_to_json, matrix_unit
from trotterlab.metrics import (
    area_distance,
    max_gap_distance,
    span,
    swap_distance,
    swap_distance_bfs,
)
from trotterlab.products import (
    batch_word_products,
    bound_onsets,
    check_lipschitz,
    closed_form_product,
    lie_trotter,
    word_product,
)
from trotterlab.service import create_app
from trotterlab.words import enumerate_words, standard_word

E11 = matrix_unit(2, 0, 0)
E12 = matrix_unit(2, 0, 1)
E21 = matrix_unit(2, 1, 0)


def verdict(name, ok, detail=""):
    print(f"[{'PASS' if ok else 'FAIL'}] {name}" + (f" — {detail}" if detail else ""))
    assert ok, f"{name}: {detail}"


def letters_array(n, alphabet_size=2):
    return np.array(
        [w.letters for w in enumerate_words(n, alphabet_size)], dtype=np.int8
    )


def test_theorem2_exactness():
    """n^2 * area == swap distance == BFS distance, exhaustively for n <= 4."""
    started = time.time()
    checked = 0
    for n in range(1, 5):
        all_words = list(enumerate_words(n, 2))
        for w, v in itertools.product(all_words, repeat=2):
            scaled_area = area_distance(w, v) * n**2
            direct = swap_distance(w, v)
            oracle = swap_distance_bfs(w, v)
            assert scaled_area == direct == oracle
            checked += 1
    elapsed = time.time() - started
    verdict(
        "theorem-2 exactness",
        elapsed < 60,
        f"{checked} pairs (incl. 70^2 at n=4), exact equality, {elapsed:.1f}s",
    )


def test_reflection_principle():
    """Far-word counts stay at or below 2*C(2n, n-M+1) for n <= 8, every M."""
    desk_count = None
    for n in range(1, 9):
        wst = standard_word(n)
        gaps = [max_gap_distance(w, wst) for w in enumerate_words(n, 2)]
        for m in range(1, n + 1):
            count = sum(1 for g in gaps if g >= Fraction(m, n))
            bound = reflection_bound(n, m)
            assert count <= bound, (n, m, count, bound)
            if (n, m) == (2, 2):
                desk_count = (count, bound)
    verdict(
        "reflection principle",
        desk_count == (5, 8),
        f"all n <= 8, all M; desk case n=2, M=2 gives {desk_count[0]} <= {desk_count[1]}",
    )


def _pairwise_swap_distances(words_list):
    """Vectorized inversion counts of the order-preserving matching, all pairs."""
    size = len(words_list)
    length = len(words_list[0])
    alphabet = words_list[0].alphabet_size
    letters = np.array([w.letters for w in words_list], dtype=np.int64)
    # occurrence index of each position within its letter
    rank = np.zeros((size, length), dtype=np.int64)
    occ = np.zeros((size, alphabet, length), dtype=np.int64)  # position of m-th occurrence
    for row in range(size):
        seen = [0] * alphabet
        for j, k in enumerate(letters[row]):
            rank[row, j] = seen[k]
            occ[row, k, seen[k]] = j
            seen[k] += 1
    upper = np.triu(np.ones((length, length), dtype=bool), k=1)
    out = np.zeros((size, size), dtype=np.int64)
    for i in range(size):
        perms = occ[:, letters[i], rank[i]]  # (size, length)
        inversions = ((perms[:, :, None] > perms[:, None, :]) & upper).sum(axis=(1, 2))
        out[i] = inversions
    return out


def test_section5_bounds():
    """Three-letter inequalities and the multinomial ratio identity."""
    from trotterlab.words import prefix_counts

    for n in (1, 2, 3):
        words3 = list(enumerate_words(n, 3))
        size = len(words3)
        wst_index = next(i for i, w in enumerate(words3) if w == standard_word(n, 3))
        dsw = _pairwise_swap_distances(words3)
        counts = np.stack([prefix_counts(w) for w in words3])  # (size, 3, 3n+1)
        # max prefix gap, all pairs: rho_inf = (2/n) * gap, so the swap bound
        # dsw <= N^2 n^2 rho_inf / 2 reads dsw <= 9 n * gap in integers
        gaps = np.zeros((size, size), dtype=np.int64)
        for i in range(size):
            gaps[i] = np.abs(counts[i][None] - counts).max(axis=(1, 2))
        assert np.all(dsw <= 9 * n * gaps)
        # span lemma in integers: gap-to-standard <= span + 1
        span_int = (counts.max(axis=1) - counts.min(axis=1)).max(axis=1)
        assert np.all(gaps[wst_index] <= span_int + 1)
        # cross-check the vectorized quantities against the scalar operations
        rng = np.random.default_rng(0)
        for _ in range(30):
            i, j = rng.integers(0, size, size=2)
            assert dsw[i, j] == swap_distance(words3[i], words3[j])
            assert Fraction(2 * int(gaps[i, j]), n) == max_gap_distance(words3[i], words3[j])
            assert Fraction(int(span_int[i]), n) == span(words3[i])
    identity_ok = all(
        multinomial_ratio_identity(n, m, alphabet)[0]
        == multinomial_ratio_identity(n, m, alphabet)[1]
        for alphabet in range(2, 6)
        for n in range(1, 13)
        for m in range(n + 1)
    )
    verdict(
        "three-letter bounds and ratio identity",
        identity_ok,
        "swap <= N^2 n^2 gap/2 and gap/2 <= span + 1/n, N=3, n <= 3; identity exact to n=12, N=5",
    )


def test_expm_correctness():
    """Scaling-and-squaring against the series oracle, plus exact special cases."""
    rng = np.random.default_rng(2024)
    worst = 0.0
    for _ in range(1000):
        d = int(rng.integers(1, 7))
        x = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
        x *= rng.uniform(0.0, 2.0) / max(matrix_norm(x, "frobenius"), 1e-30)
        oracle = expm_series(x, 40)
        err = matrix_norm(expm(x) - oracle, "frobenius") / max(
            matrix_norm(oracle, "frobenius"), 1.0
        )
        worst = max(worst, err)
    assert worst <= 1e-12
    nilpotent = matrix_norm(expm(E12) - (np.eye(2) + E12), "frobenius")
    diag = np.diag([0.3, -1.1 + 0.2j])
    diagonal = matrix_norm(expm(diag) - np.diag(np.exp(np.diag(diag))), "frobenius")
    assert nilpotent <= 1e-14 and diagonal <= 1e-14
    verdict(
        "matrix exponential",
        True,
        f"worst relative error {worst:.2e} over 1000 draws; special cases exact to 1e-14",
    )


def test_closed_form_n6():
    """Closed form equals the multiplied product for all 924 words at n = 6."""
    started = time.time()
    worst = 0.0
    count = 0
    for w in enumerate_words(6, 2):
        gap = np.abs(closed_form_product(w) - word_product(w, (E12, E11))).max()
        worst = max(worst, float(gap))
        count += 1
    elapsed = time.time() - started
    verdict(
        "closed-form product",
        count == 924 and worst <= 1e-12 and elapsed < 10,
        f"{count} words, worst gap {worst:.2e}, {elapsed:.1f}s",
    )


def test_lie_trotter_rate():
    """First-order error bound past its onset, and halving under n -> 2n."""
    onsets = bound_onsets(E12, E21, max_n=64)
    n0 = onsets["trotter"]
    assert n0 is not None and n0 <= 64
    target = expm(E12 + E21)
    scale = matrix_norm(E12 @ E21 - E21 @ E12, "one") * math.exp(
        matrix_norm(E12, "one") + matrix_norm(E21, "one")
    )
    for n in range(n0, 65):
        error = matrix_norm(lie_trotter(E12, E21, n) - target, "one")
        assert error <= scale / n
    errors = {}
    for k in range(6, 12):
        errors[2**k] = matrix_norm(lie_trotter(E12, E21, 2**k) - target, "one")
    ratios = [errors[2**k] / errors[2 ** (k + 1)] for k in range(6, 11)]
    assert all(1.8 <= r <= 2.2 for r in ratios)
    verdict(
        "alternating-product rate",
        True,
        f"bound holds from n0={n0}; halving ratios "
        + ", ".join(f"{r:.3f}" for r in ratios),
    )


def test_lipschitz_chain():
    """Distance between products bounded by the scaled area distance, all pairs."""
    onsets = bound_onsets(E12, E21, max_n=64)
    n = max(onsets["step_commute"], 6)  # exhaustive at one n <= 16
    assert n <= 16
    words_n = list(enumerate_words(n, 2))
    letters = letters_array(n)
    products = batch_word_products(letters, (E12, E21), n)
    prefix_a = np.cumsum(letters == 0, axis=1).astype(np.int32)
    lipschitz_scale = 2.0 * 1.0 * math.exp(2.0)  # 2 ||[A,B]||_1 e^{||A||_1 + ||B||_1}
    size = len(words_n)
    violations = 0
    for i in range(size):
        diff = products[i][None] - products
        lhs = np.abs(diff).sum(axis=1).max(axis=1)  # induced one-norm
        area = np.abs(prefix_a[i][None] - prefix_a).sum(axis=1) / n**2
        violations += int((lhs > area * lipschitz_scale + 1e-12).sum())
    rng = np.random.default_rng(5)
    for _ in range(100):
        i, j = rng.integers(0, size, size=2)
        assert check_lipschitz(words_n[i], words_n[j], (E12, E21)).holds
    verdict(
        "product map is Lipschitz in the area metric",
        violations == 0,
        f"all {size}^2 pairs at n={n}, 0 violations",
    )


def test_determinant_invariant():
    """det F(w) = e^{tr A + tr B} across the whole cloud, two fixture pairs."""
    from trotterlab.linalg import determinant

    worst = 0.0
    for pair in [(E12, E11), (E12, E21)]:
        expected = np.exp(np.trace(pair[0]) + np.trace(pair[1]))
        letters = letters_array(6)
        products = batch_word_products(letters, pair, 6)
        dets = (
            products[:, 0, 0] * products[:, 1, 1] - products[:, 0, 1] * products[:, 1, 0]
        )
        worst = max(worst, float(np.abs(dets - expected).max()))
        for row in range(0, letters.shape[0], 97):  # spot-check the LU path
            w = enumerate_words(6, 2, start=row, stop=row + 1)
            value = determinant(word_product(next(w), pair))
            assert abs(value - expected) <= 1e-10
    verdict(
        "determinant invariant",
        worst <= 1e-10,
        f"all 924 words at n=6, two pairs, worst gap {worst:.2e}",
    )


def test_concentration_trend():
    """Proportion within 0.5 is non-decreasing in n; commuting pairs collapse."""
    proportions = [
        concentration_experiment((E12, E21), n, threshold=0.5).proportion_within
        for n in (4, 6, 8)
    ]
    monotone = all(a <= b for a, b in zip(proportions, proportions[1:]))
    commuting = (np.diag([0.3, -0.2]).astype(complex), np.diag([0.1, 0.4]).astype(complex))
    collapse = all(
        concentration_experiment(commuting, 4, threshold=t).proportion_within == 1.0
        for t in (1e-10, 1e-6, 0.5, 10.0)
    )
    verdict(
        "concentration trend",
        monotone and collapse,
        "proportions " + ", ".join(f"{p:.4f}" for p in proportions) + " at n=4,6,8",
    )


def test_tail_numerics():
    """Log-gamma tail quantities agree with their asymptotic forms."""
    proportion = stirling_proportion(10**6, 2)
    limit = 1.10 * 2 * math.exp(-4)
    exact, asymptotic = large_deviation_ratio(10**4, 0.3)
    ratio = float(exact / asymptotic)
    verdict(
        "tail asymptotics",
        proportion <= limit and 0.99 <= ratio <= 1.01,
        f"stirling {proportion:.5f} <= {limit:.5f}; deviation ratio {ratio:.6f}",
    )


def test_cross_interface_determinism(tmp_path, capsys):
    """CLI files and service bodies are byte-identical for identical inputs."""
    client = TestClient(create_app())
    paths = {}
    for name, matrix in [("a", E12), ("b", E21)]:
        path = tmp_path / f"{name}.json"
        path.write_text(json.dumps(matrix_to_json(matrix)))
        paths[name] = str(path)
    matches = []
    for command, endpoint in [("concentrate", "/api/concentration"), ("cloud", "/api/cloud")]:
        out = tmp_path / f"{command}.json"
        code = cli.main([
            command, "--a", paths["a"], "--b", paths["b"], "--n", "5",
            "--mode", "sample", "--count", "64", "--seed", "13",
            "--output", str(out),
        ])
        capsys.readouterr()
        assert code == 0
        request = {
            "matrices": [matrix_to_json(E12), matrix_to_json(E21)],
            "n": 5,
            "mode": "sample",
            "count": 64,
            "seed": 13,
        }
        response = client.post(endpoint, json=request)
        matches.append(response.content == out.read_bytes())
    verdict(
        "cross-interface determinism",
        all(matches),
        "concentrate and cloud bytes identical between CLI and service",
    )
