"""Acceptance criteria, one test each.

Every test prints a single ``criterion N: PASS|FAIL ...`` line (shown even
without ``-s``) and then asserts. Run ``pytest tests/test_acceptance.py -v``.
"""

import itertools
import json
import math
import time

import numpy as np
import pytest

from tropical_ratings.fixtures import (
    GOLDEN_INTERVALS,
    GOLDEN_RANKS,
    GOLDEN_RATINGS,
    GOLDEN_UNIQUE,
    fixture_document,
)
from tropical_ratings.matrices import ComparisonMatrix, ValidationError
from tropical_ratings.maxplus import (
    conjugate_transpose,
    hilbert_seminorm,
    kleene_star,
    spectral_radius,
    trop_add,
    trop_mul,
)
from tropical_ratings.methods import log_chebyshev_objective, log_chebyshev_rate, rate_all
from tropical_ratings.ranking import interval_combine, ranks_from_ratings, rank_tag
from tropical_ratings.stats import (
    chebyshev_rank_distance,
    frequency_table,
    hamming_rank_distance,
    kendall_tau,
    match_table,
    pearson,
    within_distance_counts,
)
from tropical_ratings.survey import parse_batch, serialize_batch

from conftest import fixture_matrix, random_batch_document, random_scale_matrix

RIDS = ("1", "2", "3")


@pytest.fixture
def verdict(capsys):
    def emit(number, ok, detail):
        with capsys.disabled():
            print(f"\ncriterion {number}: {'PASS' if ok else 'FAIL'} {detail}")
        assert ok, detail

    return emit


@pytest.fixture(scope="module")
def random_set():
    rng = np.random.default_rng(20240601)
    return [random_scale_matrix(rng, 3 + k % 2) for k in range(200)]


def test_criterion_1_golden_vectors(verdict):
    start = time.perf_counter()
    worst, failures = 0.0, []
    for rid in RIDS:
        got = rate_all(fixture_matrix(rid))
        for tag, expected in GOLDEN_RATINGS[rid].items():
            err = float(np.abs(got[tag].scores - np.asarray(expected)).max())
            worst = max(worst, err)
            if err > 1e-3:
                failures.append(f"{tag}({rid}) err {err:.1e}")
    elapsed = time.perf_counter() - start
    ok = not failures and elapsed < 1.0
    verdict(1, ok, f"12 vectors, max|err| = {worst:.1e}, {elapsed:.3f} s {failures}")


def test_criterion_2_rank_vectors(verdict):
    failures = []
    for rid in RIDS:
        got = rate_all(fixture_matrix(rid))
        for tag, vec in got.items():
            r = ranks_from_ratings(vec).ranks
            if r != GOLDEN_RANKS[rid][rank_tag(tag)]:
                failures.append(f"{rank_tag(tag)}({rid}) = {r}")
    tie = ranks_from_ratings(rate_all(fixture_matrix("2"))["SCW"]).ranks
    ok = not failures and tie == (1, 2, 3, 5, 4, 6)
    verdict(2, ok, f"12 rank vectors, RSCW(2) tie case = {tie} {failures}")


def test_criterion_3_uniqueness(verdict):
    failures = []
    for rid in RIDS:
        cone, best, worst = log_chebyshev_rate(fixture_matrix(rid))
        same = bool(np.abs(best.scores - worst.scores).max() <= 1e-9)
        if cone.unique != GOLDEN_UNIQUE[rid] or same != GOLDEN_UNIQUE[rid]:
            failures.append(f"respondent {rid} unique={cone.unique} same={same}")
        if rid in GOLDEN_INTERVALS:
            iv = interval_combine(best.scores, worst.scores)
            err = float(np.abs(iv - np.asarray(GOLDEN_INTERVALS[rid])).max())
            if err > 1e-3:
                failures.append(f"intervals({rid}) err {err:.1e}")
    verdict(3, not failures, f"unique = 1 only; intervals of 2 and 3 within 1e-3 {failures}")


def grid_minimum(m, points=50):
    """Smallest objective over a log grid with x_1 = 1; vectorised over the grid."""
    n = m.shape[0]
    axis = np.linspace(math.log(m.min()), math.log(m.max()), points)
    grids = np.meshgrid(*([axis] * (n - 1)), indexing="ij")
    y = np.stack([np.zeros_like(grids[0])] + list(grids)).reshape(n, -1)
    best = np.full(y.shape[1], -np.inf)
    for i in range(n):
        for j in range(n):
            if i != j:
                best = np.maximum(best, math.log(m[i, j]) + y[j] - y[i])
    return float(np.exp(best.min()))


def test_criterion_4_optimality(verdict, random_set):
    start = time.perf_counter()
    failures = []
    for idx, a in enumerate(random_set):
        m = a.entries
        lam = spectral_radius(m)
        _, best, worst = log_chebyshev_rate(a)
        for tag, v in (("SCB", best), ("SCW", worst)):
            if abs(log_chebyshev_objective(m, v.scores) - lam) > 1e-9 * max(1.0, lam):
                failures.append(f"#{idx} {tag} objective")
        # 50^(n-1) points: 50^3 for n = 4, 50^2 for n = 3
        if grid_minimum(m) < lam * (1 - 1e-9):
            failures.append(f"#{idx} grid beats lambda")
    elapsed = time.perf_counter() - start
    ok = not failures and elapsed < 120
    verdict(4, ok, f"200 matrices, objective = lambda, grid finds nothing better, {elapsed:.1f} s {failures[:5]}")


def test_criterion_5_seminorm_extremality(verdict, random_set):
    failures = []
    for idx, a in enumerate(random_set):
        m = a.entries
        star = kleene_star(m / spectral_radius(m))
        big = float(trop_mul(star, conjugate_transpose(star)).max())  # 1'BB^-1
        small = float(star.max())  # 1'(A/lambda)*1
        _, best, worst = log_chebyshev_rate(a)
        hb, hw = hilbert_seminorm(best.scores), hilbert_seminorm(worst.scores)
        if abs(hb - big) > 1e-9 * big or abs(hw - small) > 1e-9 * small:
            failures.append(f"#{idx} seminorms {hb}/{big} {hw}/{small}")
        if hb < hw * (1 - 1e-12):
            failures.append(f"#{idx} SCB below SCW")
    verdict(5, not failures, f"200 matrices, seminorm identities within 1e-9 relative {failures[:5]}")


def test_criterion_6_consistent_fixed_point(verdict):
    rng = np.random.default_rng(7)
    worst_vec, worst_lam = 0.0, 0.0
    for _ in range(100):
        x = rng.uniform(0.05, 1.0, 6)
        target = x / x.max()
        a = ComparisonMatrix.consistent(x)
        for v in rate_all(a).values():
            worst_vec = max(worst_vec, float(np.abs(v.scores - target).max()))
        worst_lam = max(worst_lam, abs(spectral_radius(a.entries) - 1.0))
    ok = worst_vec <= 1e-9 and worst_lam <= 1e-12
    verdict(6, ok, f"100 generators, max|err| = {worst_vec:.1e}, max|lambda-1| = {worst_lam:.1e}")


def _kendall_loop(a, b):
    n = len(a)
    s = 0
    for i in range(n):
        for j in range(i + 1, n):
            s += np.sign(a[i] - a[j]) * np.sign(b[i] - b[j])
    return 2.0 * s / (n * (n - 1))


def _pearson_loop(a, b):
    n = len(a)
    ma, mb = sum(a) / n, sum(b) / n
    num = sum((p - ma) * (q - mb) for p, q in zip(a, b))
    return num / math.sqrt(sum((p - ma) ** 2 for p in a) * sum((q - mb) ** 2 for q in b))


def test_criterion_7_statistics(verdict):
    checks = {
        "tau (1,2,3)/(1,3,2)": abs(kendall_tau((1, 2, 3), (1, 3, 2)) - 1 / 3) < 1e-15,
        "tau reversed": kendall_tau((1, 2, 3, 4), (4, 3, 2, 1)) == -1.0,
        "pearson linear": abs(pearson((1, 2, 3), (2, 4, 6)) - 1.0) < 1e-15,
        "pearson hand": abs(pearson((1, 2, 3), (1, 3, 2)) - 0.5) < 1e-15,
        "chebyshev": chebyshev_rank_distance((1, 2, 3, 4, 5, 6), (6, 2, 3, 4, 5, 1)) == 5,
        "hamming": hamming_rank_distance((2, 1, 5, 6, 3, 4), (2, 1, 5, 3, 4, 6)) == 3,
    }
    rng = np.random.default_rng(3)
    for _ in range(300):
        n = int(rng.integers(2, 7))
        a, b = rng.integers(1, 7, n).tolist(), rng.integers(1, 7, n).tolist()
        if abs(kendall_tau(a, b) - _kendall_loop(a, b)) > 1e-12:
            checks["tau vs loop"] = False
        u, v = rng.normal(size=n + 1).tolist(), rng.normal(size=n + 1).tolist()
        if abs(pearson(u, v) - _pearson_loop(u, v)) > 1e-12:
            checks["pearson vs loop"] = False
        p, q = tuple(rng.permutation(n) + 1), tuple(rng.permutation(n) + 1)
        if chebyshev_rank_distance(p, q) != max(abs(s - t) for s, t in zip(p, q)):
            checks["chebyshev vs loop"] = False
        if hamming_rank_distance(p, q) != sum(s != t for s, t in zip(p, q)):
            checks["hamming vs loop"] = False

    rows = [dict(GOLDEN_RANKS[rid]) for rid in RIDS]
    t = match_table(rows)
    checks["match RSPE/RSGM = 3"] = t["RSPE", "RSGM"] == 3
    checks["match RR/RSR = 1"] = t["RR", "RSR"] == 1
    checks["match RR/RSCB = 2"] = t["RR", "RSCB"] == 2
    checks["match RSR/RSPE = 0"] = t["RSR", "RSPE"] == 0
    freq = frequency_table(rows, "RSPE")
    checks["freq RSPE"] = [(e.ranks, e.count) for e in freq] == [
        ((2, 1, 3, 5, 4, 6), 1), ((3, 1, 6, 5, 2, 4), 1), ((3, 2, 5, 4, 1, 6), 1)]
    counts = within_distance_counts(rows, "RSGM", (3, 1, 6, 5, 2, 4))
    checks["within-distance RSGM"] = counts == [1, 1, 1, 1, 2, 3, 3]
    checks["count(1) = count(0)"] = all(
        within_distance_counts(rows, tag, rows[k][tag])[1] == within_distance_counts(rows, tag, rows[k][tag])[0]
        for tag in rows[0] for k in range(3)
    )
    failed = [k for k, ok in checks.items() if not ok]
    verdict(7, not failed, f"{len(checks)} checks, failed: {failed}")


def _cycle_mean(m):
    n = m.shape[0]
    best = 0.0
    for k in range(1, n + 1):
        for cyc in itertools.permutations(range(n), k):
            if cyc[0] != min(cyc):
                continue
            prod = 1.0
            for s in range(k):
                prod *= m[cyc[s], cyc[(s + 1) % k]]
            best = max(best, prod ** (1.0 / k))
    return best


def test_criterion_8_maxplus(verdict):
    rng = np.random.default_rng(8)
    dyadic = lambda shape: 2.0 ** rng.integers(-4, 5, shape)
    checks = {"idempotence": True, "distributivity": True, "involution": True, "cycle mean": True}
    for _ in range(40):
        n = int(rng.integers(2, 7))
        a, b, c = dyadic((n, n)), dyadic((n, n)), dyadic((n, n))
        if not np.array_equal(trop_mul(a, trop_add(b, c)), trop_add(trop_mul(a, b), trop_mul(a, c))):
            checks["distributivity"] = False
        if not np.array_equal(conjugate_transpose(conjugate_transpose(a)), a):
            checks["involution"] = False
        lam = spectral_radius(a)
        if abs(lam - _cycle_mean(a)) > 1e-12 * lam:
            checks["cycle mean"] = False
        s = kleene_star(a / lam)
        if np.abs(trop_mul(s, s) - s).max() > 1e-12 * s.max():
            checks["idempotence"] = False
    failed = [k for k, ok in checks.items() if not ok]
    verdict(8, not failed, f"40 random matrices n <= 6, failed: {failed}")


def test_criterion_9_round_trip(verdict):
    rng = np.random.default_rng(9)
    batch = parse_batch(json.dumps(random_batch_document(rng, 50)))
    identity = parse_batch(serialize_batch(batch)) == batch
    bad = random_batch_document(rng, 2)
    bad["respondents"][1]["comparisons"][0]["value"] = "6"
    try:
        parse_batch(json.dumps(bad))
        rejected = False
    except ValidationError:
        rejected = True
    doc = json.dumps(fixture_document())
    try:
        parse_batch(doc)
        strict_rejects_r2 = False
    except ValidationError:
        strict_rejects_r2 = True
    relaxed = parse_batch(doc, strict_scale=False).records[1].scores[2] == 0.75
    ok = identity and rejected and strict_rejects_r2 and relaxed
    verdict(9, ok, f"50-respondent identity={identity}, off-scale rejected={rejected}, "
                   f"3/4 rejected strict={strict_rejects_r2}, accepted relaxed={relaxed}")
