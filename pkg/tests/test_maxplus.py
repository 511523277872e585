import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from conftest import fixture_matrix
from tropical_ratings.maxplus import (
    SpectralRadiusExceedsOne,
    conjugate_transpose,
    dependence_value,
    hilbert_seminorm,
    is_linearly_dependent,
    kleene_star,
    spectral_radius,
    trop_add,
    trop_mul,
    trop_power,
    trop_trace,
)

# entries on a dyadic grid keep products exact, so identities hold bit for bit
dyadic = st.integers(0, 16).map(lambda k: k / 4)


def square(n):
    return arrays(float, (n, n), elements=dyadic)


def cycle_mean_oracle(a):
    """Largest geometric-mean weight over all simple cycles (brute force)."""
    n = a.shape[0]
    best = 0.0
    for length in range(1, n + 1):
        for nodes in itertools.permutations(range(n), length):
            if nodes[0] != min(nodes):
                continue
            w = 1.0
            for u, v in zip(nodes, nodes[1:] + nodes[:1]):
                w *= a[u, v]
            best = max(best, w ** (1.0 / length))
    return best


def kleene_oracle(a):
    """I ⊕ A ⊕ ... ⊕ A^(n-1) by explicit triple loops."""
    n = len(a)
    power = [[1.0 if i == j else 0.0 for j in range(n)] for i in range(n)]
    acc = [row[:] for row in power]
    for _ in range(n - 1):
        power = [[max(power[i][k] * a[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
        acc = [[max(acc[i][j], power[i][j]) for j in range(n)] for i in range(n)]
    return np.array(acc)


def test_trop_add_examples():
    a = np.array([[1.0, 2], [3, 4]])
    np.testing.assert_array_equal(trop_add(a, [[4, 1], [0, 5]]), [[4, 2], [3, 5]])
    np.testing.assert_array_equal(trop_add(a, a), a)
    np.testing.assert_array_equal(trop_add(a, np.zeros((2, 2))), a)


def test_trop_add_shape_mismatch():
    with pytest.raises(ValueError):
        trop_add(np.ones((2, 2)), np.ones((2, 3)))


def test_trop_mul_examples():
    a = np.array([[1.0, 2], [3, 4]])
    np.testing.assert_array_equal(trop_mul(np.eye(2), a), a)
    np.testing.assert_array_equal(trop_mul(a, [[1], [1]]), [[2], [4]])
    np.testing.assert_array_equal(trop_mul(a, np.ones(2)), [2, 4])
    with pytest.raises(ValueError):
        trop_mul(np.ones((2, 3)), np.ones((2, 2)))


def test_trop_mul_entry_matches_expansion():
    rng = np.random.default_rng(7)
    a, b = rng.random((2, 2)), rng.random((2, 2))
    c = trop_mul(a, b)
    assert c[0, 0] == max(a[0, 0] * b[0, 0], a[0, 1] * b[1, 0])
    assert c[1, 0] == max(a[1, 0] * b[0, 0], a[1, 1] * b[1, 0])


def test_conjugate_transpose():
    np.testing.assert_array_equal(conjugate_transpose(np.array([2.0, 4.0])), [0.5, 0.25])
    np.testing.assert_array_equal(conjugate_transpose(np.array([2.0, 0.0])), [0.5, 0.0])
    col = np.array([[2.0], [4.0]])
    np.testing.assert_array_equal(conjugate_transpose(col), [[0.5, 0.25]])
    m = np.array([[1.0, 2.0], [0.0, 4.0]])
    np.testing.assert_array_equal(conjugate_transpose(m), [[1.0, 0.0], [0.5, 0.25]])


def test_trace():
    assert trop_trace(np.eye(3)) == 1.0
    assert trop_trace([[0.5, 9], [9, 0.7]]) == 0.7
    assert trop_trace(fixture_matrix("2").entries) == 1.0
    with pytest.raises(ValueError):
        trop_trace(np.ones((2, 3)))


def test_power():
    a = np.array([[0.0, 2.0], [3.0, 0.0]])
    np.testing.assert_array_equal(trop_power(a, 0), np.eye(2))
    np.testing.assert_array_equal(trop_power(a, 2), [[6.0, 0.0], [0.0, 6.0]])


@pytest.mark.parametrize("rid", ["1", "2", "3"])
def test_spectral_radius_respondents_match_cycle_enumeration(rid):
    a = fixture_matrix(rid).entries
    lam = spectral_radius(a)
    assert lam >= 1.0
    assert lam == pytest.approx(cycle_mean_oracle(a), rel=1e-12)


def test_spectral_radius_consistent_is_one():
    x = np.array([1.0, 2.5, 0.3, 7.0])
    a = x[:, None] / x[None, :]
    assert spectral_radius(a) == pytest.approx(1.0, abs=1e-12)


def test_spectral_radius_zero_and_nilpotent():
    assert spectral_radius(np.zeros((3, 3))) == 0.0
    assert spectral_radius(np.triu(np.ones((3, 3)), 1)) == 0.0


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 5).flatmap(square))
def test_spectral_radius_equals_max_cycle_mean(a):
    assert spectral_radius(a) == pytest.approx(cycle_mean_oracle(a), rel=1e-12, abs=1e-15)


def test_kleene_star_zero_matrix():
    np.testing.assert_array_equal(kleene_star(np.zeros((3, 3))), np.eye(3))


def test_kleene_star_rejects_large_radius():
    with pytest.raises(SpectralRadiusExceedsOne):
        kleene_star(np.array([[1.5, 0.0], [0.0, 0.2]]))


@pytest.mark.parametrize("rid", ["1", "2", "3"])
def test_kleene_star_of_normalised_respondent_matrix(rid):
    a = fixture_matrix(rid).entries
    scaled = a / spectral_radius(a)
    star = kleene_star(scaled)
    np.testing.assert_allclose(star, kleene_oracle(scaled.tolist()), rtol=1e-14)
    np.testing.assert_allclose(trop_mul(star, star), star, rtol=1e-12)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 5).flatmap(square))
def test_kleene_idempotent(a):
    lam = spectral_radius(a)
    if lam > 1:
        a = a / lam
    star = kleene_star(a)
    np.testing.assert_allclose(trop_mul(star, star), star, rtol=1e-12)


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 4).flatmap(lambda n: st.tuples(square(n), square(n), square(n))))
def test_semiring_laws(abc):
    a, b, c = abc
    np.testing.assert_array_equal(trop_add(a, b), trop_add(b, a))
    np.testing.assert_array_equal(trop_add(trop_add(a, b), c), trop_add(a, trop_add(b, c)))
    np.testing.assert_array_equal(trop_add(a, a), a)
    np.testing.assert_array_equal(trop_mul(trop_mul(a, b), c), trop_mul(a, trop_mul(b, c)))
    np.testing.assert_array_equal(trop_mul(a, trop_add(b, c)), trop_add(trop_mul(a, b), trop_mul(a, c)))
    eye = np.eye(a.shape[0])
    np.testing.assert_array_equal(trop_mul(eye, a), a)
    np.testing.assert_array_equal(trop_mul(a, eye), a)


positive = arrays(float, st.integers(1, 8), elements=st.floats(1e-3, 1e3))


@given(positive)
def test_conjugate_involution(x):
    np.testing.assert_allclose(conjugate_transpose(conjugate_transpose(x)), x, rtol=1e-15)


@given(arrays(float, st.integers(1, 8), elements=st.integers(-20, 20).map(lambda k: 2.0**k)))
def test_conjugate_involution_exact_on_powers_of_two(x):
    np.testing.assert_array_equal(conjugate_transpose(conjugate_transpose(x)), x)


def test_hilbert_seminorm_examples():
    assert hilbert_seminorm([1, 1, 1]) == 1.0
    assert hilbert_seminorm([0.25, 1, 0.5]) == 4.0
    with pytest.raises(ValueError):
        hilbert_seminorm([1.0, 0.0])


@given(positive, st.floats(1e-3, 1e3))
def test_hilbert_scale_invariant(x, c):
    assert hilbert_seminorm(c * x) == pytest.approx(hilbert_seminorm(x), rel=1e-12)


def test_dependence_examples():
    a = np.array([[1.0], [3.0]])
    assert is_linearly_dependent(2 * a[:, 0], a)
    two = np.array([[1.0, 0.2], [0.5, 2.0]])
    assert is_linearly_dependent(np.maximum(two[:, 0], two[:, 1]), two)
    # (1, 10) against (1, 1): b^-A = 1, A (b^-A)^- = (1, 1), value = max(1/1, 10/1) = 10
    assert dependence_value([1.0, 10.0], [[1.0], [1.0]]) == 10.0
    assert not is_linearly_dependent([1.0, 10.0], [[1.0], [1.0]])


def test_dependence_rejects_empty_columns():
    with pytest.raises(ValueError):
        is_linearly_dependent([1.0, 2.0], np.zeros((2, 0)))


@settings(max_examples=100, deadline=None)
@given(
    st.integers(1, 6).flatmap(
        lambda n: st.integers(1, 6).flatmap(
            lambda m: st.tuples(
                arrays(float, (n, m), elements=st.floats(0.05, 20)),
                arrays(float, m, elements=st.floats(0.05, 20)),
            )
        )
    )
)
def test_max_combinations_are_dependent(cols_coef):
    cols, coef = cols_coef
    b = trop_mul(cols, coef)
    assert is_linearly_dependent(b, cols)
