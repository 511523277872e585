"""Max-times (max-plus) matrix algebra over the nonnegative reals.

Addition is ``max``, multiplication is ordinary ``*``; 0 and 1 are the
neutral elements. Matrices are plain 2-D ``numpy`` arrays, vectors are
1-D arrays and are read as columns.
"""

import numpy as np

KLEENE_TOL = 1e-9
DEPENDENCE_TOL = 1e-9


class SpectralRadiusExceedsOne(ValueError):
    """Kleene star requested for a matrix with spectral radius above one."""


def _as_matrix(a, name="matrix"):
    a = np.asarray(a, dtype=float)
    if a.ndim == 1:
        a = a.reshape(-1, 1)
    if a.ndim != 2 or 0 in a.shape:
        raise ValueError(f"{name} must be a non-empty 2-D array, got shape {a.shape}")
    if np.any(a < 0) or not np.all(np.isfinite(a)):
        raise ValueError(f"{name} entries must be finite and nonnegative")
    return a


def _as_square(a, name="matrix"):
    a = _as_matrix(a, name)
    if a.shape[0] != a.shape[1]:
        raise ValueError(f"{name} must be square, got shape {a.shape}")
    return a


def trop_add(a, b):
    """Entrywise maximum of two equally shaped matrices."""
    a = _as_matrix(a, "a")
    b = _as_matrix(b, "b")
    if a.shape != b.shape:
        raise ValueError(f"shape mismatch: {a.shape} vs {b.shape}")
    return np.maximum(a, b)


def trop_mul(a, b):
    """Max-times product: ``c[i, j] = max_k a[i, k] * b[k, j]``.

    A 1-D ``b`` is treated as a column and the result is returned 1-D.
    """
    column = np.ndim(b) == 1
    a = _as_matrix(a, "a")
    b = _as_matrix(b, "b")
    if a.shape[1] != b.shape[0]:
        raise ValueError(f"inner dimensions differ: {a.shape} x {b.shape}")
    c = (a[:, :, None] * b[None, :, :]).max(axis=1)
    return c[:, 0] if column else c


def trop_power(a, k):
    """k-th max-times power of a square matrix; ``A^0 = I``."""
    a = _as_square(a)
    if k < 0:
        raise ValueError("power must be nonnegative")
    p = np.eye(a.shape[0])
    for _ in range(k):
        p = trop_mul(p, a)
    return p


def conjugate_transpose(a):
    """Multiplicative conjugate transpose.

    Nonzero entries are inverted and the array transposed; zeros stay zero.
    For a 1-D vector the reciprocal vector (a row) is returned as 1-D.
    """
    a = np.asarray(a, dtype=float)
    t = a.T
    out = np.zeros_like(t)
    nz = t != 0
    out[nz] = 1.0 / t[nz]
    return out


def trop_trace(a):
    """Maximum diagonal entry."""
    a = _as_square(a)
    return float(a.diagonal().max())


def spectral_radius(a):
    """Max over k = 1..n of ``trace(A^k) ** (1/k)``.

    Equal to the largest geometric-mean weight of a cycle in the
    weighted digraph of ``a``.
    """
    a = _as_square(a)
    n = a.shape[0]
    p = np.eye(n)
    lam = 0.0
    for k in range(1, n + 1):
        p = trop_mul(p, a)
        lam = max(lam, trop_trace(p) ** (1.0 / k))
    return lam


def kleene_star(a, tol=KLEENE_TOL):
    """``I ⊕ A ⊕ ... ⊕ A^(n-1)`` for a matrix with spectral radius <= 1."""
    a = _as_square(a)
    lam = spectral_radius(a)
    if lam > 1.0 + tol:
        raise SpectralRadiusExceedsOne(f"spectral radius {lam!r} exceeds 1")
    n = a.shape[0]
    p = np.eye(n)
    star = np.eye(n)
    for _ in range(n - 1):
        p = trop_mul(p, a)
        star = np.maximum(star, p)
    return star


def hilbert_seminorm(x):
    """Ratio of the largest to the smallest entry of a positive vector."""
    x = np.asarray(x, dtype=float).ravel()
    if x.size == 0 or np.any(x <= 0):
        raise ValueError("Hilbert seminorm needs a non-empty positive vector")
    return float(x.max() / x.min())


def dependence_value(b, columns):
    """Value of ``(A (b^- A)^-)^- b``; it is 1 exactly when ``b`` is spanned.

    The value is always >= 1 for positive ``b``.
    """
    b = np.asarray(b, dtype=float).ravel()
    a = _as_matrix(columns, "columns")
    if np.any(b <= 0):
        raise ValueError("b must be positive")
    if a.shape[0] != b.size:
        raise ValueError(f"column length {a.shape[0]} differs from len(b) = {b.size}")
    coef = conjugate_transpose(trop_mul(conjugate_transpose(b)[None, :], a))  # m x 1
    approx = trop_mul(a, coef)[:, 0]  # largest span member below b
    if np.any(approx == 0):
        return float("inf")
    return float(trop_mul(conjugate_transpose(approx)[None, :], b)[0])


def is_linearly_dependent(b, columns, tol=DEPENDENCE_TOL):
    """True if ``b`` is a max-linear combination of ``columns``."""
    columns = np.asarray(columns, dtype=float)
    if columns.ndim == 2 and columns.shape[1] == 0:
        raise ValueError("empty column set")
    return abs(dependence_value(b, columns) - 1.0) <= tol
