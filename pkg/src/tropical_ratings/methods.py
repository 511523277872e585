"""Rating vectors from a pairwise comparison matrix.

Three methods are provided: the principal (Perron) eigenvector, row
geometric means, and log-Chebyshev approximation, which minimises
``max_ij a_ij x_j / x_i``. The log-Chebyshev optimum may be a whole cone
of vectors; from it the best and the worst differentiating vectors
(largest and smallest max/min ratio) are extracted.
"""

from dataclasses import dataclass, field

import numpy as np

from .matrices import ComparisonMatrix, RatingVector
from .maxplus import (
    conjugate_transpose,
    is_linearly_dependent,
    kleene_star,
    spectral_radius,
    trop_mul,
)

POWER_TOL = 1e-12
POWER_MAX_ITER = 10_000


class ConvergenceFailure(RuntimeError):
    """Power iteration did not settle within the iteration cap."""


def _entries(a):
    if isinstance(a, ComparisonMatrix):
        return a.entries
    return ComparisonMatrix.from_full(a).entries


def principal_eigenvector_rate(a, tol=POWER_TOL, max_iter=POWER_MAX_ITER):
    """Perron vector of ``a`` by power iteration, max-normalised (SPE)."""
    m = _entries(a)
    x = np.ones(m.shape[0])
    for _ in range(max_iter):
        y = m @ x
        y /= y.max()
        if np.abs(y - x).max() < tol:
            return RatingVector(y, "SPE")
        x = y
    raise ConvergenceFailure(f"power iteration did not converge in {max_iter} steps")


def geometric_mean_rate(a):
    """Row geometric means, max-normalised (SGM)."""
    m = _entries(a)
    x = np.exp(np.log(m).mean(axis=1))
    return RatingVector(x, "SGM")


def log_chebyshev_objective(a, x):
    """``max_ij a_ij * x_j / x_i``; its minimum over positive ``x`` is the spectral radius."""
    m = _entries(a)
    x = np.asarray(x, dtype=float).ravel()
    if np.any(x <= 0):
        raise ValueError("x must be positive")
    return float((m * x[None, :] / x[:, None]).max())


@dataclass(frozen=True, eq=False)
class SolutionCone:
    """All log-Chebyshev optimal vectors, as max-linear spans of ``generators``.

    ``kleene`` is the unpruned Kleene matrix ``(A / lam)*`` and
    ``generators`` its linearly independent columns.
    """

    generators: np.ndarray
    kleene: np.ndarray = field(repr=False)
    lam: float
    unique: bool

    @property
    def delta_best(self):
        """Largest Hilbert seminorm over the cone, ``1^T B B^- 1``."""
        b = self.generators
        return float(trop_mul(b, conjugate_transpose(b)).max())

    @property
    def delta_worst(self):
        """Smallest Hilbert seminorm over the cone, ``1^T (A / lam)* 1``."""
        return float(self.kleene.max())


def prune_columns(b):
    """Drop columns that are max-linear combinations of the remaining ones.

    Columns are visited left to right; a deleted column is not reconsidered.
    """
    b = np.asarray(b, dtype=float)
    keep = list(range(b.shape[1]))
    for j in range(b.shape[1]):
        others = [c for c in keep if c != j]
        if others and is_linearly_dependent(b[:, j], b[:, others]):
            keep.remove(j)
    return b[:, keep]


def solve_cone(a):
    m = _entries(a)
    lam = spectral_radius(m)
    kleene = kleene_star(m / lam)
    generators = prune_columns(kleene)
    return SolutionCone(generators, kleene, lam, generators.shape[1] == 1)


def _normalized_columns(b):
    return b / b.max(axis=0, keepdims=True)


def best_differentiating(cone):
    """Cone member with the largest max/min ratio (SCB).

    The generating matrix is ``B (I ⊕ B_lk^- B)`` where column ``k`` of the
    pruned generators has the largest seminorm and ``l`` indexes its
    smallest entry (lowest index wins ties). The representative is the
    generating column ``k``, which is ``b_k`` itself.
    """
    b = cone.generators
    seminorms = b.max(axis=0) / b.min(axis=0)
    k = int(np.argmax(seminorms))
    l = int(np.argmin(b[:, k]))
    b_lk = np.zeros_like(b)
    b_lk[l, k] = b[l, k]
    m = b.shape[1]
    gen = trop_mul(b, np.maximum(np.eye(m), trop_mul(conjugate_transpose(b_lk), b)))
    return RatingVector(gen[:, k], "SCB")


def worst_generators(a, cone):
    """Generating matrix ``(delta^-1 1 1^T ⊕ A / lam)*`` of the worst-differentiating set."""
    m = _entries(a)
    n = m.shape[0]
    delta = cone.delta_worst
    return kleene_star(np.maximum(np.full((n, n), 1.0 / delta), m / cone.lam))


def worst_differentiating(a, cone):
    """Cone member with the smallest max/min ratio (SCW).

    The representative is the max-combination of the generating columns,
    each first scaled to a maximum entry of 1.
    """
    gen = worst_generators(a, cone)
    return RatingVector(_normalized_columns(gen).max(axis=1), "SCW")


def log_chebyshev_rate(a):
    """Solve the log-Chebyshev problem; return ``(cone, best, worst)``."""
    m = _entries(a)
    cone = solve_cone(m)
    return cone, best_differentiating(cone), worst_differentiating(m, cone)


def rate_all(a):
    """Rating vectors from all methods, keyed SPE, SGM, SCB, SCW."""
    m = _entries(a)
    _, best, worst = log_chebyshev_rate(m)
    return {
        "SPE": principal_eigenvector_rate(m),
        "SGM": geometric_mean_rate(m),
        "SCB": best,
        "SCW": worst,
    }
