"""Pairwise comparison matrices and rating vectors."""

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

RECIPROCITY_TOL = 1e-6
DIAGONAL_TOL = 1e-9

RATING_TAGS = ("SR", "SPE", "SGM", "SCB", "SCW")


class ValidationError(ValueError):
    """Input violates one or more data invariants.

    ``violations`` holds one human-readable message per broken invariant.
    """

    def __init__(self, violations):
        if isinstance(violations, str):
            violations = [violations]
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


def parse_number(value):
    """Parse a real given as a number, a decimal string or a ``"p/q"`` string."""
    if isinstance(value, bool):
        raise ValueError(f"not a number: {value!r}")
    if isinstance(value, (int, float)):
        return float(value)
    if isinstance(value, str):
        text = value.strip()
        if "/" in text:
            num, den = text.split("/", 1)
            return float(Fraction(int(num), int(den)))
        return float(text)
    raise ValueError(f"not a number: {value!r}")


def validate_reciprocity(entries):
    """List reciprocity violations of a square positive matrix.

    Off-diagonal pairs must satisfy ``|a_ij * a_ji - 1| <= 1e-6`` and the
    diagonal ``|a_ii - 1| <= 1e-9``. Cells are reported 1-based.
    """
    a = np.asarray(entries, dtype=float)
    violations = []
    n = a.shape[0]
    for i in range(n):
        if abs(a[i, i] - 1.0) > DIAGONAL_TOL:
            violations.append(f"diagonal cell ({i + 1},{i + 1}) = {a[i, i]:g}, expected 1")
    for i in range(n):
        for j in range(i + 1, n):
            if abs(a[i, j] * a[j, i] - 1.0) > RECIPROCITY_TOL:
                violations.append(
                    f"cell ({j + 1},{i + 1}) = {a[j, i]:g} is not the reciprocal "
                    f"of cell ({i + 1},{j + 1}) = {a[i, j]:g}"
                )
    return violations


@dataclass(frozen=True, eq=False)
class ComparisonMatrix:
    """Symmetrically reciprocal matrix of pairwise preference ratios.

    Only the upper triangle is taken from the caller; the diagonal is set
    to 1 and the lower triangle to exact reciprocals.
    """

    entries: np.ndarray = field(repr=False)

    def __post_init__(self):
        a = np.array(self.entries, dtype=float)
        a.setflags(write=False)
        object.__setattr__(self, "entries", a)

    @property
    def n(self):
        return self.entries.shape[0]

    @classmethod
    def from_upper(cls, n, upper):
        """Build from ``{(i, j): a_ij}`` with 0-based ``i < j`` covering every pair."""
        if n < 2:
            raise ValidationError(f"need at least 2 criteria, got {n}")
        a = np.ones((n, n))
        problems = []
        for i in range(n):
            for j in range(i + 1, n):
                if (i, j) not in upper:
                    problems.append(f"missing comparison ({i + 1},{j + 1})")
                    continue
                v = float(upper[(i, j)])
                if not np.isfinite(v) or v <= 0:
                    problems.append(f"cell ({i + 1},{j + 1}) = {v:g} is not positive")
                    continue
                a[i, j] = v
                a[j, i] = 1.0 / v
        if problems:
            raise ValidationError(problems)
        return cls(a)

    @classmethod
    def from_full(cls, entries):
        """Build from a full square matrix, checking positivity and reciprocity."""
        a = np.asarray(entries, dtype=float)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValidationError(f"comparison matrix must be square, got shape {a.shape}")
        if a.shape[0] < 2:
            raise ValidationError("need at least 2 criteria")
        if not np.all(np.isfinite(a)) or np.any(a <= 0):
            raise ValidationError("comparison matrix entries must be positive")
        violations = validate_reciprocity(a)
        if violations:
            raise ValidationError(violations)
        n = a.shape[0]
        return cls.from_upper(n, {(i, j): a[i, j] for i in range(n) for j in range(i + 1, n)})

    @classmethod
    def consistent(cls, x):
        """The consistent matrix ``a_ij = x_i / x_j`` generated by positive ``x``."""
        x = np.asarray(x, dtype=float)
        if np.any(x <= 0):
            raise ValidationError("generator vector must be positive")
        n = x.size
        return cls.from_upper(n, {(i, j): x[i] / x[j] for i in range(n) for j in range(i + 1, n)})

    def upper(self):
        n = self.n
        return {(i, j): float(self.entries[i, j]) for i in range(n) for j in range(i + 1, n)}

    def __eq__(self, other):
        if not isinstance(other, ComparisonMatrix):
            return NotImplemented
        return np.array_equal(self.entries, other.entries)

    def __array__(self, dtype=None, copy=None):
        return np.asarray(self.entries, dtype=dtype)


@dataclass(frozen=True, eq=False)
class RatingVector:
    """Positive per-criterion scores scaled so the largest equals 1."""

    scores: np.ndarray
    method: str

    def __post_init__(self):
        s = np.array(self.scores, dtype=float).ravel()
        if s.size == 0 or not np.all(np.isfinite(s)) or np.any(s <= 0):
            raise ValueError("rating scores must be finite and positive")
        s = s / s.max()
        s.setflags(write=False)
        object.__setattr__(self, "scores", s)

    def __len__(self):
        return self.scores.size

    def __getitem__(self, i):
        return self.scores[i]

    def __array__(self, dtype=None, copy=None):
        return np.asarray(self.scores, dtype=dtype)

    def __eq__(self, other):
        if not isinstance(other, RatingVector):
            return NotImplemented
        return self.method == other.method and np.array_equal(self.scores, other.scores)

    def __repr__(self):
        vals = ", ".join(f"{v:.4f}" for v in self.scores)
        return f"RatingVector({self.method}: {vals})"
