"""Batch statistics comparing rating and rank vectors across methods.

A *batch* is a sequence of mappings, one per respondent, from a method
tag (``"RR"``, ``"RSPE"``, ``"SGM"``, ...) to that respondent's vector.
"""

from collections import Counter
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .ranking import RankVector, order_string


class ZeroVariance(ValueError):
    """Pearson correlation is undefined for a constant input."""


def _pair(a, b):
    a = np.asarray(tuple(a) if isinstance(a, RankVector) else a, dtype=float).ravel()
    b = np.asarray(tuple(b) if isinstance(b, RankVector) else b, dtype=float).ravel()
    if a.shape != b.shape:
        raise ValueError(f"length mismatch: {a.size} vs {b.size}")
    return a, b


def chebyshev_rank_distance(a, b):
    """Largest absolute componentwise difference."""
    a, b = _pair(a, b)
    return int(np.abs(a - b).max()) if a.size else 0


def hamming_rank_distance(a, b):
    """Number of positions where the vectors differ."""
    a, b = _pair(a, b)
    return int(np.count_nonzero(a != b))


def kendall_tau(a, b, variant="a"):
    """Kendall rank correlation.

    ``variant="a"`` is ``2 / (n (n - 1)) * sum_{i<j} sgn(a_i - a_j) sgn(b_i - b_j)``
    with no tie correction. ``variant="b"`` divides the same sum by
    ``sqrt((n0 - t_a)(n0 - t_b))`` instead, where ``t_*`` count tied pairs.
    """
    a, b = _pair(a, b)
    n = a.size
    if n < 2:
        raise ValueError("Kendall tau needs at least two observations")
    da = np.sign(a[:, None] - a[None, :])
    db = np.sign(b[:, None] - b[None, :])
    iu = np.triu_indices(n, k=1)
    da, db = da[iu], db[iu]
    s = float(np.sum(da * db))
    if variant == "a":
        return s * 2.0 / (n * (n - 1))
    if variant == "b":
        denom = np.sqrt(float(np.count_nonzero(da)) * float(np.count_nonzero(db)))
        if denom == 0:
            raise ZeroVariance("Kendall tau-b undefined: an input is constant")
        return s / denom
    raise ValueError(f"unknown Kendall variant {variant!r}")


def pearson(a, b):
    """Sample Pearson correlation coefficient."""
    a, b = _pair(a, b)
    if a.size < 2:
        raise ValueError("Pearson correlation needs at least two observations")
    da = a - a.mean()
    db = b - b.mean()
    sa = np.sqrt(np.dot(da, da))
    sb = np.sqrt(np.dot(db, db))
    if sa == 0 or sb == 0:
        raise ZeroVariance("Pearson correlation undefined: an input has zero variance")
    r = float(np.dot(da, db) / (sa * sb))
    return max(-1.0, min(1.0, r))


@dataclass(frozen=True)
class MethodPairTable:
    """Square table indexed by method tags."""

    tags: tuple
    values: np.ndarray

    def __getitem__(self, key):
        u, v = key
        return self.values[self.tags.index(u), self.tags.index(v)]

    def to_rows(self):
        return [[self.values[i, j].item() for j in range(len(self.tags))] for i in range(len(self.tags))]


def _column(batch, tag):
    out = []
    for idx, rec in enumerate(batch):
        if tag not in rec:
            raise KeyError(f"respondent #{idx + 1} has no {tag!r} vector")
        out.append(rec[tag])
    return out


def match_table(batch, tags=("RR", "RSR", "RSPE", "RSGM", "RSCB", "RSCW")):
    """Count respondents whose rank vectors coincide for each pair of methods."""
    tags = tuple(tags)
    cols = {t: [tuple(v) for v in _column(batch, t)] for t in tags}
    m = len(tags)
    values = np.zeros((m, m), dtype=int)
    for i in range(m):
        for j in range(m):
            values[i, j] = sum(x == y for x, y in zip(cols[tags[i]], cols[tags[j]]))
    return MethodPairTable(tags, values)


@dataclass(frozen=True)
class GroupSummary:
    label: str
    threshold: int
    members: tuple
    count: int
    percent_visited: float
    percent_male: float
    percent_female: float


def consistency_groups(batch, attributes=None, thresholds=range(6), u="RR", v="RSR"):
    """Nested groups ``R_i`` of respondents with Chebyshev distance(u, v) <= i.

    ``attributes`` is an optional per-respondent sequence of mappings with
    ``"sex"`` and ``"visited"`` keys; percentages are of group members and
    are NaN for an empty group.
    """
    distances = [chebyshev_rank_distance(a, b) for a, b in zip(_column(batch, u), _column(batch, v))]
    groups = []
    for t in thresholds:
        members = tuple(i for i, d in enumerate(distances) if d <= t)
        count = len(members)
        pv = pm = pf = float("nan")
        if attributes is not None and count:
            attrs = [attributes[i] for i in members]
            pv = 100.0 * sum(bool(a.get("visited")) for a in attrs) / count
            pm = 100.0 * sum(a.get("sex") == "male" for a in attrs) / count
            pf = 100.0 * sum(a.get("sex") == "female" for a in attrs) / count
        groups.append(GroupSummary(f"R{t}", int(t), members, count, pv, pm, pf))
    return groups


@dataclass(frozen=True)
class SpreadSummary:
    mean: np.ndarray
    std: np.ndarray
    avg_std: float
    total_std: float
    ddof: int


def mean_and_std(batch, tag, ddof=0):
    """Componentwise mean and standard deviation of one method's vectors.

    ``ddof=0`` gives population deviations. ``total_std`` is the root of the
    sum of squared componentwise deviations.
    """
    if len(batch) == 0:
        raise ValueError("empty batch")
    x = np.array([np.asarray(v, dtype=float) for v in _column(batch, tag)])
    mean = x.mean(axis=0)
    std = x.std(axis=0, ddof=ddof) if x.shape[0] > ddof else np.full(x.shape[1], np.nan)
    return SpreadSummary(mean, std, float(std.mean()), float(np.sqrt(np.sum(std**2))), ddof)


def concatenate(batch, tag):
    """All respondents' vectors for ``tag`` joined end to end."""
    return np.concatenate([np.asarray(tuple(v), dtype=float) for v in _column(batch, tag)])


def concatenated_correlation(batch, tag_u, tag_v, kind="pearson", tau_variant="b"):
    """Correlation between the concatenated vectors of two methods.

    Concatenated rank vectors repeat every rank once per respondent, so
    Kendall's tau defaults to the tie-corrected variant here; pass
    ``tau_variant="a"`` for the uncorrected coefficient.
    """
    a = concatenate(batch, tag_u)
    b = concatenate(batch, tag_v)
    if kind == "pearson":
        return pearson(a, b)
    if kind == "kendall":
        return kendall_tau(a, b, variant=tau_variant)
    raise ValueError(f"unknown correlation kind {kind!r}")


def _pairwise(tags, corr, strict):
    tags = tuple(tags)
    m = len(tags)
    values = np.eye(m)
    for i, j in combinations(range(m), 2):
        try:
            r = corr(tags[i], tags[j])
        except ZeroVariance:
            if strict:
                raise
            r = float("nan")
        values[i, j] = values[j, i] = r
    return MethodPairTable(tags, values)


def correlation_table(batch, tags, kind="pearson", tau_variant="b", strict=True):
    """Correlations of concatenated vectors for every pair of ``tags``.

    With ``strict=False`` undefined coefficients are NaN instead of raising.
    """
    return _pairwise(tags, lambda u, v: concatenated_correlation(batch, u, v, kind, tau_variant), strict)


def criterion_correlation_table(batch, tags, criterion, strict=True):
    """Pearson correlation across respondents of one criterion's ratings."""
    cols = {t: np.array([float(np.asarray(v)[criterion]) for v in _column(batch, t)]) for t in tags}
    return _pairwise(tags, lambda u, v: pearson(cols[u], cols[v]), strict)


@dataclass(frozen=True)
class FrequencyEntry:
    ranks: tuple
    count: int
    order: str


def frequency_table(batch, tag, top_k=5, labels=None, ascii=False):
    """The ``top_k`` most frequent rank vectors, by count then lexicographically."""
    counts = Counter(tuple(v) for v in _column(batch, tag))
    ranked = sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))[:top_k]
    return [FrequencyEntry(r, c, order_string(RankVector(r), labels=labels, ascii=ascii)) for r, c in ranked]


def within_distance_counts(batch, tag, reference):
    """Cumulative counts of vectors within Hamming distance d of ``reference``, d = 0..n."""
    reference = tuple(reference)
    n = len(reference)
    dists = [hamming_rank_distance(v, reference) for v in _column(batch, tag)]
    hist = np.bincount(dists, minlength=n + 1)
    return [int(c) for c in np.cumsum(hist)]
