"""Rank vectors, preference-order strings and interval (best/worst) ratings."""

from dataclasses import dataclass

import numpy as np

TIE_TOL = 1e-9

RANK_TAGS = ("RR", "RSR", "RSPE", "RSGM", "RSCB", "RSCW")

SYMBOLS = {
    "unicode": {"strict": " ≻ ", "weak": " ⪰ ", "undetermined": " ∥ "},
    "ascii": {"strict": " > ", "weak": " >= ", "undetermined": " || "},
}


def rank_tag(rating_tag):
    """Rank-vector tag derived from a rating tag, e.g. ``SPE -> RSPE``."""
    return "R" + rating_tag


@dataclass(frozen=True)
class RankVector:
    """Ranks 1..n per criterion, rank 1 being most preferred.

    ``ratings`` optionally keeps the scores the ranks were derived from so
    that tied criteria can be rendered as weak preferences.
    """

    ranks: tuple
    source: str = ""
    ratings: tuple = None

    def __post_init__(self):
        ranks = tuple(int(r) for r in self.ranks)
        if sorted(ranks) != list(range(1, len(ranks) + 1)):
            raise ValueError(f"ranks {ranks} are not a permutation of 1..{len(ranks)}")
        object.__setattr__(self, "ranks", ranks)
        if self.ratings is not None:
            object.__setattr__(self, "ratings", tuple(float(v) for v in self.ratings))

    def __len__(self):
        return len(self.ranks)

    def __iter__(self):
        return iter(self.ranks)

    def __getitem__(self, i):
        return self.ranks[i]

    def order(self):
        """0-based criterion indices from most to least preferred."""
        return invert_permutation(self.ranks)


def invert_permutation(ranks):
    """Map ranks (1-based, per criterion) to criterion indices (0-based, per position)."""
    order = [0] * len(ranks)
    for idx, r in enumerate(ranks):
        order[r - 1] = idx
    return tuple(order)


def ranks_from_order(order):
    """Inverse of :func:`invert_permutation`."""
    ranks = [0] * len(order)
    for pos, idx in enumerate(order):
        ranks[idx] = pos + 1
    return tuple(ranks)


def ranks_from_ratings(x, source=None, tol=TIE_TOL):
    """Rank criteria by descending rating.

    Ratings equal within ``tol`` get consecutive ranks in criterion order.
    """
    scores = np.asarray(x, dtype=float).ravel()
    if source is None:
        method = getattr(x, "method", "")
        source = rank_tag(method) if method else ""
    order = sorted(range(scores.size), key=lambda i: -scores[i])
    # stable sort by value leaves near-ties (|diff| <= tol) possibly out of
    # index order; group them and reorder by index
    groups = []
    for i in order:
        if groups and abs(scores[groups[-1][0]] - scores[i]) <= tol:
            groups[-1].append(i)
        else:
            groups.append([i])
    final = [i for g in groups for i in sorted(g)]
    return RankVector(ranks_from_order(final), source, tuple(scores))


def _symbols(ascii):
    return SYMBOLS["ascii" if ascii else "unicode"]


def _label(labels, i):
    return labels[i] if labels is not None else f"C{i + 1}"


def order_string(r, ratings=None, labels=None, ascii=False, tol=TIE_TOL):
    """Criteria joined by ``≻`` in rank order, ``⪰`` between equal ratings.

    Tie information comes from ``ratings`` or, failing that, from the
    ratings stored on the rank vector.
    """
    if not isinstance(r, RankVector):
        r = RankVector(tuple(r))
    if ratings is None:
        ratings = r.ratings
    sym = _symbols(ascii)
    order = r.order()
    parts = [_label(labels, order[0])]
    for prev, cur in zip(order, order[1:]):
        weak = ratings is not None and abs(ratings[prev] - ratings[cur]) <= tol
        parts.append(sym["weak"] if weak else sym["strict"])
        parts.append(_label(labels, cur))
    return "".join(parts)


def interval_combine(best, worst):
    """Per-criterion ``[low, high]`` from two rating vectors, shape ``(n, 2)``."""
    b = np.asarray(best, dtype=float).ravel()
    w = np.asarray(worst, dtype=float).ravel()
    if b.shape != w.shape:
        raise ValueError(f"length mismatch: {b.size} vs {w.size}")
    return np.column_stack([np.minimum(b, w), np.maximum(b, w)])


def combined_order_string(intervals, labels=None, ascii=False, tol=TIE_TOL):
    """Order string for interval-valued ratings.

    Criteria are sorted by upper then lower bound, descending. Between
    neighbours ``a`` before ``b``: ``≻`` if ``low(a) > high(b)``, ``⪰`` if
    the intervals only touch, ``∥`` if they overlap.
    """
    iv = np.asarray(intervals, dtype=float)
    sym = _symbols(ascii)
    order = sorted(range(iv.shape[0]), key=lambda i: (-iv[i, 1], -iv[i, 0], i))
    parts = [_label(labels, order[0])]
    for a, b in zip(order, order[1:]):
        gap = iv[a, 0] - iv[b, 1]
        if gap > tol:
            rel = "strict"
        elif gap >= -tol:
            rel = "weak"
        else:
            rel = "undetermined"
        parts.append(sym[rel])
        parts.append(_label(labels, b))
    return "".join(parts)
