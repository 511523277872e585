"""Per-respondent results and the batch analysis report."""

import csv
import io
import json
from dataclasses import dataclass, field
from decimal import ROUND_HALF_EVEN, Decimal

import numpy as np

from . import stats
from .methods import log_chebyshev_objective, log_chebyshev_rate, geometric_mean_rate, principal_eigenvector_rate
from .ranking import (
    RankVector,
    combined_order_string,
    interval_combine,
    order_string,
    rank_tag,
    ranks_from_ratings,
)

RATING_TAGS = ("SR", "SPE", "SGM", "SCB", "SCW")
RANK_TAGS = ("RR", "RSR", "RSPE", "RSGM", "RSCB", "RSCW")
RANK_CORR_TAGS = ("RR", "RSPE", "RSGM", "RSCB", "RSCW")
DERIVED_RANK_TAGS = ("RSR", "RSPE", "RSGM", "RSCB", "RSCW")
TABLES = ("match", "corr-ranks", "corr-ratings", "means", "groups", "freq", "distance")

OPTIMALITY_TOL = 1e-9


class InvariantBreach(RuntimeError):
    """A computed result contradicts a property that must always hold."""


def fmt4(x):
    """Round half-even to 4 decimals and return the decimal text."""
    return str(Decimal(repr(float(x))).quantize(Decimal("0.0001"), rounding=ROUND_HALF_EVEN))


def round4(x):
    return float(fmt4(x))


@dataclass(frozen=True)
class RespondentResult:
    """All rating and rank vectors computed for one respondent."""

    record: object
    ratings: dict
    ranks: dict
    lam: float
    objective: float
    unique: bool
    intervals: np.ndarray = field(repr=False)

    def vectors(self):
        """Rating and rank vectors merged into one tag mapping (stats batch row)."""
        out = {t: v.scores for t, v in self.ratings.items()}
        out.update({t: v.ranks for t, v in self.ranks.items()})
        return out


def analyze_matrix(matrix):
    """Run every method on one comparison matrix.

    Returns ``(ratings, lam, objective, unique, intervals)``.
    """
    cone, best, worst = log_chebyshev_rate(matrix)
    ratings = {
        "SPE": principal_eigenvector_rate(matrix),
        "SGM": geometric_mean_rate(matrix),
        "SCB": best,
        "SCW": worst,
    }
    objective = log_chebyshev_objective(matrix, best.scores)
    for v in (best, worst):
        value = log_chebyshev_objective(matrix, v.scores)
        if abs(value - cone.lam) > OPTIMALITY_TOL * max(1.0, cone.lam):
            raise InvariantBreach(f"{v.method} objective {value!r} differs from spectral radius {cone.lam!r}")
    return ratings, cone.lam, objective, cone.unique, interval_combine(best.scores, worst.scores)


def analyze_record(record):
    ratings, lam, objective, unique, intervals = analyze_matrix(record.matrix)
    ratings = {"SR": record.direct_ratings, **ratings}
    ranks = {"RR": record.ranks}
    for tag, vec in ratings.items():
        ranks[rank_tag(tag)] = ranks_from_ratings(vec)
    return RespondentResult(record, ratings, ranks, lam, objective, unique, intervals)


@dataclass
class AnalysisReport:
    criteria: tuple
    respondents: list
    settings: dict
    sections: dict
    notices: list
    ascii: bool = False
    meta: dict = None

    def to_dict(self):
        doc = {"criteria": list(self.criteria), "settings": dict(self.settings)}
        if self.meta:
            doc["meta"] = dict(self.meta)
        if self.notices:
            doc["notices"] = list(self.notices)
        if self.respondents:
            doc["respondents"] = [_respondent_doc(r, self.ascii) for r in self.respondents]
        for name in TABLES:
            if name in self.sections:
                doc[name] = self.sections[name]
        return doc


def _respondent_doc(res, ascii):
    doc = {
        "id": res.record.id,
        "lambda": round4(res.lam),
        "objective": round4(res.objective),
        "unique": res.unique,
        "ratings": {t: [round4(v) for v in res.ratings[t].scores] for t in RATING_TAGS},
        "ranks": {t: list(res.ranks[t].ranks) for t in RANK_TAGS},
        "orders": {t: order_string(res.ranks[t], ascii=ascii) for t in RANK_TAGS if t != "RR"},
    }
    if not res.unique:
        doc["intervals"] = [[round4(lo), round4(hi)] for lo, hi in res.intervals]
        doc["combined_order"] = combined_order_string(res.intervals, ascii=ascii)
    return doc


def _table_doc(table, as_int=False):
    rows = {}
    for i, u in enumerate(table.tags):
        rows[u] = {}
        for j, v in enumerate(table.tags):
            x = table.values[i, j]
            if as_int:
                rows[u][v] = int(x)
            else:
                rows[u][v] = None if np.isnan(x) else round4(x)
    return {"tags": list(table.tags), "rows": rows}


def build_report(batch, tables=TABLES, reference_ranks=None, top_k=5, ddof=0, tau_variant="b",
                 ascii=False, meta=None):
    """Analyse a :class:`SurveyBatch` and assemble the selected tables."""
    unknown = set(tables) - set(TABLES)
    if unknown:
        raise ValueError(f"unknown tables: {sorted(unknown)}")
    results = [analyze_record(r) for r in batch.records]
    rows = [r.vectors() for r in results]
    attrs = [r.record.attributes for r in results]
    n = batch.n
    notices = []
    if len(results) == 1:
        notices.append("n-of-1: correlation tables are computed from a single respondent's vectors")

    sections = {}
    if "match" in tables:
        sections["match"] = _table_doc(stats.match_table(rows, RANK_TAGS), as_int=True)

    groups = stats.consistency_groups(rows, attrs, thresholds=range(n))
    if "groups" in tables:
        sections["groups"] = [
            {
                "group": g.label,
                "max_difference": g.threshold,
                "count": g.count,
                "percent_visited": None if np.isnan(g.percent_visited) else round(g.percent_visited, 1),
                "percent_male": None if np.isnan(g.percent_male) else round(g.percent_male, 1),
                "percent_female": None if np.isnan(g.percent_female) else round(g.percent_female, 1),
                "members": [results[i].record.id for i in g.members],
            }
            for g in groups
        ]

    if "corr-ranks" in tables:
        out = {}
        for g in groups:
            members = [rows[i] for i in g.members]
            if not members:
                notices.append(f"group {g.label} is empty; rank correlations omitted")
                continue
            out[g.label] = _table_doc(stats.correlation_table(members, RANK_CORR_TAGS, "kendall", tau_variant, strict=False))
        sections["corr-ranks"] = out

    if "corr-ratings" in tables:
        out = {"all": _table_doc(stats.correlation_table(rows, RATING_TAGS, "pearson", strict=False))}
        if len(rows) >= 2:
            for c in range(n):
                out[batch.criteria[c]] = _table_doc(stats.criterion_correlation_table(rows, RATING_TAGS, c, strict=False))
        else:
            notices.append("per-criterion rating correlations need at least two respondents; omitted")
        sections["corr-ratings"] = out

    spreads = {t: stats.mean_and_std(rows, t, ddof=ddof) for t in RATING_TAGS}
    if "means" in tables:
        sections["means"] = {
            t: {
                "mean": [round4(v) for v in s.mean],
                "std": [None if np.isnan(v) else round4(v) for v in s.std],
                "average_std": None if np.isnan(s.avg_std) else round4(s.avg_std),
                "total_std": None if np.isnan(s.total_std) else round4(s.total_std),
                "mean_ranks": list(ranks_from_ratings(s.mean).ranks),
            }
            for t, s in spreads.items()
        }

    if "freq" in tables:
        sections["freq"] = {
            t: [
                {"ranks": list(e.ranks), "count": e.count, "order": e.order}
                for e in stats.frequency_table(rows, t, top_k=top_k, ascii=ascii)
            ]
            for t in DERIVED_RANK_TAGS
        }

    if reference_ranks is None:
        refs = []
        for t in ("SR", "SPE"):
            r = ranks_from_ratings(spreads[t].mean).ranks
            if r not in refs:
                refs.append(r)
    else:
        refs = [tuple(RankVector(r).ranks) for r in reference_ranks]
    for r in refs:
        if len(r) != n:
            raise ValueError(f"reference rank vector {r} has length {len(r)}, expected {n}")
    if "distance" in tables:
        sections["distance"] = [
            {
                "reference": list(r),
                "counts": {t: stats.within_distance_counts(rows, t, r) for t in DERIVED_RANK_TAGS},
            }
            for r in refs
        ]

    settings = {
        "respondents": len(results),
        "std": "population" if ddof == 0 else f"sample (ddof={ddof})",
        "kendall": f"tau-{tau_variant}",
        "top_k": top_k,
        "tables": [t for t in TABLES if t in tables],
    }
    return AnalysisReport(tuple(batch.criteria), results, settings, sections, notices, ascii, meta)


def to_json(report):
    return (json.dumps(report.to_dict(), indent=2, ensure_ascii=report.ascii) + "\n").encode("utf-8")


def _num_text(v):
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, int):
        return str(v)
    if isinstance(v, float):
        return fmt4(v)
    return str(v)


def _flatten(prefix, obj, out):
    if isinstance(obj, dict):
        for k, v in obj.items():
            _flatten(prefix + (str(k),), v, out)
    elif isinstance(obj, list) and obj and all(not isinstance(v, (dict, list)) for v in obj):
        out.append((prefix, " ".join(_num_text(v) for v in obj)))
    elif isinstance(obj, list):
        for k, v in enumerate(obj):
            _flatten(prefix + (str(k),), v, out)
    else:
        out.append((prefix, _num_text(obj)))


def to_csv(report):
    """Long-format CSV: ``section, key, value`` with ``/``-joined keys."""
    rows = []
    for section, body in report.to_dict().items():
        _flatten((section,), body, rows)
    buf = io.StringIO(newline="")
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["section", "key", "value"])
    for path, value in rows:
        w.writerow([path[0], "/".join(path[1:]), value])
    return buf.getvalue().encode("utf-8")


def _pct(v):
    return "-" if v is None else f"{v:.0f}"


def _grid(header, body):
    widths = [max(len(str(r[k])) for r in [header] + body) for k in range(len(header))]
    lines = ["  ".join(str(c).rjust(w) for c, w in zip(header, widths))]
    lines.append("  ".join("-" * w for w in widths))
    lines += ["  ".join(str(c).rjust(w) for c, w in zip(row, widths)) for row in body]
    return lines


def _pair_table_lines(doc):
    tags = doc["tags"]
    return _grid([""] + tags, [[u] + [_num_text(doc["rows"][u][v]) for v in tags] for u in tags])


def to_text(report, ascii=False):
    doc = report.to_dict()
    out = []
    crit = doc["criteria"]
    out.append(f"Criteria: {', '.join(crit)}")
    out.append(f"Respondents: {doc['settings']['respondents']}")
    for notice in doc.get("notices", []):
        out.append(f"NOTE: {notice}")
    for r in doc.get("respondents", []):
        out.append("")
        flag = "unique" if r["unique"] else "non-unique"
        out.append(f"Respondent {r['id']}: lambda = {fmt4(r['lambda'])}, {flag} log-Chebyshev solution")
        body = [[c] + [fmt4(r["ratings"][t][k]) for t in RATING_TAGS] for k, c in enumerate(crit)]
        out += _grid(["criterion", *RATING_TAGS], body)
        body = [[c] + [str(r["ranks"][t][k]) for t in RANK_TAGS] for k, c in enumerate(crit)]
        out += _grid(["criterion", *RANK_TAGS], body)
        for t, s in r["orders"].items():
            out.append(f"  {t}: {s}")
        if "intervals" in r:
            iv = ", ".join(f"{fmt4(lo)}" if lo == hi else f"{fmt4(lo)}..{fmt4(hi)}" for lo, hi in r["intervals"])
            out.append(f"  SC intervals: ({iv})")
            out.append(f"  combined: {r['combined_order']}")
    if "match" in doc:
        out += ["", "Number of matches of rank vectors"] + _pair_table_lines(doc["match"])
    if "groups" in doc:
        out += ["", "Groups by Chebyshev distance between RR and RSR"]
        body = [
            [g["group"], g["max_difference"], g["count"], _pct(g["percent_visited"]),
             f"{_pct(g['percent_male'])}/{_pct(g['percent_female'])}"]
            for g in doc["groups"]
        ]
        out += _grid(["group", "max diff", "count", "% visited", "male/female %"], body)
    if "corr-ranks" in doc:
        for label, table in doc["corr-ranks"].items():
            out += ["", f"Kendall correlation of rank vectors, group {label}"] + _pair_table_lines(table)
    if "corr-ratings" in doc:
        for label, table in doc["corr-ratings"].items():
            title = "all criteria" if label == "all" else f"criterion {label}"
            out += ["", f"Pearson correlation of ratings, {title}"] + _pair_table_lines(table)
    if "means" in doc:
        m = doc["means"]
        out += ["", "Mean vectors of ratings"]
        out += _grid(["criterion", *m], [[c] + [fmt4(m[t]["mean"][k]) for t in m] for k, c in enumerate(crit)])
        out += ["", f"Standard deviations ({doc['settings']['std']})"]
        out += _grid(["criterion", *m], [[c] + [_num_text(m[t]["std"][k]) for t in m] for k, c in enumerate(crit)])
        out += _grid(["measure", *m], [
            ["average", *(_num_text(m[t]["average_std"]) for t in m)],
            ["total", *(_num_text(m[t]["total_std"]) for t in m)],
        ])
    if "distance" in doc:
        for d in doc["distance"]:
            ref = "(" + ",".join(map(str, d["reference"])) + ")"
            out += ["", f"Number of vectors within Hamming distance of {ref}"]
            tags = list(d["counts"])
            body = [[k] + [d["counts"][t][k] for t in tags] for k in range(len(d["reference"]) + 1)]
            out += _grid(["distance", *tags], body)
    if "freq" in doc:
        out += ["", "Most frequent rank vectors"]
        body = []
        for t, entries in doc["freq"].items():
            for e in entries:
                body.append([t, "(" + ",".join(map(str, e["ranks"])) + ")", e["order"], e["count"]])
        out += _grid(["method", "rank vector", "order", "count"], body)
    text = "\n".join(out) + "\n"
    return text.encode("ascii" if ascii else "utf-8", errors="replace")
