"""Respondent records, batch file formats and validation.

Two input formats are supported:

* JSON: ``{"criteria": [...], "respondents": [{"id", "age", "sex", "visited",
  "scores", "ranks", "comparisons": [{"i", "j", "value"}]}]}`` with 1-based
  criterion indices; a full ``"matrix"`` (lower triangle may be ``null``)
  is accepted in place of ``"comparisons"``.
* CSV: ``respondents.csv`` with columns ``id, age, sex, visited,
  score_<label>..., rank_<label>...`` plus ``comparisons.csv`` with
  ``id, i, j, value``.

Numbers may be decimals or ``"p/q"`` fraction strings.
"""

import csv
import io
import json
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .matrices import ComparisonMatrix, RatingVector, ValidationError, parse_number, validate_reciprocity
from .ranking import RankVector

__all__ = [
    "ParseError",
    "ValidationError",
    "SurveyRecord",
    "SurveyBatch",
    "parse_batch",
    "serialize_batch",
    "serialize_report",
    "validate_reciprocity",
    "RATING_SCALE",
    "COMPARISON_SCALE",
]

SEXES = ("male", "female", "unspecified")
RATING_SCALE = (0.2, 0.4, 0.6, 0.8, 1.0)
COMPARISON_SCALE = tuple(sorted({float(k) for k in range(1, 6)} | {1.0 / k for k in range(2, 6)}))
SCALE_TOL = 1e-9


class ParseError(ValueError):
    """Malformed input; ``line``/``column`` locate the problem when known."""

    def __init__(self, message, line=None, column=None, source=None):
        self.line = line
        self.column = column
        self.source = source
        where = []
        if source:
            where.append(str(source))
        if line is not None:
            where.append(f"line {line}")
        if column is not None:
            where.append(f"column {column}")
        super().__init__(f"{', '.join(where)}: {message}" if where else message)


@dataclass(frozen=True)
class SurveyRecord:
    id: str
    age: int
    sex: str
    visited: bool
    scores: tuple
    ranks: RankVector
    matrix: ComparisonMatrix

    @property
    def n(self):
        return self.matrix.n

    @property
    def direct_ratings(self):
        """Direct scores as a max-normalised SR vector."""
        return RatingVector(self.scores, "SR")

    @property
    def attributes(self):
        return {"id": self.id, "age": self.age, "sex": self.sex, "visited": self.visited}


@dataclass(frozen=True)
class SurveyBatch:
    criteria: tuple
    records: tuple

    @property
    def n(self):
        return len(self.criteria)

    def __len__(self):
        return len(self.records)

    def __iter__(self):
        return iter(self.records)


def _on_scale(value, scale):
    return any(abs(value - s) <= SCALE_TOL for s in scale)


def _check_batch(criteria, raw_records, strict_scale):
    """Validate raw record dicts and build records; collect every violation."""
    problems = []
    if not raw_records:
        problems.append("batch has no respondents")
    n = len(criteria)
    if n < 2:
        problems.append(f"need at least 2 criteria, got {n}")
    if len(set(criteria)) != n:
        problems.append("criteria labels are not unique")
    seen = set()
    records = []
    for raw in raw_records:
        rid = raw["id"]
        tag = f"respondent {rid}"
        bad = []
        if rid in seen:
            bad.append(f"{tag}: duplicate id")
        seen.add(rid)
        age = raw.get("age")
        if age is not None and (not isinstance(age, int) or isinstance(age, bool) or age <= 0):
            bad.append(f"{tag}: age must be a positive integer, got {age!r}")
        sex = raw.get("sex", "unspecified")
        if sex not in SEXES:
            bad.append(f"{tag}: sex must be one of {SEXES}, got {sex!r}")
        visited = raw.get("visited", False)
        if not isinstance(visited, bool):
            bad.append(f"{tag}: visited must be boolean, got {visited!r}")

        scores = raw["scores"]
        if len(scores) != n:
            bad.append(f"{tag}: expected {n} scores, got {len(scores)}")
        elif any(not np.isfinite(s) or s <= 0 for s in scores):
            bad.append(f"{tag}: scores must be positive")
        elif strict_scale:
            for k, s in enumerate(scores):
                if not _on_scale(s, RATING_SCALE):
                    bad.append(f"{tag}: score {k + 1} = {s:g} is off the 5-point rating scale")

        ranks = raw["ranks"]
        if len(ranks) != n:
            bad.append(f"{tag}: expected {n} ranks, got {len(ranks)}")
        elif sorted(ranks) != list(range(1, n + 1)):
            bad.append(f"{tag}: ranks {tuple(ranks)} are not a permutation of 1..{n}")

        matrix = None
        full, mbad = _assemble_matrix(raw["cells"], n)
        bad.extend(f"{tag}: {m}" for m in mbad)
        if not mbad:
            bad.extend(f"{tag}: {m}" for m in validate_reciprocity(full))
            if strict_scale:
                for i in range(n):
                    for j in range(i + 1, n):
                        if not _on_scale(full[i, j], COMPARISON_SCALE):
                            bad.append(
                                f"{tag}: comparison ({i + 1},{j + 1}) = {full[i, j]:g} "
                                "is off the 1..5 comparison scale"
                            )
        if not bad:
            matrix = ComparisonMatrix.from_upper(
                n, {(i, j): full[i, j] for i in range(n) for j in range(i + 1, n)}
            )
            records.append(
                SurveyRecord(
                    rid, age, sex, visited, tuple(float(s) for s in scores), RankVector(ranks, "RR"), matrix
                )
            )
        problems.extend(bad)
    if problems:
        raise ValidationError(problems)
    return SurveyBatch(tuple(criteria), tuple(records))


def _assemble_matrix(cells, n):
    """Fill a full matrix from ``{(i, j): value}`` (0-based) cells."""
    full = np.full((n, n), np.nan)
    np.fill_diagonal(full, 1.0)
    problems = []
    for (i, j), v in cells.items():
        if not (0 <= i < n and 0 <= j < n):
            problems.append(f"comparison index ({i + 1},{j + 1}) out of range 1..{n}")
            continue
        if not np.isfinite(v) or v <= 0:
            problems.append(f"comparison ({i + 1},{j + 1}) = {v:g} is not positive")
            continue
        full[i, j] = v
    if problems:
        return full, problems
    for i in range(n):
        for j in range(i + 1, n):
            if np.isnan(full[i, j]) and np.isnan(full[j, i]):
                problems.append(f"missing comparison ({i + 1},{j + 1})")
            elif np.isnan(full[i, j]):
                full[i, j] = 1.0 / full[j, i]
            elif np.isnan(full[j, i]):
                full[j, i] = 1.0 / full[i, j]
    return full, problems


def _read_text(source):
    if hasattr(source, "read"):
        source = source.read()
    if isinstance(source, (bytes, bytearray)):
        source = bytes(source).decode("utf-8")
    return source


def _num(value, where):
    try:
        return parse_number(value)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"{where}: bad number {value!r}") from exc


def _parse_json(text):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from exc
    if not isinstance(doc, dict) or "respondents" not in doc:
        raise ParseError('top level must be an object with a "respondents" list')
    respondents = doc["respondents"]
    if not isinstance(respondents, list):
        raise ParseError('"respondents" must be a list')
    criteria = doc.get("criteria")
    raw_records = []
    for k, r in enumerate(respondents):
        where = f"respondents[{k}]"
        if not isinstance(r, dict):
            raise ParseError(f"{where} must be an object")
        for key in ("id", "scores", "ranks"):
            if key not in r:
                raise ParseError(f'{where} lacks "{key}"')
        scores = [_num(v, f"{where}.scores[{q}]") for q, v in enumerate(r["scores"])]
        try:
            ranks = [int(v) for v in r["ranks"]]
        except (TypeError, ValueError) as exc:
            raise ParseError(f"{where}.ranks must be integers") from exc
        cells = {}
        if "comparisons" in r:
            for q, c in enumerate(r["comparisons"]):
                try:
                    i, j = int(c["i"]) - 1, int(c["j"]) - 1
                except (KeyError, TypeError, ValueError) as exc:
                    raise ParseError(f"{where}.comparisons[{q}] needs integer i and j") from exc
                cells[(i, j)] = _num(c.get("value"), f"{where}.comparisons[{q}].value")
        elif "matrix" in r:
            for i, row in enumerate(r["matrix"]):
                for j, v in enumerate(row):
                    if v is not None and i != j:
                        cells[(i, j)] = _num(v, f"{where}.matrix[{i}][{j}]")
                    elif v is not None:
                        d = _num(v, f"{where}.matrix[{i}][{j}]")
                        if abs(d - 1.0) > 1e-9:
                            cells[(i, j)] = d
        else:
            raise ParseError(f'{where} lacks "comparisons" or "matrix"')
        raw_records.append(
            {
                "id": str(r["id"]),
                "age": r.get("age"),
                "sex": r.get("sex", "unspecified"),
                "visited": r.get("visited", False),
                "scores": scores,
                "ranks": ranks,
                "cells": cells,
            }
        )
    if criteria is None:
        n = len(raw_records[0]["scores"]) if raw_records else 0
        criteria = [f"C{i + 1}" for i in range(n)]
    return [str(c) for c in criteria], raw_records


_TRUE = {"true", "yes", "1", "y"}
_FALSE = {"false", "no", "0", "n", ""}


def _parse_csv(text, comparisons_text):
    reader = csv.reader(io.StringIO(text))
    try:
        header = next(reader)
    except StopIteration:
        raise ParseError("respondents.csv is empty", source="respondents.csv") from None
    header = [h.strip() for h in header]
    for col in ("id", "age", "sex", "visited"):
        if col not in header:
            raise ParseError(f"missing column {col!r}", 1, source="respondents.csv")
    score_cols = [k for k, h in enumerate(header) if h.startswith("score_")]
    rank_cols = [k for k, h in enumerate(header) if h.startswith("rank_")]
    if not score_cols or len(score_cols) != len(rank_cols):
        raise ParseError("need matching score_* and rank_* columns", 1, source="respondents.csv")
    criteria = [header[k][len("score_"):] for k in score_cols]
    pos = {h: k for k, h in enumerate(header)}
    raw_records = []
    by_id = {}
    for lineno, row in enumerate(reader, start=2):
        if not any(cell.strip() for cell in row):
            continue
        if len(row) != len(header):
            raise ParseError(f"expected {len(header)} fields, got {len(row)}", lineno, source="respondents.csv")
        where = f"respondents.csv line {lineno}"
        age_txt = row[pos["age"]].strip()
        try:
            age = int(age_txt) if age_txt else None
        except ValueError:
            raise ParseError(f"bad age {age_txt!r}", lineno, pos["age"] + 1, "respondents.csv") from None
        vis = row[pos["visited"]].strip().lower()
        if vis not in _TRUE | _FALSE:
            raise ParseError(f"bad visited flag {vis!r}", lineno, pos["visited"] + 1, "respondents.csv")
        try:
            ranks = [int(row[k]) for k in rank_cols]
        except ValueError:
            raise ParseError("ranks must be integers", lineno, source="respondents.csv") from None
        rec = {
            "id": row[pos["id"]].strip(),
            "age": age,
            "sex": row[pos["sex"]].strip().lower() or "unspecified",
            "visited": vis in _TRUE,
            "scores": [_num(row[k], where) for k in score_cols],
            "ranks": ranks,
            "cells": {},
        }
        raw_records.append(rec)
        by_id.setdefault(rec["id"], rec)
    if comparisons_text is not None:
        creader = csv.reader(io.StringIO(comparisons_text))
        try:
            cheader = [h.strip() for h in next(creader)]
        except StopIteration:
            raise ParseError("comparisons.csv is empty", source="comparisons.csv") from None
        if cheader != ["id", "i", "j", "value"]:
            raise ParseError("header must be id,i,j,value", 1, source="comparisons.csv")
        for lineno, row in enumerate(creader, start=2):
            if not any(cell.strip() for cell in row):
                continue
            if len(row) != 4:
                raise ParseError(f"expected 4 fields, got {len(row)}", lineno, source="comparisons.csv")
            rid = row[0].strip()
            if rid not in by_id:
                raise ParseError(f"unknown respondent id {rid!r}", lineno, 1, "comparisons.csv")
            try:
                i, j = int(row[1]) - 1, int(row[2]) - 1
            except ValueError:
                raise ParseError("i and j must be integers", lineno, source="comparisons.csv") from None
            by_id[rid]["cells"][(i, j)] = _num(row[3], f"comparisons.csv line {lineno}")
    return criteria, raw_records


def parse_batch(source, format="json", strict_scale=True, comparisons=None):
    """Parse and validate a survey batch.

    ``source`` is text, bytes or a readable stream. For ``format="csv"`` it
    holds respondents.csv and ``comparisons`` holds comparisons.csv.
    Raises :class:`ParseError` for malformed input and
    :class:`ValidationError` listing every broken invariant.
    """
    text = _read_text(source)
    if format == "json":
        criteria, raw = _parse_json(text)
    elif format == "csv":
        ctext = _read_text(comparisons) if comparisons is not None else None
        criteria, raw = _parse_csv(text, ctext)
    else:
        raise ValueError(f"unknown format {format!r}")
    return _check_batch(criteria, raw, strict_scale)


def format_value(v):
    """Exact short text for a float: ``"1/3"`` when a small fraction reproduces it."""
    f = Fraction(v).limit_denominator(100)
    if float(f) == v:
        return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"
    return repr(float(v))


def _batch_doc(batch):
    respondents = []
    for r in batch.records:
        respondents.append(
            {
                "id": r.id,
                "age": r.age,
                "sex": r.sex,
                "visited": r.visited,
                "scores": [format_value(s) for s in r.scores],
                "ranks": list(r.ranks.ranks),
                "comparisons": [
                    {"i": i + 1, "j": j + 1, "value": format_value(v)}
                    for (i, j), v in sorted(r.matrix.upper().items())
                ],
            }
        )
    return {"criteria": list(batch.criteria), "respondents": respondents}


def serialize_batch(batch, format="json"):
    """Serialise a batch; JSON returns bytes, CSV returns ``(respondents, comparisons)`` bytes."""
    if format == "json":
        return (json.dumps(_batch_doc(batch), indent=2, ensure_ascii=False) + "\n").encode("utf-8")
    if format == "csv":
        out = io.StringIO(newline="")
        w = csv.writer(out, lineterminator="\n")
        w.writerow(
            ["id", "age", "sex", "visited"]
            + [f"score_{c}" for c in batch.criteria]
            + [f"rank_{c}" for c in batch.criteria]
        )
        cout = io.StringIO(newline="")
        cw = csv.writer(cout, lineterminator="\n")
        cw.writerow(["id", "i", "j", "value"])
        for r in batch.records:
            w.writerow(
                [r.id, "" if r.age is None else r.age, r.sex, "true" if r.visited else "false"]
                + [format_value(s) for s in r.scores]
                + list(r.ranks.ranks)
            )
            for (i, j), v in sorted(r.matrix.upper().items()):
                cw.writerow([r.id, i + 1, j + 1, format_value(v)])
        return out.getvalue().encode("utf-8"), cout.getvalue().encode("utf-8")
    raise ValueError(f"unknown format {format!r}")


def serialize_report(report, format="json", ascii=False):
    """Render an :class:`~tropical_ratings.report.AnalysisReport` to bytes."""
    from . import report as _report

    if format == "json":
        return _report.to_json(report)
    if format == "csv":
        return _report.to_csv(report)
    if format in ("text", "text-table"):
        return _report.to_text(report, ascii=ascii)
    raise ValueError(f"unknown format {format!r}")
