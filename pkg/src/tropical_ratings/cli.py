"""Command line front end.

    tropical-ratings rate --input matrix.txt
    tropical-ratings analyze --input survey.json --tables match,freq --top-k 5
    tropical-ratings selfcheck

Exit codes: 0 success, 1 validation error, 2 parse error, 3 internal
invariant breach (including a failed self-check).
"""

import argparse
import json
import sys
import time
from pathlib import Path

import numpy as np

from . import __version__
from .fixtures import GOLDEN_RATINGS, GOLDEN_RANKS, fixture_batch
from .matrices import ComparisonMatrix, ValidationError, parse_number
from .methods import ConvergenceFailure
from .ranking import (
    combined_order_string,
    order_string,
    rank_tag,
    ranks_from_ratings,
)
from .report import TABLES, InvariantBreach, analyze_matrix, build_report, fmt4, round4
from .survey import COMPARISON_SCALE, ParseError, _on_scale, parse_batch, serialize_report

EXIT_OK, EXIT_VALIDATION, EXIT_PARSE, EXIT_INTERNAL = 0, 1, 2, 3
GOLDEN_TOL = 1e-3


def _read_input(path):
    if path in (None, "-"):
        return sys.stdin.buffer.read().decode("utf-8")
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read input: {exc.strerror}", source=path) from exc


def parse_matrix(text, strict_scale=False):
    """Parse one comparison matrix.

    Accepts JSON (a nested list, or an object with ``"matrix"`` or with
    ``"n"`` and 1-based ``"comparisons"``) or whitespace-separated rows with
    ``p/q`` fractions. Lower-triangle entries may be ``null`` / ``-``.
    """
    stripped = text.strip()
    if not stripped:
        raise ParseError("empty matrix input")
    labels = None
    if stripped[0] in "[{":
        try:
            doc = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise ParseError(exc.msg, exc.lineno, exc.colno) from exc
        if isinstance(doc, dict):
            labels = doc.get("criteria")
            if "matrix" in doc:
                rows = doc["matrix"]
            elif "comparisons" in doc and "n" in doc:
                n = int(doc["n"])
                rows = [[1 if i == j else None for j in range(n)] for i in range(n)]
                for c in doc["comparisons"]:
                    rows[int(c["i"]) - 1][int(c["j"]) - 1] = c["value"]
            else:
                raise ParseError('matrix object needs "matrix" or "n" + "comparisons"')
        else:
            rows = doc
    else:
        rows = []
        for lineno, line in enumerate(stripped.splitlines(), start=1):
            line = line.split("#", 1)[0].strip()
            if line:
                rows.append([None if tok == "-" else tok for tok in line.replace(",", " ").split()])
    n = len(rows)
    if any(not isinstance(r, list) or len(r) != n for r in rows):
        raise ParseError(f"matrix must be square; got {n} rows of lengths {[len(r) for r in rows]}")
    full = np.full((n, n), np.nan)
    for i, row in enumerate(rows):
        for j, v in enumerate(row):
            if v is None:
                continue
            try:
                full[i, j] = parse_number(v)
            except (ValueError, ZeroDivisionError):
                raise ParseError(f"bad number {v!r} in row {i + 1}, column {j + 1}", i + 1, j + 1) from None
    for i in range(n):
        if np.isnan(full[i, i]):
            full[i, i] = 1.0
        for j in range(i + 1, n):
            if np.isnan(full[i, j]) and np.isnan(full[j, i]):
                raise ValidationError(f"missing comparison ({i + 1},{j + 1})")
            if np.isnan(full[j, i]):
                full[j, i] = 1.0 / full[i, j]
            elif np.isnan(full[i, j]):
                full[i, j] = 1.0 / full[j, i]
    matrix = ComparisonMatrix.from_full(full)
    if strict_scale:
        off = [
            f"comparison ({i + 1},{j + 1}) = {full[i, j]:g} is off the 1..5 comparison scale"
            for i in range(n) for j in range(i + 1, n) if not _on_scale(full[i, j], COMPARISON_SCALE)
        ]
        if off:
            raise ValidationError(off)
    return matrix, labels


def rate_document(matrix, labels=None, ascii=False):
    ratings, lam, objective, unique, intervals = analyze_matrix(matrix)
    doc = {
        "lambda": round4(lam),
        "objective": round4(objective),
        "unique": unique,
        "ratings": {},
        "ranks": {},
        "orders": {},
    }
    for tag, vec in ratings.items():
        r = ranks_from_ratings(vec)
        doc["ratings"][tag] = [round4(v) for v in vec.scores]
        doc["ranks"][rank_tag(tag)] = list(r.ranks)
        doc["orders"][rank_tag(tag)] = order_string(r, labels=labels, ascii=ascii)
    if not unique:
        doc["intervals"] = [[round4(lo), round4(hi)] for lo, hi in intervals]
        doc["combined_order"] = combined_order_string(intervals, labels=labels, ascii=ascii)
    return doc


def _render_rate(doc, fmt, labels, n, ascii):
    if fmt == "json":
        return json.dumps(doc, indent=2, ensure_ascii=ascii) + "\n"
    labels = labels or [f"C{i + 1}" for i in range(n)]
    if fmt == "csv":
        lines = ["criterion," + ",".join(list(doc["ratings"]) + list(doc["ranks"]))]
        for k, c in enumerate(labels):
            vals = [fmt4(doc["ratings"][t][k]) for t in doc["ratings"]]
            vals += [str(doc["ranks"][t][k]) for t in doc["ranks"]]
            lines.append(",".join([c] + vals))
        return "\n".join(lines) + "\n"
    out = [
        f"lambda = {fmt4(doc['lambda'])}",
        f"log-Chebyshev objective = {fmt4(doc['objective'])}",
        f"solution: {'unique' if doc['unique'] else 'non-unique'}",
        "",
    ]
    tags = list(doc["ratings"])
    out.append("criterion  " + "  ".join(f"{t:>6}" for t in tags) + "  " + "  ".join(f"{'R' + t:>5}" for t in tags))
    for k, c in enumerate(labels):
        out.append(
            f"{c:<9}  " + "  ".join(f"{fmt4(doc['ratings'][t][k]):>6}" for t in tags)
            + "  " + "  ".join(f"{doc['ranks']['R' + t][k]:>5}" for t in tags)
        )
    out.append("")
    for t, s in doc["orders"].items():
        out.append(f"{t}: {s}")
    if "intervals" in doc:
        iv = ", ".join(fmt4(lo) if lo == hi else f"{fmt4(lo)}..{fmt4(hi)}" for lo, hi in doc["intervals"])
        out.append(f"SC intervals: ({iv})")
        out.append(f"combined: {doc['combined_order']}")
    return "\n".join(out) + "\n"


def cmd_rate(args):
    text = _read_input(args.input)
    matrix, labels = parse_matrix(text, strict_scale=args.strict_scale)
    doc = rate_document(matrix, labels, args.ascii)
    return _render_rate(doc, args.format, labels, matrix.n, args.ascii)


def _parse_rank_list(text):
    try:
        return tuple(int(t) for t in text.replace("(", "").replace(")", "").replace(",", " ").split())
    except ValueError:
        raise ParseError(f"bad rank vector {text!r}") from None


def cmd_analyze(args):
    path = args.input
    input_format = args.input_format
    if input_format is None:
        input_format = "csv" if path not in (None, "-") and path.endswith(".csv") else "json"
    text = _read_input(path)
    comparisons = None
    if input_format == "csv":
        cpath = args.comparisons
        if cpath is None and path not in (None, "-"):
            cpath = str(Path(path).with_name("comparisons.csv"))
        if cpath is None:
            raise ParseError("CSV input needs --comparisons")
        comparisons = _read_input(cpath)
    batch = parse_batch(text, input_format, strict_scale=args.strict_scale, comparisons=comparisons)
    tables = TABLES if args.tables in (None, "all") else tuple(t.strip() for t in args.tables.split(",") if t.strip())
    unknown = [t for t in tables if t not in TABLES]
    if unknown:
        raise ParseError(f"unknown table(s) {unknown}; choose from {', '.join(TABLES)}")
    refs = [_parse_rank_list(r) for r in args.reference_rank] if args.reference_rank else None
    meta = {"tool": "tropical-ratings", "version": __version__, "generated": time.strftime("%Y-%m-%dT%H:%M:%S")} if args.meta else None
    try:
        report = build_report(
            batch, tables=tables, reference_ranks=refs, top_k=args.top_k,
            ddof=args.ddof, ascii=args.ascii, meta=meta,
        )
    except ValueError as exc:
        raise ValidationError(str(exc)) from exc
    if not args.respondents:
        report.respondents = []
    fmt = "text" if args.format == "text" else args.format
    return serialize_report(report, fmt, ascii=args.ascii).decode("utf-8")


def selfcheck(fixtures=None, tol=GOLDEN_TOL):
    """Recompute the golden respondent vectors; return ``(lines, ok)``."""
    golden_ratings = fixtures if fixtures is not None else GOLDEN_RATINGS
    batch = fixture_batch()
    lines = []
    ok = True
    for record in batch.records:
        ratings, *_ = analyze_matrix(record.matrix)
        for tag, expected in golden_ratings.get(record.id, {}).items():
            got = ratings[tag].scores
            err = float(np.abs(got - np.asarray(expected)).max())
            passed = err <= tol
            ok &= passed
            lines.append(f"{'PASS' if passed else 'FAIL'} respondent {record.id} {tag} max|err| = {err:.2e}")
            want_ranks = GOLDEN_RANKS.get(record.id, {}).get(rank_tag(tag))
            if fixtures is None and want_ranks is not None:
                got_ranks = ranks_from_ratings(ratings[tag]).ranks
                passed = got_ranks == want_ranks
                ok &= passed
                lines.append(f"{'PASS' if passed else 'FAIL'} respondent {record.id} {rank_tag(tag)} {got_ranks}")
    return lines, ok


def cmd_selfcheck(args):
    start = time.perf_counter()
    lines, ok = selfcheck()
    elapsed = time.perf_counter() - start
    lines.append(f"{'all checks passed' if ok else 'SELF-CHECK FAILED'} in {elapsed:.3f} s")
    if not ok:
        raise InvariantBreach("\n".join(lines))
    return "\n".join(lines) + "\n"


def build_parser():
    parser = argparse.ArgumentParser(prog="tropical-ratings", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--input", "-i", default="-", help="input file, '-' for stdin")
        p.add_argument("--format", choices=("json", "csv", "text"), default="text")
        p.add_argument("--strict-scale", action=argparse.BooleanOptionalAction, default=True,
                       help="require survey scale values (default on)")
        p.add_argument("--ascii", action="store_true", help="use > and >= in order strings")

    p = sub.add_parser("rate", help="rate one comparison matrix by every method")
    common(p)
    p.set_defaults(func=cmd_rate)

    p = sub.add_parser("analyze", help="analyse a batch of survey respondents")
    common(p)
    p.add_argument("--input-format", choices=("json", "csv"), help="default: from file extension")
    p.add_argument("--comparisons", help="comparisons.csv (default: next to --input)")
    p.add_argument("--tables", help=f"comma-separated subset of: {', '.join(TABLES)}")
    p.add_argument("--reference-rank", action="append", metavar="R",
                   help="reference rank vector for distance tables, e.g. 2,1,5,6,3,4 (repeatable)")
    p.add_argument("--top-k", type=int, default=5)
    p.add_argument("--ddof", type=int, default=0, help="0 = population std (default), 1 = sample")
    p.add_argument("--respondents", action=argparse.BooleanOptionalAction, default=False,
                   help="include per-respondent vectors")
    p.add_argument("--meta", action="store_true", help="add a provenance section")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("selfcheck", help="verify the embedded golden respondents")
    p.set_defaults(func=cmd_selfcheck)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        out = args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ValidationError as exc:
        print("validation error:", file=sys.stderr)
        for v in exc.violations:
            print(f"  {v}", file=sys.stderr)
        return EXIT_VALIDATION
    except (InvariantBreach, ConvergenceFailure) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    stream = sys.stdout
    if getattr(args, "ascii", False):
        out = out.encode("ascii", errors="replace").decode("ascii")
    stream.write(out)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
