"""Command line front end.

    parabose verify --suite all --modes 2 --order 2 --cutoff 6
    parabose matelem --order 2 --modes 1 --cutoff 8 --format csv
    parabose dims --order 1 --modes 2 --cutoff 6
    parabose gram --order 2 --modes 2 --cutoff 4

Exit status: 0 when every check passes, 1 when any check fails, 2 on a usage
error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import List, Optional, Sequence

from .exprlang import ParseError
from .freealg import InvalidArgument
from .suites import SUITES, RunConfig, Table, dims_table, gram_table, matelem_table, profile_table, run_suites

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

REPORT_COLUMNS = ["suite", "check_id", "anchor", "parameters", "status", "witness"]


class UsageError(Exception):
    pass


def _common(p: argparse.ArgumentParser, **defaults) -> None:
    p.add_argument("--modes", type=int, default=defaults.get("modes", 2), help="number of modes m")
    p.add_argument("--order", type=int, default=defaults.get("order", 2), help="paraboson order p")
    p.add_argument("--cutoff", type=int, default=defaults.get("cutoff", 6), help="total particle cutoff N")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--out", metavar="PATH", help="output file (default: stdout)")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="parabose",
                                 description="Exact checks on paraboson algebras and their Fock-like modules.")
    sub = ap.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run verification suites and write a report")
    v.add_argument("--suite", action="append", choices=SUITES + ("all",),
                   help="suite to run (repeatable; default all)")
    _common(v)
    v.add_argument("--factors", type=int, default=2, help="slots q of the generalized ansatz")
    v.add_argument("--bound", type=int, default=5, help="degree bound D for ideal spans")
    v.add_argument("--relators", metavar="FILE",
                   help="extra relators, one per line, checked on the F(order) carrier")

    for name, help_ in (("matelem", "matrix elements of B_i^+- on F(p) (single-mode profile when m = 1)"),
                        ("dims", "per-degree dimensions of F(p) and of the tensor Fock space"),
                        ("gram", "degree-blocked Gram matrix of F(p)")):
        t = sub.add_parser(name, help=help_)
        _common(t, cutoff=4 if name == "gram" else 6)
    return ap


def _check_numbers(args) -> None:
    if args.modes < 1:
        raise UsageError("--modes must be >= 1")
    if args.order < 1:
        raise UsageError("--order must be >= 1")
    if args.cutoff < 0:
        raise UsageError("--cutoff must be >= 0")
    if getattr(args, "factors", 1) < 1:
        raise UsageError("--factors must be >= 1")
    if getattr(args, "bound", 1) < 1:
        raise UsageError("--bound must be >= 1")


def render_report(report: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, indent=2) + "\n"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(REPORT_COLUMNS)
    for c in report["checks"]:
        w.writerow([c["suite"], c["check_id"], c["anchor"], json.dumps(c["parameters"], sort_keys=True),
                    c["status"], c["witness"] or ""])
    return buf.getvalue()


def render_table(t: Table, fmt: str) -> str:
    if fmt == "json":
        obj = {"table": t.name, "parameters": t.parameters, "columns": t.columns, "rows": t.rows}
        obj.update(t.extra)
        return json.dumps(obj, indent=2) + "\n"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(t.columns)
    w.writerows(t.rows)
    return buf.getvalue()


def _emit(text: str, out: Optional[str]) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    try:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as e:
        raise UsageError("cannot write %s: %s" % (out, e.strerror or e))


def _verify(args) -> int:
    suites: List[str] = list(SUITES)
    if args.suite and "all" not in args.suite:
        suites = [s for s in SUITES if s in args.suite]
    relators_text = None
    if args.relators:
        try:
            with open(args.relators, encoding="utf-8") as fh:
                relators_text = fh.read()
        except OSError as e:
            raise UsageError("cannot read %s: %s" % (args.relators, e.strerror or e))
        from .exprlang import parse_relator_file
        try:
            parse_relator_file(relators_text, args.modes)
        except ParseError as e:
            raise UsageError("%s:%s" % (args.relators, e))
    cfg = RunConfig(modes=args.modes, order=args.order, factors=args.factors, cutoff=args.cutoff,
                    bound=args.bound, format=args.format, out=args.out, suites=suites,
                    relators_text=relators_text)
    report = run_suites(cfg)
    _emit(render_report(report, args.format), args.out)
    if args.out is not None:
        n_fail = sum(c["status"] != "pass" for c in report["checks"])
        print("%s: %d checks, %d failed" % (report["status"], len(report["checks"]), n_fail), file=sys.stderr)
    return EXIT_OK if report["status"] == "pass" else EXIT_FAIL


def _table(args) -> int:
    p, m, N = args.order, args.modes, args.cutoff
    if args.command == "dims":
        t = dims_table(p, m, N)
    elif args.command == "gram":
        t = gram_table(p, m, N)
    elif m == 1:
        if N < 1:
            raise UsageError("the single-mode profile needs --cutoff >= 1")
        t = profile_table(p, N)
    else:
        t = matelem_table(p, m, N)
    _emit(render_table(t, args.format), args.out)
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return int(e.code) if e.code is not None else EXIT_OK
    try:
        _check_numbers(args)
        if args.command == "verify":
            return _verify(args)
        return _table(args)
    except (UsageError, InvalidArgument) as e:
        print("parabose: error: %s" % e, file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
