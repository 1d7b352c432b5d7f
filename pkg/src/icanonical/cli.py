"""Command-line front end.

    icanonical verify --suite remark2 --max-d 100
    icanonical table --kind cb --d 5 --format json
    icanonical transfer --from 3 --to 1 --cb 1 2

Exit status: 0 when every check passes, 1 when a check fails, 2 on a
usage error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Optional, Sequence

from . import __version__
from .idot import CBIndex, cb_poly, structure_table_csv, structure_table_json
from .schur import cb_list, cb_list_json, project, transfer_to
from .suites import DEFAULT_BOUNDS, SUITES, SuiteReport, default_jobs, run_suite
from .tpoly import TPoly

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(text: str, out: Optional[str]) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_verify(args) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    log_fh = open(args.log_rewrites, "w") if args.log_rewrites else None
    try:
        reports = []
        for name in names:
            bound = args.max_n if name == "lemma-a" else args.max_d
            reports.append(
                run_suite(
                    name,
                    bound,
                    jobs=args.jobs,
                    log_rewrites=log_fh is not None,
                    rewrite_log=(lambda line: log_fh.write(line + "\n")) if log_fh else None,
                    timing=not args.no_timing,
                )
            )
    finally:
        if log_fh:
            log_fh.close()
    if len(reports) == 1:
        report = reports[0]
    else:
        report = SuiteReport("all", {r.suite: r.params for r in reports})
        for r in reports:
            report.checks += r.checks
            report.failures.extend(r.failures)
        if not args.no_timing:
            report.wall_time = round(sum(r.wall_time for r in reports), 3)
    _emit(json.dumps(report.to_dict(), sort_keys=True, indent=2), args.out)
    return EXIT_OK if report.ok else EXIT_FAIL


def _cb_csv(d: int) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["level", "eps", "deg", "power", "coefficient"])
    for idx, elt in cb_list(d):
        for power, c in enumerate(elt.rep.coeffs):
            w.writerow([d, idx.eps, idx.deg, power, str(c)])
    return buf.getvalue()


def cmd_table(args) -> int:
    if args.d < 0:
        raise UsageError("--d must be nonnegative")
    if args.kind == "cb":
        text = cb_list_json(args.d) if args.format == "json" else _cb_csv(args.d)
    else:
        text = structure_table_json(args.d) if args.format == "json" else structure_table_csv(args.d)
    _emit(text, args.out)
    return EXIT_OK


def _parse_poly(args) -> TPoly:
    if args.cb is not None:
        eps, deg = args.cb
        try:
            return cb_poly(CBIndex(eps, deg))
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    if args.poly is None:
        raise UsageError("give --poly or --cb")
    try:
        return TPoly.from_json(json.loads(args.poly))
    except (ValueError, TypeError, KeyError) as exc:
        raise UsageError(f"cannot parse --poly: {exc}") from None


def cmd_transfer(args) -> int:
    gap = args.from_level - args.to_level
    if args.to_level < 0 or gap <= 0 or gap % 2:
        raise UsageError("--from minus --to must be a positive even integer, with --to >= 0")
    x = project(_parse_poly(args), args.from_level)
    y = transfer_to(x, args.to_level)
    _emit(json.dumps({"from": x.to_json(), "to": y.to_json(), "rep": str(y.rep)}, sort_keys=True), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="icanonical", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run a verification suite and print a JSON report")
    v.add_argument("--suite", required=True, choices=sorted(SUITES) + ["all"])
    v.add_argument("--max-d", type=int, default=None, help="level bound (suite default if omitted)")
    v.add_argument("--max-n", type=int, default=DEFAULT_BOUNDS["lemma-a"], help="bound for lemma-a")
    v.add_argument("--jobs", type=int, default=default_jobs())
    v.add_argument("--log-rewrites", metavar="FILE", default=None, help="write lemma-a rewrite steps as JSON lines")
    v.add_argument("--no-timing", action="store_true", help="omit wall_time so reports are byte-stable")
    v.add_argument("--out", default=None)
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("table", help="export structure constants or a level's canonical basis")
    t.add_argument("--kind", required=True, choices=["structure", "cb"])
    t.add_argument("--d", type=int, required=True)
    t.add_argument("--format", choices=["json", "csv"], default="json")
    t.add_argument("--out", default=None)
    t.set_defaults(func=cmd_table)

    x = sub.add_parser("transfer", help="apply the transfer maps from one level down to another")
    x.add_argument("--from", dest="from_level", type=int, required=True)
    x.add_argument("--to", dest="to_level", type=int, required=True)
    x.add_argument("--poly", default=None, help="JSON array of coefficients, lowest power of t first")
    x.add_argument("--cb", type=int, nargs=2, metavar=("EPS", "DEG"), default=None)
    x.add_argument("--out", default=None)
    x.set_defaults(func=cmd_transfer)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "max_d", None) is not None and args.max_d < 0:
        parser.error("--max-d must be nonnegative")
    if getattr(args, "max_n", 0) < 0:
        parser.error("--max-n must be nonnegative")
    if getattr(args, "jobs", 1) < 1:
        parser.error("--jobs must be positive")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"icanonical: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
