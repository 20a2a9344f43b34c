"""Command-line front end: ``rookq table``, ``rookq verify``, ``rookq bijection``.

Exit codes: 0 success, 1 verification failure, 2 usage error.  Results go to
standard output and diagnostics to standard error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import bijections, closedforms, permstats, rookmodel, verify
from .rookmodel import LiteralError, RookPlacement, YoungShape

SCHEMA = "rookq/1"

# largest accepted --n per statistic
TABLE_LIMITS = {"Tjkn": 14, "Tkn": 14, "Tn": 14, "grand": 40, "grand_y1": 40, "moment": 30}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _table_rows(stat: str, n_max: int):
    if stat == "Tjkn":
        for n in range(n_max + 1):
            for k in range(n + 1):
                for j in range(k + 1):
                    yield {"n": n, "k": k, "j": j}, rookmodel.t_rec(j, k, n)
    elif stat == "Tkn":
        for n in range(n_max + 1):
            for k in range(n + 1):
                yield {"n": n, "k": k}, rookmodel.t_kn(k, n, "rec")
    elif stat == "Tn":
        for n in range(n_max + 1):
            yield {"n": n}, rookmodel.t_full(n, "rec")
    elif stat == "grand":
        for n in range(1, n_max + 1):
            yield {"n": n}, closedforms.grand_formula(n).value
    elif stat == "grand_y1":
        for n in range(1, n_max + 1):
            yield {"n": n}, closedforms.grand_formula_y1(n)
    elif stat == "moment":
        for n in range(1, n_max + 1):
            yield {"n": n}, permstats.laguerre_moment(n)


def cmd_table(args) -> int:
    limit = TABLE_LIMITS[args.stat]
    if not 0 <= args.n <= limit:
        raise UsageError(f"--n for {args.stat} must lie in [0, {limit}], got {args.n}")
    rows = list(_table_rows(args.stat, args.n))
    if args.format == "json":
        doc = {
            "schema": SCHEMA,
            "stat": args.stat,
            "rows": [
                {**idx, "value": str(poly), "terms": poly.to_records()} for idx, poly in rows
            ],
        }
        sys.stdout.write(json.dumps(doc, indent=1) + "\n")
    else:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["schema", "stat", "n", "k", "j", "value"])
        for idx, poly in rows:
            writer.writerow([SCHEMA, args.stat, idx["n"], idx.get("k", ""), idx.get("j", ""), str(poly)])
        sys.stdout.write(buf.getvalue())
    return 0


def cmd_verify(args) -> int:
    if args.max_n is not None and args.max_n < 0:
        raise UsageError("--max-n must be nonnegative")
    try:
        report = verify.run_suite(args.suite, args.max_n)
    except ValueError as exc:  # bad ROOKQ_THREADS
        raise UsageError(str(exc)) from None
    for check in report.checks:
        status = "ok" if not check.failures else "FAIL"
        print(f"{check.name}: {check.checked} checked, {len(check.failures)} failed [{status}]")
        for failure in check.failures[:20]:
            print(f"  failing instance: {failure}")
    print(
        f"suite {report.suite}: {report.checked} checked, {len(report.failures)} failed",
    )
    print(f"wall time {report.wall_time:.2f}s", file=sys.stderr)
    return 0 if report.ok else 1


def _describe(inv: bijections.Involution, beta_shape: YoungShape) -> list[str]:
    arches = " ".join(f"({i},{j})" for i, j in inv.sorted_arches()) or "none"
    heights = inv.heights()
    return [
        f"involution size: {inv.n}",
        f"arches: {arches}",
        f"fixed points: {' '.join(map(str, sorted(inv.fixed))) or 'none'}",
        f"heights: {' '.join(f'{x}:{h}' for x, h in heights.items()) or 'none'}",
        f"crossings: {inv.crossings()}",
        f"mu: {bijections.mu(inv)}",
        f"beta shape: {beta_shape.literal()}",
    ]


def cmd_bijection(args) -> int:
    try:
        shape = YoungShape.parse(args.shape)
    except LiteralError as exc:
        raise UsageError(f"shape literal: {exc}") from None
    except ValueError as exc:
        raise UsageError(f"shape literal: {exc}") from None
    try:
        rooks = rookmodel.parse_rooks(args.rooks)
        placement = RookPlacement(shape, rooks)
    except ValueError as exc:
        raise UsageError(f"rooks literal: {exc}") from None
    inv, beta_shape = bijections.phi(placement)
    lines = _describe(inv, beta_shape)
    lines.append(f"crosses: {rookmodel.crosses(placement)}")
    if args.invert:
        back = bijections.phi_inv(inv, beta_shape)
        lines.append(f"inverse shape: {back.shape.literal()}")
        lines.append(f"inverse rooks: {rookmodel.rooks_literal(back.rooks)}")
        lines.append(f"round trip: {'ok' if back == placement else 'MISMATCH'}")
        print("\n".join(lines))
        return 0 if back == placement else 1
    print("\n".join(lines))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="rookq", description="Rook placements in Young diagrams, exactly.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    t = sub.add_parser("table", help="print a table of polynomials")
    t.add_argument("--stat", required=True, choices=sorted(TABLE_LIMITS))
    t.add_argument("--n", type=int, required=True, help="largest size to tabulate")
    t.add_argument("--format", choices=("json", "csv"), default="json")
    t.set_defaults(func=cmd_table)

    v = sub.add_parser("verify", help="run exhaustive invariant checks")
    v.add_argument("--suite", default="all", choices=["all", *verify.SUITES])
    v.add_argument("--max-n", type=int, default=None, help="override every suite's size limit")
    v.set_defaults(func=cmd_verify)

    b = sub.add_parser("bijection", help="apply phi = (alpha, beta) to one placement")
    b.add_argument("shape", help="shape literal, e.g. n=10,k=5,parts=5,5,5,4,2")
    b.add_argument("rooks", nargs="?", default="", help="rooks as (row,col),... ; rows from the bottom")
    b.add_argument("--invert", action="store_true", help="also apply the inverse map")
    b.set_defaults(func=cmd_bijection)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"rookq: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
