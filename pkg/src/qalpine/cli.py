"""Command-line front end.

Exit status: 0 when every check passes, 1 when a verification fails,
2 on a usage or validation error.
"""

from __future__ import annotations

import argparse
import sys
from typing import Any, Callable, Optional, Sequence

from . import alpine, bijection, formats, partitions
from .polyring import Poly
from .qbinom import QBinomTable, binomial, gaussian_binomial

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _nonneg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {value}")
    return value


class Output:
    """A rendered document plus its verdict."""

    def __init__(self, doc: Any, csv_rows: tuple[list[str], list[list[Any]]], text: str, passed: bool = True):
        self.doc = doc
        self.csv_rows = csv_rows
        self.text = text
        self.passed = passed

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return formats.dump_json(self.doc)
        if fmt == "csv":
            return formats.dump_csv(*self.csv_rows)
        return self.text if self.text.endswith("\n") else self.text + "\n"


def _poly_output(p: Poly, label: str) -> Output:
    rows = [[i, c] for i, c in enumerate(p.coeffs)]
    return Output(formats.poly_to_doc(p), (["degree", "coeff"], rows), f"{label} = {p}")


def cmd_qbinom(args, table: QBinomTable) -> Output:
    return _poly_output(gaussian_binomial(table, args.n, args.k), f"[{args.n} {args.k}]")


def cmd_verify(args, table: QBinomTable) -> Output:
    report = alpine.verify_identity(args.identity, args.max_n, table)
    field = lambda v: formats.coeff_field(v) if isinstance(v, Poly) else str(v)
    rows = [[r.n, field(r.sum_value), field(r.recurrence_value), r.equal] for r in report.per_n]
    lines = [f"{args.identity}: n = 0..{args.max_n}"]
    for r in report.per_n:
        mark = "ok" if r.equal else "MISMATCH"
        lines.append(f"  n={r.n:<3} {mark:<8} {r.sum_value}")
        if not r.equal:
            lines.append(f"         recurrence gives {r.recurrence_value}")
    bad = report.first_failure()
    lines.append("all pass" if bad is None else f"first failure at n={bad.n}")
    return Output(
        formats.report_to_doc(report),
        (["n", "sum", "rec", "equal"], rows),
        "\n".join(lines),
        report.all_pass,
    )


SERIES: dict[str, Callable[[int], Poly]] = {
    "euler": partitions.euler_product,
    "pentagonal": lambda D: partitions.theta_series(alpine.ExponentKind.C_SLALOM, D),
    "E": partitions.euler_E,
    "theta-a": lambda D: partitions.theta_series(alpine.ExponentKind.A_GS1, D),
    "theta-b": lambda D: partitions.theta_series(alpine.ExponentKind.B_GS2, D),
}


def cmd_series(args, table: QBinomTable) -> Output:
    return _poly_output(SERIES[args.name](args.degree), args.name)


def cmd_rr(args, table: QBinomTable) -> Output:
    check = partitions.rr_check(args.variant, args.degree, table)
    rows = [
        ["sum", formats.coeff_field(check.sum_side)],
        ["product", formats.coeff_field(check.product_side)],
    ]
    text = (
        f"Rogers-Ramanujan {args.variant} to order {args.degree}\n"
        f"  sum side:     {check.sum_side}\n"
        f"  product side: {check.product_side}\n"
        f"  {'equal' if check.equal else 'NOT EQUAL'}"
    )
    return Output(
        formats.rr_to_doc(args.variant, args.degree, check),
        (["side", "coeffs"], rows),
        text,
        check.equal,
    )


def cmd_bijection(args, table: QBinomTable) -> Output:
    report = bijection.verify_matching(args.n, mirrored=args.mirrored_encoding, literal=args.literal, table=table)
    doc = formats.matching_to_doc(report, full=args.full, mirrored=args.mirrored_encoding)
    rows = []
    for a, b in report.pairs:
        rows.append(["pair", a.lam, "".join(a.path), b.lam, "".join(b.path), a.weight(args.mirrored_encoding)])
    for t in report.fixed:
        rows.append(["fixed", t.lam, "".join(t.path), "", "", t.weight(args.mirrored_encoding)])
    lines = [
        f"row n={report.n}: {report.total_terms} terms, {report.pair_count} canceling pairs, "
        f"{report.fixed_count} fixed",
    ]
    if args.full:
        lines += [f"  {a}  <->  {b}" for a, b in report.pairs]
        lines += [f"  fixed {t}" for t in report.fixed]
    lines += [f"  violation: {v}" for v in report.violations]
    lines.append("all pass" if report.ok else "FAILED")
    return Output(doc, (["kind", "lambda", "path", "partner_lambda", "partner_path", "weight"], rows), "\n".join(lines), report.ok)


def _table_output(args, table: QBinomTable, with_values: bool) -> Output:
    kind, _ = alpine.IDENTITIES[args.identity]
    pro = with_values and args.pro
    doc_rows, csv_rows, lines = [], [], []
    for n in range(args.max_n + 1):
        cells = []
        total: Any = 0
        for lam, col, sign in alpine.signed_cells(args.identity, n):
            cell: dict[str, Any] = {"lambda": lam, "column": col, "sign": sign}
            row = [n, lam, col, sign]
            if with_values:
                if pro:
                    value = gaussian_binomial(table, n, col)
                    cell["exponent"] = alpine.exponent(kind, lam)
                    cell["value"] = formats.poly_to_doc(value)
                    row += [cell["exponent"], formats.coeff_field(value)]
                else:
                    value = binomial(n, col)
                    cell["value"] = str(value)
                    total += sign * value
                    row.append(value)
            cells.append(cell)
            csv_rows.append(row)
        entry: dict[str, Any] = {"n": n, "cells": cells}
        marks = " ".join(f"{'+' if c['sign'] > 0 else '-'}{c['column']}" for c in cells)
        if with_values and not pro:
            entry["total"] = str(total)
            marks += f"   total {total}"
        doc_rows.append(entry)
        lines.append(f"n={n:<3} {marks}")
    header = ["n", "lambda", "column", "sign"]
    if with_values:
        header += ["exponent", "value"] if pro else ["value"]
    doc = {"identity": args.identity, "max_n": args.max_n, "rows": doc_rows}
    if with_values:
        doc["values"] = "gaussian" if pro else "binomial"
    return Output(doc, (header, csv_rows), "\n".join(lines))


def cmd_table(args, table: QBinomTable) -> Output:
    return _table_output(args, table, with_values=False)


def cmd_fig(args, table: QBinomTable) -> Output:
    return _table_output(args, table, with_values=True)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "text"), default="text")
    common.add_argument("--out", metavar="PATH", help="write the document here instead of stdout")

    parser = argparse.ArgumentParser(prog="qalpine", description="Verify the alpine identities and their consequences.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("qbinom", parents=[common], help="Gaussian binomial coefficient list")
    p.add_argument("n", type=_nonneg)
    p.add_argument("k", type=int)
    p.set_defaults(func=cmd_qbinom)

    p = sub.add_parser("verify", parents=[common], help="compare sum and recurrence forms")
    p.add_argument("identity", choices=alpine.IDENTITY_KINDS)
    p.add_argument("--max-n", type=_nonneg, required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("series", parents=[common], help="emit a truncated series")
    p.add_argument("name", choices=tuple(SERIES))
    p.add_argument("--degree", type=_nonneg, required=True)
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("rr", parents=[common], help="check a Rogers-Ramanujan identity to a given order")
    p.add_argument("variant", type=int, choices=(1, 2))
    p.add_argument("--degree", type=_nonneg, required=True)
    p.set_defaults(func=cmd_rr)

    p = sub.add_parser("bijection", parents=[common], help="run the GS1 cancellation on one row")
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--full", action="store_true", help="include every pair and fixed term")
    p.add_argument("--mirrored-encoding", action="store_true", help="weigh words by A-before-B inversions")
    p.add_argument("--literal", action="store_true", help="apply the rules without the fixed-point guard")
    p.set_defaults(func=cmd_bijection)

    for name, func, help_ in (
        ("table", cmd_table, "signed highlighted cells per row"),
        ("fig", cmd_fig, "highlighted cells with their values"),
    ):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("--identity", choices=tuple(alpine.IDENTITIES), required=True)
        p.add_argument("--max-n", type=_nonneg, required=True)
        if name == "fig":
            p.add_argument("--pro", action="store_true", help="Gaussian binomials instead of binomials")
        p.set_defaults(func=func)
    return parser


def run(argv: Optional[Sequence[str]] = None, stdout=None) -> int:
    stdout = sys.stdout if stdout is None else stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        result = args.func(args, QBinomTable())
    except ValueError as exc:
        print(f"qalpine: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text = result.render(args.format)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    return EXIT_OK if result.passed else EXIT_FAIL


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
