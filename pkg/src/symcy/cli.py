"""Command-line entry point: ``symcy {egyptian,classify,hodge,decompose,verify}``.

Every command builds a list of flat row dicts plus a summary dict; the three
output formats are renderings of the same records, so their numeric content
is identical by construction.
"""
from __future__ import annotations

import argparse
import csv
import json
import re
import sys
from collections import Counter
from typing import Any, Sequence

from . import __version__
from .arith import InexactDivisionError, euler_phi
from .enumerate import (
    classify_fermat,
    egyptian_counts,
    egyptian_five,
    search_case1,
    search_case2,
    verify_row,
)
from .equivariant import isotypical_decomposition, quotient_hodge
from .hodge import genus, hodge_numbers_cy3, kuranishi_dim
from .wtypes import (
    InvalidTypeError,
    QSStatus,
    QuasiSmoothVerdict,
    WeightedType,
    make_symmetric_cy,
    quasi_smooth_general,
    quotient_type,
    well_formed_type,
)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_INVALID_INPUT = 3
EXIT_BAD_SUBARG = 4


class CommandError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _verdict(v: QuasiSmoothVerdict | None) -> dict[str, Any]:
    if v is None:
        return {"status": None, "criterion": None, "witness": None}
    return {"status": v.status.value, "criterion": v.criterion, "witness": v.witness}


def _multiset(dec) -> list[list[int]]:
    return sorted([mu, d] for mu, d in dec.multiset())


# ---------------------------------------------------------------- commands


def cmd_egyptian(args) -> tuple[list[dict], dict]:
    sols = egyptian_five(args.min_first_denominator)
    rows = [dict(zip("npqrs", s.denoms)) for s in sols]
    counts = egyptian_counts(sols)
    return rows, {"counts": {str(k): v for k, v in counts.items()}, "total": len(rows)}


def _fermat_rows() -> list[dict]:
    table = classify_fermat()
    classes = Counter(tuple(sorted(r.cy.weights)) for r in table)
    out = []
    for r in table:
        out.append({
            "quad": list(r.quad),
            "degree": r.cy.degree,
            "weights": list(r.cy.weights),
            "h12": r.h12,
            "g": r.g,
            "order": r.order,
            "rep": r.repstring,
            "multiset": _multiset(r.decomposition),
            "weight_class_size": classes[tuple(sorted(r.cy.weights))],
        })
    return out


def _nonfermat_rows(rows) -> list[dict]:
    covers = Counter(r.underlying for r in rows)
    out = []
    for r in rows:
        cy = r.cy
        dec = isotypical_decomposition(cy)
        out.append({
            "weights": list(r.weights),
            "degree": r.degree,
            "case": r.case,
            "r": r.r,
            "e": r.e,
            "order": cy.m,
            "h12": hodge_numbers_cy3(cy.wtype).h12,
            "g": genus(cy.curve_type),
            "rep": dec.repstring,
            "multiset": _multiset(dec),
            "underlying": list(r.underlying),
            "covers": covers[r.underlying],
        })
    return out


def cmd_classify(args) -> tuple[list[dict], dict]:
    if args.fermat:
        rows = _fermat_rows()
        return rows, {"mode": "fermat", "total": len(rows)}
    found = search_case1() if args.case1 else search_case2()
    rows = _nonfermat_rows(found)
    summary = {
        "mode": "case1" if args.case1 else "case2",
        "total": len(rows),
        "underlying_types": len({tuple(r["underlying"]) for r in rows}),
    }
    return rows, summary


def cmd_hodge(args) -> tuple[list[dict], dict]:
    try:
        wt = WeightedType(args.degree, args.weights)
    except InvalidTypeError as exc:
        raise CommandError(str(exc), EXIT_INVALID_INPUT) from exc
    if len(wt.weights) not in (3, 5):
        raise CommandError(f"need 3 or 5 weights, got {len(wt.weights)}", EXIT_INVALID_INPUT)
    verdict = quasi_smooth_general(wt)
    if verdict.status is QSStatus.NOT_QUASI_SMOOTH_GENERAL:
        raise CommandError(f"{wt} is not quasi-smooth: {verdict.witness}", EXIT_INVALID_INPUT)
    row: dict[str, Any] = {
        "degree": wt.degree,
        "weights": list(wt.weights),
        "hodge": None,
        "genus": None,
    }
    try:
        if len(wt.weights) == 5:
            row["hodge"] = list(hodge_numbers_cy3(wt).as_tuple())
        else:
            row["genus"] = genus(wt)
        row["kuranishi"] = kuranishi_dim(wt)
    except (InvalidTypeError, InexactDivisionError) as exc:
        raise CommandError(str(exc), EXIT_INVALID_INPUT) from exc
    row["well_formed"] = well_formed_type(wt)
    row["quasi_smooth"] = _verdict(verdict)
    return [row], {}


def cmd_decompose(args) -> tuple[list[dict], dict]:
    try:
        cy = make_symmetric_cy(args.A, args.a, args.b, args.c)
    except InvalidTypeError as exc:
        raise CommandError(str(exc), EXIT_INVALID_INPUT) from exc
    verdict = quasi_smooth_general(cy.wtype)
    if verdict.status is QSStatus.NOT_QUASI_SMOOTH_GENERAL:
        raise CommandError(f"{cy} is not quasi-smooth: {verdict.witness}", EXIT_INVALID_INPUT)
    if args.quotient is not None and (args.quotient < 1 or cy.m % args.quotient or args.quotient >= cy.m):
        raise CommandError(
            f"--quotient {args.quotient} must be a divisor of m={cy.m} smaller than m", EXIT_BAD_SUBARG
        )
    dec = isotypical_decomposition(cy)
    rows = []
    for d in sorted(dec.components, reverse=True):
        mu, hv = dec.components[d]
        rows.append({"d": d, "phi": euler_phi(d), "multiplicity": mu, "hodge": list(hv.as_tuple())})
    total = hodge_numbers_cy3(cy.wtype)
    summary: dict[str, Any] = {
        "type": str(cy.wtype),
        "order": cy.m,
        "rep": dec.repstring,
        "total": list(total.as_tuple()),
        "quasi_smooth": _verdict(verdict),
        "quotient": None,
    }
    if args.quotient is not None:
        d = args.quotient
        summary["quotient"] = {
            "d": d,
            "type": str(quotient_type(cy, d)),
            "hodge": list(quotient_hodge(cy, d).as_tuple()),
        }
    return rows, summary


_ROW = re.compile(r"^\(?\s*(\d+(?:\s*[,\s]\s*\d+)*)\s*\)?\s*(?:#.*)?$")


def read_weight_rows(text: str) -> list[tuple[int, tuple[int, ...]]]:
    """Parse ``(A,1,a,b,c)`` rows; ``#`` comments and blank lines are skipped.

    Raises ``CommandError`` (usage) naming the offending line.
    """
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        m = _ROW.match(line)
        if m is None:
            raise CommandError(f"line {lineno}: cannot parse {line!r}", EXIT_USAGE)
        weights = tuple(int(x) for x in re.split(r"[,\s]+", m.group(1)))
        if len(weights) != 5:
            raise CommandError(
                f"line {lineno}: expected 5 weights, got {len(weights)} in {line!r}", EXIT_USAGE
            )
        out.append((lineno, weights))
    return out


def cmd_verify(args) -> tuple[list[dict], dict]:
    try:
        with open(args.file) as fh:
            text = fh.read()
    except OSError as exc:
        raise CommandError(f"cannot read {args.file}: {exc.strerror}", EXIT_USAGE) from exc
    rows = []
    for lineno, weights in read_weight_rows(text):
        try:
            report = verify_row(weights)
        except InvalidTypeError as exc:
            raise CommandError(f"line {lineno}: {exc}", EXIT_USAGE) from exc
        rows.append({
            "line": lineno,
            "weights": list(weights),
            **{name: ok for name, ok in report.checks.items()},
            "structural_ok": report.structural_ok,
            "failures": report.failures(),
            "quasi_smooth": _verdict(report.quasi_smooth),
        })
    failed = sum(not r["structural_ok"] for r in rows)
    return rows, {"total": len(rows), "failed": failed}


# ---------------------------------------------------------------- rendering


def _cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, list):
        if value and isinstance(value[0], list):
            return " ".join("{}x{}".format(*pair) for pair in value)
        return "(" + ",".join(str(v) for v in value) + ")"
    if isinstance(value, dict):
        return "/".join(_cell(v) for v in value.values() if v is not None)
    return str(value)


def _columns(rows: list[dict]) -> list[str]:
    cols: list[str] = []
    for row in rows:
        for key in row:
            if key not in cols:
                cols.append(key)
    return cols


def render_text(rows: list[dict], summary: dict, out) -> None:
    cols = _columns(rows)
    if rows:
        cells = [[_cell(row.get(c)) for c in cols] for row in rows]
        widths = [max(len(c), *(len(r[i]) for r in cells)) for i, c in enumerate(cols)]
        print("  ".join(c.ljust(w) for c, w in zip(cols, widths)).rstrip(), file=out)
        for r in cells:
            print("  ".join(v.ljust(w) for v, w in zip(r, widths)).rstrip(), file=out)
    for key, value in summary.items():
        if value is None:
            continue
        if isinstance(value, dict) and key == "counts":
            value = " ".join(f"{k}:{v}" for k, v in value.items())
        elif isinstance(value, dict):
            value = " ".join(f"{k}={_cell(v)}" for k, v in value.items())
        else:
            value = _cell(value)
        print(f"{key}: {value}", file=out)


def render_csv(rows: list[dict], out) -> None:
    cols = _columns(rows)
    writer = csv.writer(out, lineterminator="\n")
    if cols:
        writer.writerow(cols)
    for row in rows:
        writer.writerow([_cell(row.get(c)) for c in cols])


def render_json(command: str, arguments: dict, rows: list[dict], summary: dict, out) -> None:
    record = {
        "command": command,
        "arguments": arguments,
        "version": __version__,
        "rows": rows,
        "summary": summary,
    }
    json.dump(record, out, indent=2)
    out.write("\n")


# ---------------------------------------------------------------- parser


def _nonneg_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="symcy",
        description="Symmetric Calabi-Yau threefold hypersurfaces: enumeration and Hodge data.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("text", "json", "csv"), default="text")

    p = sub.add_parser("egyptian", parents=[fmt], help="5-term Egyptian fractions of 1")
    p.add_argument("--min-first-denominator", type=_nonneg_int, default=1, metavar="N")
    p.set_defaults(func=cmd_egyptian)

    p = sub.add_parser("classify", parents=[fmt], help="Fermat-type table or non-Fermat searches")
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--fermat", action="store_true")
    mode.add_argument("--case1", action="store_true")
    mode.add_argument("--case2", action="store_true")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("hodge", parents=[fmt], help="Hodge vector (5 weights) or genus (3 weights)")
    p.add_argument("degree", type=int)
    p.add_argument("weights", type=int, nargs="+")
    p.set_defaults(func=cmd_hodge)

    p = sub.add_parser("decompose", parents=[fmt], help="isotypical decomposition of H^3")
    for name in ("A", "a", "b", "c"):
        p.add_argument(name, type=int)
    p.add_argument("--quotient", type=int, metavar="D")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("verify", parents=[fmt], help="structural checks on a file of (A,1,a,b,c) rows")
    p.add_argument("file")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        rows, summary = args.func(args)
    except CommandError as exc:
        print(f"symcy {args.command}: error: {exc}", file=sys.stderr)
        return exc.code
    out = sys.stdout
    try:
        if args.format == "json":
            arguments = {k: v for k, v in vars(args).items() if k not in ("func", "command", "format")}
            render_json(args.command, arguments, rows, summary, out)
        elif args.format == "csv":
            render_csv(rows, out)
        else:
            render_text(rows, summary, out)
        out.flush()
    except BrokenPipeError:
        # Reader went away (e.g. piped into head); silence the flush at exit.
        sys.stdout = None
    if args.command == "verify" and summary["failed"]:
        return EXIT_VERIFY_FAILED
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
