"""Command-line front end.

Exit codes: 0 success, 1 verification or proposition failure, 2 usage error.
"""
from __future__ import annotations

import argparse
import csv
import io
import math
import re
import sys
from collections import Counter
from pathlib import Path

from . import __version__
from .analysis import analyze
from .errors import InvalidParameters
from .milnor import ALWAYS_ZERO, MIXED, NEVER_ZERO, PROPOSITION_ZERO_SET, residue_table
from .plumbing import to_dot as plumbing_dot
from .report import CSV_COLUMNS, csv_row, to_json, to_text
from .splice import to_dot as splice_dot
from .verify import verify_grid

_RANGE = re.compile(r"^\s*(\d+)\s*(?:\.\.\s*(\d+)\s*)?$")


def parse_range(text: str) -> range:
    """Inclusive ``A..B`` (or a single ``N``)."""
    m = _RANGE.match(text)
    if not m:
        raise argparse.ArgumentTypeError(f"malformed range {text!r}; expected A..B")
    lo = int(m.group(1))
    hi = int(m.group(2)) if m.group(2) is not None else lo
    if hi < lo:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return range(lo, hi + 1)


def grid(ps: range, qs: range, rs: range) -> tuple[list[tuple[int, int, int]], int]:
    """Valid triples in lexicographic order, plus the number skipped."""
    keep, skipped = [], 0
    for p in ps:
        for q in qs:
            for r in rs:
                if min(p, q, r) >= 2 and math.gcd(p, q) == 1:
                    keep.append((p, q, r))
                else:
                    skipped += 1
    return keep, skipped


def cmd_analyze(args) -> int:
    conventions = ("paper", args.chi_convention)
    try:
        a = analyze(args.p, args.q, args.r, conventions)
    except InvalidParameters as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.format == "json":
        sys.stdout.write(to_json(a, (args.chi_convention,)))
    else:
        sys.stdout.write(to_text(a, args.chi_convention))
    if args.dot:
        Path(args.dot).write_text(plumbing_dot(a.graph))
    if args.splice_dot:
        Path(args.splice_dot).write_text(splice_dot(a.diagram))
    return 0


def cmd_scan(args) -> int:
    triples, skipped = grid(args.p, args.q, args.r)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for t in triples:
        writer.writerow(csv_row(analyze(*t, conventions=("paper",))))
    if args.out:
        Path(args.out).write_text(buf.getvalue())
    else:
        sys.stdout.write(buf.getvalue())
    print(f"# {len(triples)} rows, {skipped} triples skipped (not coprime or < 2)",
          file=sys.stderr)
    return 0


def cmd_verify(args) -> int:
    triples, skipped = grid(args.p, args.q, args.r)
    out = verify_grid(triples)
    print(f"verify: {out.triples} triples checked, {skipped} skipped")
    for f in out.failures:
        p, q, r = f.triple
        print(f"FAIL ({p},{q},{r}) {f.name}: {f.detail}")
    print(f"hard checks: {out.checks - len(out.failures)} passed, {len(out.failures)} failed")
    print("diagnostics (closed forms; reported, never fatal):")
    for d in out.diags:
        if args.verbose or not d.match:
            print("  " + d.line())
    tally: Counter = Counter()
    for d in out.diags:
        tally[(d.name, d.formula, d.match)] += 1
    names = sorted({(d.name, d.formula) for d in out.diags})
    print("diagnostic summary:")
    for name, formula in names:
        print(f"  {name} [{formula}]: {tally[(name, formula, True)]} MATCH, "
              f"{tally[(name, formula, False)]} MISMATCH")
    return 0 if out.ok else 1


_CELL = {ALWAYS_ZERO: "ZERO", NEVER_ZERO: ".", MIXED: "MIX"}


def cmd_congruence(args) -> int:
    if args.max_p < 14 or args.max_q < 14:
        print("error: --max-p and --max-q must be >= 14", file=sys.stderr)
        return 2
    census = residue_table(args.max_p, args.max_q)
    if args.format == "csv":
        w = csv.writer(sys.stdout, lineterminator="\n")
        w.writerow(["p_mod_12", "q_mod_12", "status", "witness_p", "witness_q", "values"])
        for (i, j), status in sorted(census.cells.items()):
            wit = census.witnesses.get((i, j), ("", ""))
            vals = " ".join(str(v) for v in sorted(census.values.get((i, j), ())))
            w.writerow([i, j, status, wit[0], wit[1], vals])
    else:
        print(f"mod-12 defect 11-2p-2q-delta(2delta+1), coprime 2<=p<={args.max_p}, "
              f"2<=q<={args.max_q}")
        print("rows p mod 12, columns q mod 12; ZERO = always 0, . = never 0, - = no coprime pair")
        print("p\\q " + "".join(f"{j:>5}" for j in range(12)))
        for i in range(12):
            cells = "".join(f"{_CELL.get(census.cells[(i, j)], '-'):>5}" for j in range(12))
            print(f"{i:>3} {cells}")
        zs = ", ".join(f"({i},{j})" for i, j in sorted(census.zero_set))
        print(f"always-zero residue pairs: {zs}")
    if args.check_proposition:
        ok = census.matches_proposition()
        expected = ", ".join(f"({i},{j})" for i, j in sorted(PROPOSITION_ZERO_SET))
        print(f"proposition check: {'PASS' if ok else 'FAIL'} (expected {expected})",
              file=sys.stderr)
        return 0 if ok else 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="realsing",
        description="Exact invariants of the links of conj(xy)(x^p + y^q) + z^r.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full pipeline for one triple")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p.add_argument("r", type=int)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--chi-convention", choices=("paper", "genus"), default="paper")
    p.add_argument("--dot", metavar="PATH", help="write the plumbing graph as DOT")
    p.add_argument("--splice-dot", metavar="PATH", help="write the splice diagram as DOT")
    p.set_defaults(func=cmd_analyze)

    for name, func, helptext in (
        ("scan", cmd_scan, "CSV table over a grid of triples"),
        ("verify", cmd_verify, "hard identities and closed-form diagnostics over a grid"),
    ):
        s = sub.add_parser(name, help=helptext)
        s.add_argument("--p", type=parse_range, required=True, metavar="A..B")
        s.add_argument("--q", type=parse_range, required=True, metavar="A..B")
        s.add_argument("--r", type=parse_range, required=True, metavar="A..B")
        if name == "scan":
            s.add_argument("--out", metavar="PATH")
        else:
            s.add_argument("--verbose", action="store_true", help="also print MATCH lines")
        s.set_defaults(func=func)

    c = sub.add_parser("congruence", help="residue census of the mod-12 defect")
    c.add_argument("--max-p", type=int, required=True)
    c.add_argument("--max-q", type=int, required=True)
    c.add_argument("--format", choices=("text", "csv"), default="text")
    c.add_argument("--check-proposition", action="store_true")
    c.set_defaults(func=cmd_congruence)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
