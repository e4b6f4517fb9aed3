"""Command-line front end.

Exit status is 0 on success, 1 when a mathematical check fails and 2 for
usage, input or parse errors.
"""

from __future__ import annotations

import argparse
import sys

from . import catalog as cat
from .coxeter import DEFAULT_CAP
from .errors import CapExceeded, InvalidRennerData, NotPrime, ParseError, RennerError
from .hecke import HeckeAlgebra, HeckeElement
from .oracle import DEFAULT_ORACLE_CAP, compare_with_generic
from .renner import RennerMonoid, validate_data


def _add_source(p: argparse.ArgumentParser, positional: bool = False):
    if positional:
        p.add_argument("file", nargs="?", help="data file")
    else:
        p.add_argument("--data", dest="file", metavar="FILE", help="data file")
    p.add_argument("--rook", type=int, metavar="N", help="use the built-in rook monoid R_N")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="element cap for the Coxeter group")


def _load(args):
    if (args.file is None) == (args.rook is None):
        raise ParseError("give exactly one of a data file or --rook N")
    if args.rook is not None:
        if args.rook < 1:
            raise ParseError("--rook needs a positive integer")
        return cat.rook_data(args.rook)
    return cat.from_file(args.file)


def _monoid(args) -> RennerMonoid:
    return RennerMonoid(_load(args), cap=args.cap)


def cmd_catalog(args, out):
    if args.rook is not None:
        if args.rook < 1:
            raise ParseError("--rook needs a positive integer")
        out.write(cat.to_text(cat.rook_data(args.rook)))
        return 0
    sets = cat.catalog()
    if args.name:
        if args.name not in sets:
            raise ParseError(f"unknown data set {args.name!r}; known: {', '.join(sets)}")
        out.write(cat.to_text(sets[args.name]))
        return 0
    for name in sets:
        out.write(name + "\n")
    return 0


def cmd_validate(args, out):
    data = cat.from_file(args.file)
    report = validate_data(data, args.cap)
    out.write(("valid" if report.ok else str(report)) + "\n")
    return 0 if report.ok else 1


def cmd_elements(args, out):
    m = _monoid(args)
    elements = m.enumerate()
    for r in elements:
        out.write(f"{m.format(r)}\t{m.length(r)}\n")
    out.write(f"# {len(elements)} elements\n")
    return 0


def cmd_mul(args, out):
    m = _monoid(args)
    a, b = m.parse(args.left), m.parse(args.right)
    out.write(m.format(m.multiply(a, b)) + "\n")
    return 0


def cmd_hecke_mul(args, out):
    m = _monoid(args)
    h = HeckeAlgebra(m)
    a, b = m.parse(args.left), m.parse(args.right)
    out.write(h.format(h.multiply(HeckeElement.basis(a), HeckeElement.basis(b))) + "\n")
    return 0


def cmd_verify(args, out):
    m = _monoid(args)
    failures = []
    elements = m.enumerate()
    pres = m.verify_presentation()
    out.write(f"monoid relations: {len(pres)} failures\n")
    failures += pres
    h = HeckeAlgebra(m)
    hec = h.verify_hecke_presentation()
    out.write(f"Hecke relations: {len(hec)} failures\n")
    failures += hec
    inv = []
    if set(m.normal_forms()) != set(elements):
        inv.append("normal forms differ from the multiplicative closure")
    if m.conjugate_idempotents() != set(m.idempotents()):
        inv.append("idempotents differ from the conjugates of the lattice")
    e = [HeckeElement.basis(r) for r in elements]
    for i, a in enumerate(elements):
        for j, b in enumerate(elements):
            if h.multiply(e[i], e[j]) != h.multiply_right(e[i], e[j]):
                inv.append(f"left and right folding disagree on {m.format(a)} * {m.format(b)}")
    out.write(f"invariants: {len(inv)} failures\n")
    failures += inv
    for f in failures:
        out.write(f"  {f}\n")
    out.write(f"{len(elements)} elements checked\n")
    return 0 if not failures else 1


def cmd_oracle(args, out):
    report = compare_with_generic(args.n, args.p, args.cap, args.emit_table)
    out.write(report.summary() + "\n")
    if not report.ok:
        for line in report.non_integer[:10]:
            out.write(f"  non-integral: {line}\n")
        for line in report.mismatches[:10]:
            out.write(f"  mismatch: {line}\n")
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rennerhecke", description="Renner monoids and their generic Hecke algebras.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("catalog", help="list or print built-in data sets")
    p.add_argument("--rook", type=int, metavar="N")
    p.add_argument("--name")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("validate", help="validate a data file")
    p.add_argument("file")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("elements", help="list all elements with their lengths")
    _add_source(p, positional=True)
    p.set_defaults(func=cmd_elements)

    for name, func, what in (("mul", cmd_mul, "monoid product"), ("hecke-mul", cmd_hecke_mul, "Hecke product T_a T_b")):
        p = sub.add_parser(name, help=f"print the {what} of two elements written as 'w1 . e . w2'")
        _add_source(p)
        p.add_argument("left")
        p.add_argument("right")
        p.set_defaults(func=func)

    p = sub.add_parser("verify", help="run the relation and invariant suites")
    _add_source(p, positional=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle-compare", aliases=["oracle"], help="compare with the M_n(F_p) convolution algebra")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--cap", type=int, default=DEFAULT_ORACLE_CAP)
    p.add_argument("--emit-table", metavar="PATH", help="write the rational constant table")
    p.set_defaults(func=cmd_oracle)
    return parser


def run(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except (ParseError, NotPrime, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except (InvalidRennerData, CapExceeded) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1
    except RennerError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1


def main():
    sys.exit(run())
