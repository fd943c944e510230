"""Command-line front end.

Exit codes: 0 success / property holds, 1 property violated, 2 malformed
input or invalid usage.
"""
from __future__ import annotations

import argparse
import sys

from . import formats
from .audit import CORRECTED, DEFAULT_MAX_SUBSET, LITERAL, audit_propositions
from .codes import export_hasse, generate_code
from .core import (
    DEFAULT_ENUMERATION_BOUND,
    KUAlgebra,
    check_derived_identities,
    enumerate_algebras,
    verify_axioms,
)
from .errors import KUError, NotKUAlgebra
from .function import KUFunction
from .reconstruct import reconstruct

EXIT_OK, EXIT_VIOLATED, EXIT_MALFORMED = 0, 1, 2


class _Fail(Exception):
    def __init__(self, code, message):
        self.code = code
        self.message = message


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise _Fail(EXIT_MALFORMED, f"{self.prog}: error: {message}")


def _positive(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"{text!r} must be at least 1")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="kucli", description="Finite KU-algebras, cut sets and block codes.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("check", help="verify the axioms of an algebra")
    c.add_argument("algebra")

    o = sub.add_parser("order", help="print the natural order")
    o.add_argument("algebra")
    o.add_argument("--dot", action="store_true")

    k = sub.add_parser("code", help="print the block code of a KU-function")
    k.add_argument("algebra")
    k.add_argument("--function", metavar="FILE")
    k.add_argument("--labels", action="store_true", help="one labelled row per element")
    k.add_argument("--dot", action="store_true")

    r = sub.add_parser("reconstruct", help="build an algebra from a code")
    r.add_argument("code")
    r.add_argument("--emit-algebra", metavar="OUT")
    r.add_argument("--emit-function", metavar="OUT")

    e = sub.add_parser("enumerate", help="list all KU-algebras of order n")
    e.add_argument("n", type=_positive)
    e.add_argument("--up-to-iso", action="store_true")
    e.add_argument("--count-only", action="store_true")
    e.add_argument("--max", type=_positive, default=DEFAULT_ENUMERATION_BOUND, dest="bound")

    a = sub.add_parser("audit", help="check the cut-set laws on an instance")
    a.add_argument("algebra")
    a.add_argument("--function", metavar="FILE")
    a.add_argument("--literal", action="store_true", help="also evaluate the literal variants")
    a.add_argument("--literal-cuts", action="store_true", help="use the cut convention f(x)*q = 0")
    a.add_argument("--max-subset", type=_positive, default=DEFAULT_MAX_SUBSET)
    return p


def _load_algebra(path) -> KUAlgebra:
    try:
        table = formats.read_kua(path, check=False)
    except OSError as exc:
        raise _Fail(EXIT_MALFORMED, f"{path}: cannot read: {exc.strerror}") from None
    try:
        return KUAlgebra(table)
    except NotKUAlgebra as exc:
        raise _Fail(EXIT_VIOLATED, f"{path}: not a KU-algebra: {exc.report.summary()}") from None


def _load_function(path, X):
    if path is None:
        return KUFunction.identity(X)
    try:
        return formats.read_kuf(path, X)
    except OSError as exc:
        raise _Fail(EXIT_MALFORMED, f"{path}: cannot read: {exc.strerror}") from None


def cmd_check(args, out):
    try:
        table = formats.read_kua(args.algebra, check=False)
    except OSError as exc:
        raise _Fail(EXIT_MALFORMED, f"{args.algebra}: cannot read: {exc.strerror}") from None
    report = verify_axioms(table)
    if not report.passed:
        out.write("KU-algebra: FAIL\n")
        for law in report.failed_laws():
            out.write(report.describe(law) + "\n")
        return EXIT_VIOLATED
    out.write("KU-algebra: PASS\n")
    derived = check_derived_identities(KUAlgebra(table, check=False))
    for law, found in derived.counterexamples.items():
        out.write(f"  {law}: {'ok' if not found else derived.describe(law)}\n")
    return EXIT_OK if derived.passed else EXIT_VIOLATED


def cmd_order(args, out):
    X = _load_algebra(args.algebra)
    P = X.natural_order
    if args.dot:
        out.write(export_hasse(P, name="order"))
        return EXIT_OK
    for x, y in P.strict_pairs():
        out.write(f"{X.names[x]} < {X.names[y]}\n")
    return EXIT_OK


def cmd_code(args, out):
    X = _load_algebra(args.algebra)
    f = _load_function(args.function, X)
    if args.labels:
        for name, word in generate_code(f, per_element=True):
            out.write(f"{name} {word}\n")
        return EXIT_OK
    code = generate_code(f)
    out.write(export_hasse(code, name="code") if args.dot else formats.format_kuc(code))
    return EXIT_OK


def cmd_reconstruct(args, out):
    code = formats.read_kuc(args.code)
    result = reconstruct(code)
    X = result.algebra
    out.write(f"elements: {X.order}\n")
    out.write(f"exact: {'yes' if result.exact else 'no'}\n")
    for q in range(X.order):
        out.write(f"{q} {result.word_of[q]} {result.provenance[q]}\n")
    if args.emit_algebra:
        notes = [f"{q} {result.word_of[q]} {result.provenance[q]}" for q in range(X.order)]
        notes.insert(0, f"exact: {'yes' if result.exact else 'no'}")
        formats.write_kua(args.emit_algebra, X, comments=notes)
    if args.emit_function:
        formats.write_kuf(args.emit_function, result.function)
    return EXIT_OK


def cmd_enumerate(args, out):
    algebras = enumerate_algebras(args.n, up_to_iso=args.up_to_iso, bound=args.bound)
    if args.count_only:
        out.write(f"{sum(1 for _ in algebras)}\n")
        return EXIT_OK
    first = True
    for X in algebras:
        if not first:
            out.write("\n")
        out.write(formats.format_kua(X))
        first = False
    return EXIT_OK


def cmd_audit(args, out):
    X = _load_algebra(args.algebra)
    f = _load_function(args.function, X)
    report = audit_propositions(f, max_subset=args.max_subset, literal_cuts=args.literal_cuts)
    variants = (CORRECTED, LITERAL) if args.literal else (CORRECTED,)
    out.write(report.to_text(variants) + "\n")
    ok = all(e.passed for e in report.entries if e.variant in variants)
    return EXIT_OK if ok else EXIT_VIOLATED


COMMANDS = {
    "check": cmd_check,
    "order": cmd_order,
    "code": cmd_code,
    "reconstruct": cmd_reconstruct,
    "enumerate": cmd_enumerate,
    "audit": cmd_audit,
}


def run(argv=None, out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return COMMANDS[args.command](args, out)
    except _Fail as exc:
        err.write(exc.message + "\n")
        return exc.code
    except KUError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_MALFORMED
    except OSError as exc:
        err.write(f"{exc.filename}: cannot read: {exc.strerror}\n")
        return EXIT_MALFORMED


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
