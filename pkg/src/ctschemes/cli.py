"""Command-line front end.

Exit codes: 0 success, 1 usage or parse error, 2 cap exceeded during
generation, 3 violated precondition (e.g. CRT moduli not coprime).
"""

from __future__ import annotations

import argparse
import logging
import sys

from .arith import ArithError, CoprimalityError, Modulus, parse_index
from .auto import CapExceeded, generate_auto
from .ctdef import (CATALOG_NAMES, BinomialSumSpec, CatalogError, CTPair, UnsupportedSpecError, bin_to_ct,
                    catalog)
from .evaluate import CFiniteSpec, PreconditionError, cfinite_eval, eval_crt, evaluate, sequence
from .expr import ExprError
from .linear import generate_linear
from .schemefile import SchemeFileError, load_scheme, save_scheme

EXIT_OK, EXIT_USAGE, EXIT_CAP, EXIT_PRECONDITION = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _int_list(text):
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def _pair_from_args(args):
    chosen = [args.seq is not None, args.P is not None, args.binsum is not None]
    if sum(chosen) != 1:
        raise UsageError("give exactly one of --seq, --P/--Q or --binsum")
    if args.seq is not None:
        return catalog(args.seq)
    if args.binsum is not None:
        return bin_to_ct(BinomialSumSpec.parse(args.binsum))
    vars = [v.strip() for v in args.vars.split(",")]
    return CTPair.parse(args.P, args.Q, vars)


def cmd_gen(args):
    pair = _pair_from_args(args)
    modulus = Modulus(args.p, args.a)
    build = generate_auto if args.kind == "auto" else generate_linear
    scheme = build(pair, modulus, args.cap)
    if args.out:
        P, Q = pair.strings()
        save_scheme(scheme, args.out, source={"P": P, "Q": Q, "vars": list(pair.vars)},
                    include_defs=not args.no_defs)
    print(f"{scheme.r} states")


def cmd_eval(args):
    scheme = load_scheme(args.scheme)
    print(evaluate(scheme, parse_index(args.n)))


def cmd_seq(args):
    if args.count < 1:
        raise UsageError("--count must be at least 1")
    scheme = load_scheme(args.scheme)
    print(",".join(map(str, sequence(scheme, args.count))))


def cmd_crt(args):
    schemes = [load_scheme(path.strip()) for path in args.schemes.split(",") if path.strip()]
    if not schemes:
        raise UsageError("--schemes needs at least one file")
    print(eval_crt(schemes, args.m, parse_index(args.n)))


def cmd_bin2ct(args):
    pair = bin_to_ct(BinomialSumSpec.parse(args.binsum))
    P, Q = pair.strings()
    print(f"vars: {','.join(pair.vars)}")
    print(f"P: {P}")
    print(f"Q: {Q}")


def cmd_cfinite(args):
    if args.m < 2:
        raise UsageError("--m must be at least 2")
    try:
        spec = CFiniteSpec(_int_list(args.rec), _int_list(args.init), args.offset)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    print(cfinite_eval(spec, args.m, parse_index(args.n)))


def build_parser():
    parser = _Parser(prog="ctschemes", description="Congruence schemes for constant-term sequences.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    g = sub.add_parser("gen", help="generate a scheme")
    g.add_argument("--seq", help=f"catalog sequence ({', '.join(CATALOG_NAMES)})")
    g.add_argument("--P", help="Laurent polynomial P")
    g.add_argument("--Q", default="1", help="Laurent polynomial Q (default 1)")
    g.add_argument("--vars", default="x", help="comma-separated variable names (default x)")
    g.add_argument("--binsum", help='binomial sum "g; a,b,c,d,e,f; ..."')
    g.add_argument("--p", type=int, required=True)
    g.add_argument("--a", type=int, required=True)
    g.add_argument("--kind", choices=("auto", "linear"), default="linear")
    g.add_argument("--cap", type=int, default=10000)
    g.add_argument("--out", help="scheme file to write")
    g.add_argument("--no-defs", action="store_true", help="omit the per-state (P, Q) definitions")
    g.set_defaults(func=cmd_gen)

    e = sub.add_parser("eval", help="evaluate a scheme at n")
    e.add_argument("--scheme", required=True)
    e.add_argument("--n", required=True, help="index, decimal or B^E / B**E")
    e.set_defaults(func=cmd_eval)

    s = sub.add_parser("seq", help="first N values of a scheme")
    s.add_argument("--scheme", required=True)
    s.add_argument("--count", type=int, required=True)
    s.set_defaults(func=cmd_seq)

    c = sub.add_parser("crt", help="combine schemes for coprime prime powers")
    c.add_argument("--schemes", required=True, help="comma-separated scheme files")
    c.add_argument("--m", type=int, required=True)
    c.add_argument("--n", required=True)
    c.set_defaults(func=cmd_crt)

    b = sub.add_parser("bin2ct", help="compile a binomial sum to a constant-term pair")
    b.add_argument("--binsum", required=True)
    b.set_defaults(func=cmd_bin2ct)

    f = sub.add_parser("cfinite", help="n-th term of a C-finite sequence mod m")
    f.add_argument("--rec", required=True, help="c1,...,cd for x_n = c1 x_(n-1) + ... + cd x_(n-d)")
    f.add_argument("--init", required=True, help="initial values x_offset, ...")
    f.add_argument("--offset", type=int, default=0, help="index of the first initial value")
    f.add_argument("--m", type=int, required=True)
    f.add_argument("--n", required=True)
    f.set_defaults(func=cmd_cfinite)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                            format="%(levelname)s %(name)s: %(message)s")
        args.func(args)
    except CapExceeded as exc:
        print(f"FAIL: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (PreconditionError, CoprimalityError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except (UsageError, ExprError, CatalogError, UnsupportedSpecError, SchemeFileError, ArithError,
            OSError) as exc:
        msg = exc.args[0] if isinstance(exc, CatalogError) and exc.args else exc
        print(f"error: {msg}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
