"""Command-line front end.

Exit status: 0 answered, 2 parse/usage error, 3 unsupported combination,
4 internal verification failure.
"""
from __future__ import annotations

import argparse
import logging
import sys

from . import groups, magnus, solvable, wreath
from .errors import AlphabetError, ParseError, UnsupportedError, VerificationError
from .groups import FreeSolvable, Wreath, parse_group
from .words import Word, format_word, parse_word

EXIT_OK, EXIT_USAGE, EXIT_UNSUPPORTED, EXIT_BUG = 0, 2, 3, 4

ARITY = {"wp": 1, "pair": 1, "magnus": 1, "cp": 2, "csp": 2, "pp": 2, "selftest": 0}


def _split(G) -> int | None:
    return G.A.rank if isinstance(G, Wreath) else None


def read_word(text: str, G) -> Word:
    return parse_word(text, G.rank, split=_split(G))


def show_word(w: Word, G) -> str:
    return format_word(w, split=_split(G))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="solvcore",
        description="Word, power and conjugacy problems in wreath products and free solvable groups.")
    sub = parser.add_subparsers(dest="verb", required=True)
    helps = {
        "wp": "is the word trivial?",
        "cp": "are the two words conjugate?",
        "csp": "find z with z x z^-1 = y",
        "pp": "find n with x = y^n",
        "pair": "pair form (top | key -> value ; ...) of a wreath product word",
        "magnus": "Magnus image of a word of S(d,r) over S(d-1,r)",
        "selftest": "run a quick subset of the acceptance checks",
    }
    for verb, n in ARITY.items():
        p = sub.add_parser(verb, help=helps[verb])
        if verb != "selftest":
            p.add_argument("--group", "-g", required=True,
                           help="Z^r, Z/n, S(d,r) or wr(A,B), e.g. 'wr(Z^2,S(2,2))'")
            names = ["word"] if n == 1 else ["x", "y"]
            for name in names:
                p.add_argument(name, help="space-separated tokens x1 X1 (y1 Y1 for the top group)")
        p.add_argument("--cross-check", action="store_true",
                       help="run both wreath decision paths and compare")
        p.add_argument("--verbose", "-v", action="store_true", help="trace algorithm steps on stderr")
        p.add_argument("--budget", type=int, default=None,
                       help="max length of the fallback conjugator search (env SOLVCORE_BUDGET)")
    return parser


def run(args) -> tuple[int, str]:
    if args.verb == "selftest":
        from .checks import selftest
        results = selftest()
        text = "\n".join(r.line() for r in results)
        return (EXIT_OK if all(r.passed for r in results) else EXIT_BUG), text

    G = parse_group(args.group)
    if args.verb in ("wp", "pair", "magnus"):
        w = read_word(args.word, G)
        if args.verb == "wp":
            return EXIT_OK, "yes" if groups.wp(G, w) else "no"
        if args.verb == "pair":
            if not isinstance(G, Wreath):
                raise UnsupportedError(f"pair form needs a wreath product, got {G}")
            return EXIT_OK, wreath.format_element(wreath.to_pair_form(w, G.A, G.B), G.A)
        if not isinstance(G, FreeSolvable) or G.degree < 2:
            raise UnsupportedError(f"Magnus image needs S(d,r) with d >= 2, got {G}")
        B = solvable.SolvableContext(G.degree, G.rank).B
        return EXIT_OK, str(magnus.magnus_image(w, B, G.rank))

    x, y = read_word(args.x, G), read_word(args.y, G)
    if args.verb == "cp":
        return EXIT_OK, "yes" if groups.cp(G, x, y) else "no"
    if args.verb == "pp":
        n = groups.pp(G, x, y)
        return EXIT_OK, "no" if n is None else f"n = {n}"
    if isinstance(G, FreeSolvable) and args.budget is not None:
        z = solvable.csp_solvable(G.degree, G.rank, x, y, budget=args.budget)
    else:
        z = groups.csp(G, x, y)
    return EXIT_OK, "no" if z is None else f"conjugator: {show_word(z, G)}"


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code
    if args.verbose:
        logging.basicConfig(level=logging.DEBUG, stream=sys.stderr, format="%(name)s: %(message)s")
    try:
        with groups.cross_checking(args.cross_check):
            status, text = run(args)
    except (ParseError, AlphabetError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except UnsupportedError as exc:
        print(f"unsupported: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except VerificationError as exc:
        print(f"internal verification failure: {exc}", file=sys.stderr)
        return EXIT_BUG
    print(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
