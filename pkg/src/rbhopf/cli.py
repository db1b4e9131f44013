"""Command-line front end (``rba``).

Exit status: 0 on success or when every check passes, 1 when a check fails,
2 on usage, parse or evaluation errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import laws
from .algebra import LinComb
from .coalgebra import coproduct
from .coeffs import SYMBOLIC, WeightMode
from .errors import RBError
from .hopf import antipode_lin, counterexample_weight_nonzero
from .textio import evaluate, export_structured, parse, print_lincomb, print_tensor2, to_jsonable, uses
from .words import IDENTIFIER, RESERVED, enumerate_words, words_of_degree

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def parse_weight(text: str) -> WeightMode:
    if text == "symbolic":
        return SYMBOLIC
    try:
        return WeightMode(Fraction(text))
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError("weight must be 'symbolic' or a rational, got %r" % text)


def parse_alphabet(text: str) -> tuple:
    names = tuple(n.strip() for n in text.split(",") if n.strip())
    for n in names:
        if not IDENTIFIER.match(n) or n in RESERVED:
            raise argparse.ArgumentTypeError("invalid letter %r" % n)
    if not names:
        raise argparse.ArgumentTypeError("alphabet is empty")
    return names


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--alphabet", type=parse_alphabet, default=None,
        help="comma-separated letters, e.g. x,y (required by check and enum)",
    )
    common.add_argument(
        "--weight", type=parse_weight, default=SYMBOLIC,
        help="'symbolic' (default) or a rational value for lambda; 0 enables the antipode",
    )
    common.add_argument(
        "--max-degree", type=int, default=3, help="total-degree bound for suites (default 3)"
    )
    common.add_argument("--output", choices=("text", "json"), default="text")

    parser = argparse.ArgumentParser(
        prog="rba", description="Free Rota-Baxter algebra calculator and law checker."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common], help="evaluate an algebra expression")
    p.add_argument("expr")
    p = sub.add_parser("cop", parents=[common], help="coproduct of an expression")
    p.add_argument("expr")
    p = sub.add_parser("S", aliases=["antipode"], parents=[common], help="antipode (weight 0 only)")
    p.add_argument("expr")
    p = sub.add_parser("check", parents=[common], help="run an exhaustive law suite")
    p.add_argument("--law", choices=laws.LAWS, required=True)
    p = sub.add_parser("enum", parents=[common], help="list basis words by degree")
    p.add_argument("--count", action="store_true", help="print counts per degree only")
    return parser


def _element(args, forbidden: set) -> LinComb:
    tree = parse(args.expr, args.alphabet)
    if uses(tree, forbidden):
        raise UsageError(
            "%s cannot be used inside '%s'; use the dedicated command"
            % ("/".join(sorted(forbidden)), args.command)
        )
    value = evaluate(tree, args.weight)
    if not isinstance(value, LinComb):
        raise UsageError("expression does not evaluate to an algebra element")
    return value


def _emit(args, value, text: str):
    print(export_structured(value) if args.output == "json" else text)


def cmd_eval(args) -> int:
    value = _element(args, {"cop", "S", "eps"})
    _emit(args, value, print_lincomb(value))
    return EXIT_OK


def cmd_coproduct(args) -> int:
    value = coproduct(_element(args, {"cop"}), args.weight)
    _emit(args, value, print_tensor2(value))
    return EXIT_OK


def cmd_antipode(args) -> int:
    if not args.weight.is_zero:
        raise UsageError(
            "the antipode is only available at --weight 0: the algebra is a connected "
            "graded bialgebra there, while a Hopf structure at weight %s is an open problem"
            % args.weight
        )
    value = antipode_lin(_element(args, {"cop"}), args.weight)
    _emit(args, value, print_lincomb(value))
    return EXIT_OK


def cmd_check(args) -> int:
    if args.law != "counterexample" and args.alphabet is None:
        raise UsageError("--alphabet is required for --law %s" % args.law)
    if args.law in ("antipode", "grading") and not args.weight.is_zero:
        raise UsageError("--law %s requires --weight 0" % args.law)
    results = laws.run_law(args.law, args.alphabet or ("x",), args.max_degree, args.weight)
    ok = all(r.passed for r in results)
    if args.output == "json":
        doc = {
            "law": args.law,
            "passed": ok,
            "suites": [
                {
                    "name": r.name,
                    "checked": r.checked,
                    "failures": [laws._show(f) for f in r.failures],
                }
                for r in results
            ],
        }
        if args.law == "counterexample":
            x = (args.alphabet or ("x",))[0]
            doc["reports"] = [
                to_jsonable(counterexample_weight_nonzero(SYMBOLIC, x)),
                to_jsonable(counterexample_weight_nonzero(WeightMode(0), x)),
            ]
        print(json.dumps(doc, separators=(",", ":")))
    else:
        if args.law == "counterexample":
            x = (args.alphabet or ("x",))[0]
            print(counterexample_weight_nonzero(SYMBOLIC, x).to_text())
            print()
            print(counterexample_weight_nonzero(WeightMode(0), x).to_text())
            print()
        for r in results:
            print(r.summary())
        print("all pass" if ok else "FAILED")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_enumerate(args) -> int:
    if args.alphabet is None:
        raise UsageError("--alphabet is required for enum")
    if args.max_degree < 0:
        raise UsageError("--max-degree must be non-negative")
    if args.count:
        counts = [len(words_of_degree(args.alphabet, n)) for n in range(args.max_degree + 1)]
        if args.output == "json":
            print(json.dumps({"counts": {str(n): c for n, c in enumerate(counts)}},
                             separators=(",", ":")))
        else:
            print(" ".join("%d:%d" % (n, c) for n, c in enumerate(counts)))
        return EXIT_OK
    words = enumerate_words(args.alphabet, args.max_degree)
    if args.output == "json":
        from .textio import word_to_json

        print(json.dumps({"words": [word_to_json(w) for w in words]}, separators=(",", ":")))
    else:
        for w in words:
            print(w)
    return EXIT_OK


COMMANDS = {
    "eval": cmd_eval,
    "cop": cmd_coproduct,
    "S": cmd_antipode,
    "antipode": cmd_antipode,
    "check": cmd_check,
    "enum": cmd_enumerate,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (UsageError, RBError) as exc:
        print("rba %s: error: %s" % (args.command, exc), file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
