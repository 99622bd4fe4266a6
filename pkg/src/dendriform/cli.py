"""``dendri``: evaluate expressions, enumerate bases, run identity suites and
evaluate the universal morphism out of the free Schröder-tree algebra.

Exit status is 0 on success, 1 for usage or parse errors and 2 when an
identity check fails.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import binary, schroeder
from .axioms import SUITES, run_suite
from .diffpoly import DiffVar
from .lincomb import LinComb
from .models import MODEL_NAMES, get_model
from .parser import MODELS, ParseError, eval_expr, parse_expr
from .qshuffle import Word
from .scalars import Scalar
from .targets import VARIANTS, DiagonalAlgebra, DiagonalElement, PoleError, QShuffleTarget, TargetConfig, TRIDEND

EXIT_OK, EXIT_USAGE, EXIT_CHECK_FAILED = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def _fraction_text(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


# structured output -------------------------------------------------------

def basis_json(key):
    if isinstance(key, (schroeder.Tree, binary.BinaryTree)):
        return key.to_json()
    if isinstance(key, Word):
        return [[[v.name, v.order] for v in letter.factors] for letter in key]
    raise TypeError(f"no structured form for {type(key).__name__}")


def coeff_json(c: Scalar) -> list:
    return [
        {"lam": i, "q": j, "c": _fraction_text(Fraction(v))}
        for (i, j), v in sorted(c.terms.items())
    ]


def element_json(value) -> list:
    if isinstance(value, DiagonalElement):
        return [
            {"basis": {"grade": a}, "text": f"e[{a}]", "coeff": _fraction_text(c),
             "monomials": [{"lam": 0, "q": 0, "c": _fraction_text(c)}]}
            for a, c in sorted(value.coords.items())
        ]
    return [
        {"basis": basis_json(k), "text": str(k), "coeff": str(c), "monomials": coeff_json(c)}
        for k, c in value.items()
    ]


def specialization(args) -> dict:
    def text(v):
        return None if v is None else _fraction_text(v)

    return {"lambda": text(args.lam), "q": text(args.q), "s": text(getattr(args, "s", None))}


def emit(args, text: str, doc: dict) -> None:
    if args.format == "structured":
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        print(text)


# commands ----------------------------------------------------------------

def cmd_eval(args) -> int:
    expr = parse_expr(args.expr, args.model)
    for note in expr.notes:
        print(note, file=sys.stderr)
    if args.model == "diagonal":
        args.lam = Fraction(1) if args.lam is None else args.lam
        args.q = Fraction(1) if args.q is None else args.q
        args.s = Fraction(2) if args.s is None else args.s
    value = eval_expr(expr, args.lam, args.q, args.s)
    text = value.to_text() if isinstance(value, LinComb) else str(value)
    emit(args, text, {
        "command": "eval",
        "model": args.model,
        "specialization": specialization(args),
        "terms": element_json(value),
    })
    return EXIT_OK


def cmd_check(args) -> int:
    try:
        alg = get_model(args.model, args.lam, args.q, args.s, args.variant)
    except ValueError as err:
        raise UsageError(str(err)) from None
    try:
        report = run_suite(alg, args.suite, args.trials, args.seed)
    except ValueError as err:
        raise UsageError(str(err)) from None
    doc = report.to_json()
    doc.update(command="check", specialization=specialization(args), trials=args.trials)
    emit(args, report.summary() + f"\nresult: {'PASS' if report.passed else 'FAIL'}", doc)
    return EXIT_OK if report.passed else EXIT_CHECK_FAILED


def _alphabet(text: str, max_order: int) -> list[DiffVar]:
    names = [n.strip() for n in text.split(",") if n.strip()]
    if not names:
        raise UsageError("--alphabet needs at least one name")
    return [DiffVar(n, k) for n in names for k in range(max_order + 1)]


def cmd_enum(args) -> int:
    alphabet = _alphabet(args.alphabet, args.max_order)
    if args.model == "schroeder":
        trees = schroeder.enumerate_trees(args.leaves, alphabet)
    elif args.model == "binary":
        trees = binary.enumerate_binary(args.leaves, alphabet)
    else:
        raise UsageError("enum supports --model schroeder or binary")
    emit(args, "\n".join(map(str, trees)) + f"\ncount: {len(trees)}", {
        "command": "enum",
        "model": args.model,
        "leaves": args.leaves,
        "alphabet": [[v.name, v.order] for v in sorted(set(alphabet))],
        "count": len(trees),
        "trees": [t.to_json() for t in trees],
    })
    return EXIT_OK


def cmd_universal(args) -> int:
    if args.target == "qshuffle":
        lam0 = Fraction(0) if args.lam is None else args.lam
        q0 = Fraction(0) if args.q is None else args.q
        handle = QShuffleTarget(lam0, q0).handle()
        target_model = "qshuffle"
    else:
        lam0 = Fraction(1) if args.lam is None else args.lam
        q0 = Fraction(1) if args.q is None else args.q
        args.s = Fraction(2) if args.s is None else args.s
        handle = DiagonalAlgebra(TargetConfig(lam0, q0, args.s), args.variant or TRIDEND).handle()
        target_model = "diagonal"
    args.lam, args.q = lam0, q0
    assignment = {}
    for item in args.map or []:
        name, sep, src = item.partition("=")
        if not sep or not name.strip():
            raise UsageError(f"--map expects name=expression, got {item!r}")
        assignment[name.strip()] = eval_expr(parse_expr(src, target_model), lam0, q0, args.s)
    u = eval_expr(parse_expr(args.expr, "schroeder"))
    try:
        value = schroeder.universal_eval(assignment, handle, u)
    except KeyError as err:
        raise UsageError(err.args[0]) from None
    text = value.to_text() if isinstance(value, LinComb) else str(value)
    emit(args, text, {
        "command": "universal",
        "model": target_model,
        "source": "schroeder",
        "map": {k: element_json(v) for k, v in sorted(assignment.items())},
        "specialization": specialization(args),
        "terms": element_json(value),
    })
    return EXIT_OK


# argument parsing --------------------------------------------------------

def _weights(p: argparse.ArgumentParser) -> None:
    p.add_argument("--lambda", dest="lam", type=_rational, help="weight of the derivation")
    p.add_argument("--q", dest="q", type=_rational, help="weight of the bullet product")
    p.add_argument("--s", dest="s", type=_rational, help="diagonal algebra parameter")
    p.add_argument("--format", choices=("text", "structured"), default="text")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="dendri", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("eval", help="evaluate an expression")
    p.add_argument("--model", choices=MODELS, required=True)
    p.add_argument("expr")
    _weights(p)
    p.set_defaults(run=cmd_eval)

    p = sub.add_parser("check", help="run an identity suite on random samples")
    p.add_argument("--model", choices=MODEL_NAMES, required=True)
    p.add_argument("--suite", choices=sorted(SUITES), required=True)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--variant", choices=VARIANTS)
    _weights(p)
    p.set_defaults(run=cmd_check)

    p = sub.add_parser("enum", help="list the basis trees with a given number of leaves")
    p.add_argument("--model", choices=("schroeder", "binary"), required=True)
    p.add_argument("--leaves", type=int, required=True)
    p.add_argument("--alphabet", default="x")
    p.add_argument("--max-order", type=int, default=0)
    p.add_argument("--format", choices=("text", "structured"), default="text")
    p.set_defaults(run=cmd_enum)

    p = sub.add_parser("universal", help="image of a tree expression under the universal morphism")
    p.add_argument("--target", choices=("qshuffle", "diagonal"), required=True)
    p.add_argument("--map", action="append", metavar="NAME=EXPR")
    p.add_argument("--variant", choices=VARIANTS)
    p.add_argument("expr")
    _weights(p)
    p.set_defaults(run=cmd_universal)
    return parser


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.run(args)
    except UsageError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE
    except (ParseError, PoleError, ValueError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
