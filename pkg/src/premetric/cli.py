"""Command-line front end.

Commands:

  verify <file>                      check the four axioms of a space file
  dist <file> <x> <y> -p <k>         certified distance interval in a space file
  complete-dist <specA> <specB> -p <k>
                                     certified distance between completion points
  demo completion                    guided tour of the completion constructions

A space file is JSON: ``{"points": ["a", "b"], "matrix": [["0", "1/2"],
["1/2", "0"]]}`` with entries in the ``num/den`` format.  Completion points
are named by approximator specs: ``rat:<p/q>``, ``sqrt:<n>`` (n a positive
non-square integer) or ``e``.  The precision flag is an exponent: -p k means
delta = 2**-k.

Exit codes: 0 success, 1 I/O error, 2 parse/usage error, 3 axiom or
regularity failure.  Every value line prints the exact rational first and a
decimal rendering second; re-parsing the rational part reproduces the value
bit-exactly.

The environment variable PREMETRIC_SCALES (comma-separated exponents j,
meaning scales 2**-j) overrides the standard scale set used by the demo's
regularity checks.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .certificates import Interval
from .completion import as_regular_program, embed, flatten, point_distance
from .families import Approximator, check_regularity, const_approximator
from .programs import dyadic_inclusion, dyadic_line, e_program, sqrt_program
from .rationals import rat_decimal, rat_format, rat_parse
from .spaces import RATIONAL_LINE, FiniteSpace, dist_interval
from .verifier import default_grid, verify_axioms
from . import completion

EXIT_OK = 0
EXIT_IO = 1
EXIT_PARSE = 2
EXIT_CHECK = 3

SCALES_ENV = "PREMETRIC_SCALES"


def standard_scales() -> tuple[Fraction, ...]:
    """Scales 2**-j for j = 0..12, or the exponents named in PREMETRIC_SCALES."""
    raw = os.environ.get(SCALES_ENV)
    if raw is None:
        exponents = range(0, 13)
    else:
        try:
            exponents = [int(part) for part in raw.split(",") if part.strip()]
        except ValueError:
            raise ValueError(f"{SCALES_ENV} must be comma-separated integers: {raw!r}")
        if not exponents or any(j < 0 for j in exponents):
            raise ValueError(f"{SCALES_ENV} needs nonnegative exponents: {raw!r}")
    return tuple(Fraction(1, 2**j) for j in exponents)


def builtin_approximators(spec: str) -> Approximator:
    """Build the approximator named by a spec string.

    ``rat:<p/q>`` is the constant program, ``sqrt:<n>`` the bisection
    program, ``e`` the factorial-series program; all over the rational line.
    """
    spec = spec.strip()
    if spec == "e":
        return e_program()
    if spec.startswith("rat:"):
        return const_approximator(RATIONAL_LINE, rat_parse(spec[4:]))
    if spec.startswith("sqrt:"):
        body = spec[5:]
        try:
            n = int(body)
        except ValueError:
            raise ValueError(f"sqrt spec needs an integer, got {body!r}")
        return sqrt_program(n)
    raise ValueError(f"unknown approximator spec: {spec!r} (want rat:<p/q>, sqrt:<n>, e)")


def load_space(path: str) -> FiniteSpace:
    """Read and structurally validate a space file (axioms checked separately)."""
    with open(path, "r", encoding="utf-8") as fh:
        payload = json.load(fh)
    if not isinstance(payload, dict):
        raise ValueError("space file must be a JSON object")
    try:
        labels = payload["points"]
        matrix = payload["matrix"]
    except KeyError as missing:
        raise ValueError(f"space file is missing key {missing}")
    if not isinstance(labels, list) or not all(isinstance(p, str) for p in labels):
        raise ValueError("'points' must be a list of strings")
    if not isinstance(matrix, list):
        raise ValueError("'matrix' must be a list of rows")
    rows = []
    for row in matrix:
        if not isinstance(row, list):
            raise ValueError("matrix rows must be lists")
        rows.append(tuple(rat_parse(str(entry)) for entry in row))
    return FiniteSpace(tuple(labels), tuple(rows))


def format_interval(box: Interval) -> str:
    parts = [
        f"lo={rat_format(box.lo)}",
        f"hi={rat_format(box.hi)}",
        f"width={rat_format(box.width)}",
    ]
    decimals = [
        f"lo={rat_decimal(box.lo)}",
        f"hi={rat_decimal(box.hi)}",
        f"width={rat_decimal(box.width)}",
    ]
    return " ".join(parts) + "  (decimal: " + " ".join(decimals) + ")"


def cmd_verify(args: argparse.Namespace) -> int:
    try:
        space = load_space(args.file)
    except OSError as err:
        print(f"error: cannot read {args.file}: {err}", file=sys.stderr)
        return EXIT_IO
    except (ValueError, json.JSONDecodeError) as err:
        print(f"error: invalid space file: {err}", file=sys.stderr)
        return EXIT_PARSE
    report = verify_axioms(space.oracle(), space.labels, default_grid(space))
    if args.json:
        print(report.to_json())
    else:
        print(report.render_text())
    return EXIT_OK if report.passed else EXIT_CHECK


def cmd_dist(args: argparse.Namespace) -> int:
    try:
        space = load_space(args.file)
    except OSError as err:
        print(f"error: cannot read {args.file}: {err}", file=sys.stderr)
        return EXIT_IO
    except (ValueError, json.JSONDecodeError) as err:
        print(f"error: invalid space file: {err}", file=sys.stderr)
        return EXIT_PARSE
    try:
        space.index(args.x), space.index(args.y)
    except KeyError as err:
        print(f"error: {err.args[0]}", file=sys.stderr)
        return EXIT_PARSE
    delta = Fraction(1, 2**args.precision)
    box = dist_interval(space.oracle(), args.x, args.y, delta)
    print(format_interval(box))
    return EXIT_OK


def cmd_complete_dist(args: argparse.Namespace) -> int:
    try:
        left = builtin_approximators(args.spec_a)
        right = builtin_approximators(args.spec_b)
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_PARSE
    delta = Fraction(1, 2**args.precision)
    box = point_distance(
        completion.CompletionPoint(left), completion.CompletionPoint(right), delta
    )
    print(format_interval(box))
    return EXIT_OK


def cmd_demo(args: argparse.Namespace) -> int:
    if args.topic != "completion":
        print(f"error: unknown demo {args.topic!r} (try: completion)", file=sys.stderr)
        return EXIT_PARSE
    scales = standard_scales()
    line = RATIONAL_LINE

    print("# Completing the rational line")
    print()
    print("sqrt:2 is the bisection program; its scale-eps sets:")
    root2 = sqrt_program(2)
    for k in (2, 6, 10):
        eps = Fraction(1, 2**k)
        (m,) = root2.at(eps)
        print(f"  eps=2^-{k}: {{{rat_format(m)}}}  (decimal {rat_decimal(m)})")
    report = check_regularity(root2, scales)
    print(f"regularity on the standard scales: {report.n_passed} checks, "
          f"{report.n_failed} failures")
    print()

    point = completion.CompletionPoint(root2)
    target = const_approximator(line, rat_parse("99/70"))
    print("certified distance between sqrt:2 and rat:99/70 at delta=2^-20:")
    box = point_distance(point, completion.CompletionPoint(target), Fraction(1, 2**20))
    print("  " + format_interval(box))
    print()

    print("density: base points within eps of sqrt:2, certified:")
    for k in (4, 8):
        eps = Fraction(1, 2**k)
        witness = completion.density_witness(point, eps)
        verdict = completion.point_leq_within(
            embed(line, witness), point, eps, eps / 64
        )
        print(f"  eps=2^-{k}: witness {rat_format(witness)} -> {verdict}")
    print()

    print("completeness: flatten a regular program of completion points")
    program = as_regular_program(point)
    flat = flatten(program)
    for k in (2, 5):
        delta = Fraction(1, 2**k)
        gamma = Fraction(1, 2**10)
        box = point_distance(flat, program(delta), gamma)
        ok = box.hi <= delta + 2 * gamma
        print(f"  d(flatten, G(2^-{k})): hi={rat_format(box.hi)} "
              f"<= 2^-{k}+2^-9: {ok}")
    print()

    print("extension: dyadics -> rationals, commuting with the embedding")
    dyadics = dyadic_line()
    include, dense = dyadic_inclusion(dyadics, line)
    for text in ("3/4", "-5/8"):
        a = rat_parse(text)
        extended = completion.extend(include, dense, dense.map(a))
        gamma = Fraction(1, 2**11)
        box = point_distance(extended, embed(line, a), gamma)
        print(f"  a={text}: commutation hi={rat_format(box.hi)} (<= 2^-10: "
              f"{box.hi <= Fraction(1, 2**10)})")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="premetric",
        description="Certified rational distance computations on premetric "
        "spaces and their completions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="check the axioms of a space file")
    p_verify.add_argument("file")
    p_verify.add_argument("--json", action="store_true", help="emit the report as JSON")
    p_verify.set_defaults(func=cmd_verify)

    p_dist = sub.add_parser("dist", help="certified distance interval in a space file")
    p_dist.add_argument("file")
    p_dist.add_argument("x")
    p_dist.add_argument("y")
    p_dist.add_argument("-p", "--precision", type=int, default=10,
                        help="delta = 2^-k (default k=10)")
    p_dist.set_defaults(func=cmd_dist)

    p_cdist = sub.add_parser(
        "complete-dist", help="certified distance between completion points"
    )
    p_cdist.add_argument("spec_a", metavar="specA")
    p_cdist.add_argument("spec_b", metavar="specB")
    p_cdist.add_argument("-p", "--precision", type=int, default=10,
                         help="delta = 2^-k (default k=10)")
    p_cdist.set_defaults(func=cmd_complete_dist)

    p_demo = sub.add_parser("demo", help="guided demonstrations")
    p_demo.add_argument("topic")
    p_demo.set_defaults(func=cmd_demo)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "precision", 0) < 0:
        print("error: precision exponent must be nonnegative", file=sys.stderr)
        return EXIT_PARSE
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
