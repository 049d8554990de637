"""Command line front end.

Subcommands: fill, isoperimetric, nu, finite-constant, check.  All data
output is exact num/den rationals; identical configuration produces byte
identical output.  Exit codes: 0 success, 1 usage or precondition error,
2 no in-window filling, 3 resource cap hit.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path

from . import lp
from .chains import build_window, load_chain, serialize_chain, word_edge_chain
from .errors import (
    BudgetExceeded,
    FillNormError,
    PivotLimitExceeded,
    PresentationError,
)
from .filling import (
    best_certified_bound,
    blowup_witness,
    blowup_witness_auto,
    commutator_family,
    filling_norm,
    finite_linear_constant,
    measure_cycle_family,
    whole_group_window,
)
from .groups import DEFAULT_BALL_CAP, load_presentation, parse_word
from .rationals import format_fraction, parse_fraction

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_NO_FILLING = 2
EXIT_RESOURCE = 3

CSV_HEADER = "budget,lower_bound_num,lower_bound_den,witness_id,radius"


def _add_common(sub):
    sub.add_argument("--presentation", required=True, help="presentation file path")
    sub.add_argument("--ball-cap", type=int, default=DEFAULT_BALL_CAP,
                     help="maximum ball size during enumeration")
    sub.add_argument("--pivot-cap", type=int, default=lp.DEFAULT_PIVOT_CAP,
                     help="maximum simplex pivots per solve")
    sub.add_argument("--out", default=None, help="write the data file here")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fillnorm",
        description="Exact l1 filling norms and isoperimetric data on presentation 2-complexes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    fill = sub.add_parser("fill", help="filling norm of a 1-cycle")
    _add_common(fill)
    fill.add_argument("--radius", type=int, required=True)
    group = fill.add_mutually_exclusive_group(required=True)
    group.add_argument("--cycle", default=None,
                       help="cycle as a word; the empty string is the zero cycle")
    group.add_argument("--cycle-file", default=None, help="cycle as a chain file")
    fill.add_argument("--scale", default="1", help="rational scale for the cycle")
    fill.add_argument("--decimal", action="store_true",
                      help="append a decimal display column")
    fill.set_defaults(handler=cmd_fill)

    iso = sub.add_parser("isoperimetric", help="certified lower bound table")
    _add_common(iso)
    iso.add_argument("--radius", type=int, required=True)
    iso.add_argument("--budgets", required=True,
                     help="comma separated rational budgets, one table row each")
    iso.add_argument("--family", choices=("commutator", "scaled-commutator"),
                     default="commutator")
    iso.add_argument("--scales", default="1,2,3,4",
                     help="comma separated family indices, consumed one per row")
    iso.add_argument("--decimal", action="store_true")
    iso.set_defaults(handler=cmd_isoperimetric)

    nu = sub.add_parser("nu", help="averaged blow-up witness report")
    _add_common(nu)
    nu.add_argument("--l", type=int, required=True, dest="terms")
    nu.add_argument("--epsilon", default="0")
    nu.add_argument("--radius", type=int, default=None,
                    help="window radius; sized automatically when omitted")
    nu.set_defaults(handler=cmd_nu)

    fin = sub.add_parser("finite-constant",
                         help="exact linear isoperimetric constant of a finite group")
    _add_common(fin)
    fin.set_defaults(handler=cmd_finite_constant)

    check = sub.add_parser("check", help="injectivity of the window 2-boundary")
    _add_common(check)
    check.add_argument("--radius", type=int, required=True)
    check.set_defaults(handler=cmd_check)
    return parser


def _validate_caps(args):
    if args.ball_cap < 1 or args.pivot_cap < 1:
        raise PresentationError("caps must be positive")


def _require_radius(radius):
    if radius is not None and radius < 1:
        raise PresentationError("radius must be at least 1")


def cmd_fill(args) -> int:
    _validate_caps(args)
    _require_radius(args.radius)
    presentation = load_presentation(args.presentation)
    window = build_window(presentation, args.radius, ball_cap=args.ball_cap)
    scale = parse_fraction(args.scale)
    if args.cycle_file is not None:
        cycle = load_chain(args.cycle_file, presentation)
        if cycle.dimension != 1:
            raise PresentationError("fill expects a 1-chain")
        cycle = scale * cycle
    else:
        word = parse_word(args.cycle, presentation.names)
        cycle = word_edge_chain(presentation, word, scale)
    result = filling_norm(window, cycle, pivot_cap=args.pivot_cap)
    if not result.is_optimal:
        print("no in-window filling", file=sys.stderr)
        return EXIT_NO_FILLING
    line = format_fraction(result.value)
    if args.decimal:
        line += f" {float(result.value)!r}"
    print(line)
    if args.out:
        Path(args.out).write_text(serialize_chain(result.witness), encoding="utf-8")
    return EXIT_OK


def cmd_isoperimetric(args) -> int:
    _validate_caps(args)
    _require_radius(args.radius)
    presentation = load_presentation(args.presentation)
    budgets = [parse_fraction(tok) for tok in args.budgets.split(",") if tok.strip()]
    if not budgets or any(b <= 0 for b in budgets):
        raise PresentationError("budgets must be positive rationals")
    try:
        scales = [int(tok) for tok in args.scales.split(",") if tok.strip()]
    except ValueError:
        raise PresentationError("family indices must be integers") from None
    if any(m < 1 for m in scales):
        raise PresentationError("family indices must be positive")

    window = build_window(presentation, args.radius, ball_cap=args.ball_cap)
    if len(presentation.names) >= 2:
        family = commutator_family(presentation, scales,
                                   scaled=args.family == "scaled-commutator")
    else:
        family = []
    # Measure one family cycle per row position so that row i draws on the
    # first i+1 cycles; a diverging family then shows up as growing bounds
    # even at a repeated budget.
    certified_prefixes = []
    certified = []
    for witness_id, cycle in family:
        certified.extend(measure_cycle_family(window, [(witness_id, cycle)],
                                              pivot_cap=args.pivot_cap))
        certified_prefixes.append(list(certified))
    full = certified_prefixes[-1] if certified_prefixes else []

    header = CSV_HEADER + (",lower_bound_decimal" if args.decimal else "")
    lines = [header]
    bounds = []
    for i, budget in enumerate(budgets):
        prefix = certified_prefixes[i] if i < len(certified_prefixes) else full
        bound, witness_id = best_certified_bound(prefix, budget)
        bounds.append(bound)
        row = (f"{format_fraction(budget)},{bound.numerator},{bound.denominator},"
               f"{witness_id},{window.radius}")
        if args.decimal:
            row += f",{float(bound)!r}"
        lines.append(row)
    csv_text = "\n".join(lines) + "\n"
    sys.stdout.write(csv_text)

    if presentation.is_finite:
        constant = finite_linear_constant(
            whole_group_window(presentation, ball_cap=args.ball_cap),
            pivot_cap=args.pivot_cap,
        )
        verdict = f"f1(l) = ({format_fraction(constant)}) l"
    elif len(window.cells(2)) == 0:
        verdict = "LINEARLY BOUNDED (image is zero)"
    else:
        blowup = False
        for i, budget in enumerate(budgets):
            for j in range(i + 1, len(budgets)):
                if budgets[j] == budget and bounds[j] > bounds[i]:
                    blowup = True
        if blowup:
            verdict = ("NOT LINEARLY BOUNDED "
                       "(dichotomy: certified bounds at a fixed budget keep growing)")
        else:
            verdict = "INCONCLUSIVE (finite family of certified lower bounds)"
    print("verdict: " + verdict)
    if args.out:
        Path(args.out).write_text(csv_text, encoding="utf-8")
    return EXIT_OK


def cmd_nu(args) -> int:
    _validate_caps(args)
    _require_radius(args.radius)
    presentation = load_presentation(args.presentation)
    if args.terms < 1:
        raise PresentationError("--l must be at least 1")
    epsilon = parse_fraction(args.epsilon)
    if args.radius is not None:
        window = build_window(presentation, args.radius, ball_cap=args.ball_cap)
        witness = blowup_witness(window, args.terms, epsilon,
                                 cap=args.ball_cap, pivot_cap=args.pivot_cap)
    else:
        witness, _ = blowup_witness_auto(presentation, args.terms, epsilon,
                                         ball_cap=args.ball_cap,
                                         pivot_cap=args.pivot_cap)
    report = "\n".join(witness.report_lines()) + "\n"
    sys.stdout.write(report)
    if args.out:
        Path(args.out).write_text(report, encoding="utf-8")
    return EXIT_OK


def cmd_finite_constant(args) -> int:
    _validate_caps(args)
    presentation = load_presentation(args.presentation)
    window = whole_group_window(presentation, ball_cap=args.ball_cap)
    constant = finite_linear_constant(window, pivot_cap=args.pivot_cap)
    print(format_fraction(constant))
    if args.out:
        Path(args.out).write_text(format_fraction(constant) + "\n", encoding="utf-8")
    return EXIT_OK


def cmd_check(args) -> int:
    _validate_caps(args)
    _require_radius(args.radius)
    presentation = load_presentation(args.presentation)
    window = build_window(presentation, args.radius, ball_cap=args.ball_cap)
    print(f"injective: {'true' if window.boundary2_injective() else 'false'}")
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.handler(args)
    except (BudgetExceeded, PivotLimitExceeded) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except FillNormError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
