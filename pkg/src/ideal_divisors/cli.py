# pylint: disable=invalid-name,too-many-return-statements

"""
Command-line front end.

Every subcommand builds a JSON-ready dict; --format text renders the same
dict as indented "key: value" lines. Exit codes: 0 on success, 1 on bad
input, 2 on an internal assertion failure.
"""

import argparse
import json
import logging
import sys

from ideal_divisors.constants import (
    DEFAULT_COEFF_BOUND,
    DEFAULT_MAX_CANDIDATES,
    DEFAULT_SUPPORT,
    LOGGER_NAME,
    MAX_LAMBDA,
)
from ideal_divisors.cyclotomic import (
    check_exponent,
    conjugate,
    evaluate_mod,
    norm,
    parse_coefficients,
)
from ideal_divisors.divisors import (
    DivisorKind,
    decomposition_type,
    divides,
    divides_def1,
    factor,
    prime_divisors_of,
    valuation,
)
from ideal_divisors.geometry import (
    ChordKind,
    Circle,
    chord_configuration,
    common_chord_line,
    format_fraction,
    polar_line,
    radical_axis,
    signed_chord_power,
    verify_chord_power_relation,
    verify_section_relation,
    verify_supplementary_conic,
    verify_tangent_meeting,
)
from ideal_divisors.oracle import (
    SearchBudget,
    brute_force_divisor_check,
    search_generator,
)
from ideal_divisors.periods import (
    congruence_assignment,
    format_polynomial,
    period_polynomial,
    period_system,
)
from ideal_divisors.sweep import create_sweeptable, export_sweeptable_to_hdf5
from ideal_divisors.utilities import encode

log = logging.getLogger(LOGGER_NAME)


class _ArgumentParser(argparse.ArgumentParser):
    """Report usage errors as ValueError so they exit with status 1"""

    def error(self, message):
        raise ValueError(message)


def _add_budget_arguments(parser):
    parser.add_argument(
        "--max-support",
        type=int,
        default=DEFAULT_SUPPORT,
        help="largest number of nonzero coefficients of a candidate",
    )
    parser.add_argument(
        "--coeff-bound",
        type=int,
        default=DEFAULT_COEFF_BOUND,
        help="candidate coefficients range over [-bound, bound]",
    )
    parser.add_argument(
        "--max-candidates",
        type=int,
        default=DEFAULT_MAX_CANDIDATES,
        help="cap on the number of candidates tested",
    )


def _add_divisor_arguments(parser):
    parser.add_argument("--q", type=int, required=True, help="rational prime")
    group = parser.add_mutually_exclusive_group()
    group.add_argument(
        "--shift", type=int, help="shift of the congruence assignment"
    )
    group.add_argument("--xi", type=int, help="residue ξ of an f = 1 divisor")


def build_parser():
    """
    The argument parser with one subcommand per operation

    :return: argparse.ArgumentParser
    """
    common = _ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=["text", "json"], default="text", dest="fmt"
    )
    common.add_argument(
        "--verbose", action="store_true", help="log at DEBUG level"
    )

    with_lambda = _ArgumentParser(add_help=False, parents=[common])
    with_lambda.add_argument(
        "--lambda", type=int, required=True, dest="lam", help="odd prime λ"
    )
    with_lambda.add_argument(
        "--allow-large",
        action="store_true",
        help=f"accept λ > {MAX_LAMBDA}",
    )

    parser = _ArgumentParser(
        prog="ideal-divisors",
        description="Ideal prime divisors of cyclotomic integers",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("norm", parents=[with_lambda], help="norm of g")
    p.add_argument("--coeffs", required=True, help="a0,a1,...,a_{λ-1}")

    p = sub.add_parser("mul", parents=[with_lambda], help="product g h")
    p.add_argument("--coeffs", required=True)
    p.add_argument("--other", required=True, help="coefficients of h")

    p = sub.add_parser("conj", parents=[with_lambda], help="g(α^k)")
    p.add_argument("--coeffs", required=True)
    p.add_argument("--k", type=int, required=True)

    p = sub.add_parser("eval", parents=[with_lambda], help="g(ξ) mod m")
    p.add_argument("--coeffs", required=True)
    p.add_argument("--xi", type=int, required=True)
    p.add_argument("--modulus", type=int, required=True)

    p = sub.add_parser("periods", parents=[with_lambda], help="periods of q")
    p.add_argument("--q", type=int, required=True)

    p = sub.add_parser(
        "divisors", parents=[with_lambda], help="prime divisors of q"
    )
    p.add_argument("--q", type=int, required=True)

    for name in ("divides", "valuation"):
        p = sub.add_parser(name, parents=[with_lambda])
        _add_divisor_arguments(p)
        p.add_argument("--coeffs", required=True)

    p = sub.add_parser("factor", parents=[with_lambda], help="factor g")
    p.add_argument("--coeffs", required=True)

    p = sub.add_parser(
        "search", parents=[with_lambda], help="search for generators"
    )
    _add_divisor_arguments(p)
    _add_budget_arguments(p)

    p = sub.add_parser(
        "verify", parents=[with_lambda], help="oracle agreement report"
    )
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--coeffs", required=True)
    _add_budget_arguments(p)

    p = sub.add_parser(
        "sweep", parents=[with_lambda], help="census of primes up to q-max"
    )
    p.add_argument("--q-max", type=int, required=True, dest="q_max")
    p.add_argument("--output", help="also write the table (.h5 or .msgpack)")
    _add_budget_arguments(p)

    p = sub.add_parser("geometry", help="radical axis and ideal chords")
    geo = p.add_subparsers(dest="figure", required=True)
    g = geo.add_parser("radical-axis", parents=[common])
    g.add_argument("--c1", required=True, help="x,y,r^2")
    g.add_argument("--c2", required=True, help="x,y,r^2")
    g = geo.add_parser("chord", parents=[common])
    g.add_argument("--a", required=True, help="semi-axis along x")
    g.add_argument("--b", required=True, help="semi-axis along y")
    g.add_argument("--x0", required=True, help="abscissa of the secant")

    return parser


def _budget(args):
    return SearchBudget(
        args.max_support, args.coeff_bound, args.max_candidates
    )


def _select_divisors(args):
    """Divisors chosen by --shift or --xi; all of them if neither given"""
    divisors = prime_divisors_of(args.q, args.lam)
    if args.xi is not None:
        chosen = [P for P in divisors if P.xi == args.xi % args.q]
        if not chosen:
            raise ValueError(f"No divisor of {args.q} has ξ = {args.xi}")
        return chosen
    if args.shift is not None:
        if not 0 <= args.shift < len(divisors):
            raise ValueError(
                f"Shift {args.shift} outside [0, {len(divisors)})"
            )
        return [divisors[args.shift]]
    return divisors


def _parse_circle(text):
    items = text.split(",")
    if len(items) != 3:
        raise ValueError(f"Circle must be x,y,r^2, got {text!r}")
    return Circle((items[0], items[1]), items[2])


def _cmd_norm(args):
    g = parse_coefficients(args.coeffs, args.lam)
    return {"coeffs": list(g.coeffs), "norm": norm(g)}


def _cmd_mul(args):
    g = parse_coefficients(args.coeffs, args.lam)
    h = parse_coefficients(args.other, args.lam)
    return {"product": list((g * h).coeffs)}


def _cmd_conj(args):
    g = parse_coefficients(args.coeffs, args.lam)
    return {"conjugate": list(conjugate(g, args.k).coeffs)}


def _cmd_eval(args):
    g = parse_coefficients(args.coeffs, args.lam)
    return {"value": evaluate_mod(g, args.xi, args.modulus)}


def _cmd_periods(args):
    ps = period_system(args.lam, args.q)
    assignment = congruence_assignment(ps)
    poly = period_polynomial(ps)
    return {
        "q": ps.q,
        "f": ps.f,
        "e": ps.e,
        "gamma": ps.gamma,
        "kind": decomposition_type(ps.q, ps.lam)[2],
        "cosets": [list(c) for c in ps.cosets],
        "periodPolynomial": list(poly),
        "polynomial": format_polynomial(poly),
        "u": list(assignment.u),
        "repeatedRoots": assignment.has_repeated_roots,
    }


def _cmd_divisors(args):
    f, e, kind = decomposition_type(args.q, args.lam)
    divisors = prime_divisors_of(args.q, args.lam)
    result = {
        "q": args.q,
        "f": f,
        "e": e,
        "kind": kind,
        "divisors": [P.to_dict() for P in divisors],
    }
    if kind == "inert":
        result["note"] = f"actual prime: {args.q}"
    elif kind == "ramified":
        result["note"] = "divisor of 1 - α"
    return result


def _cmd_divides(args):
    g = parse_coefficients(args.coeffs, args.lam)
    records = []
    for P in _select_divisors(args):
        record = {"divisor": P.to_dict(), "divides": divides(P, g)}
        if P.xi is not None:
            record["substitution"] = divides_def1(P, g)
            assert record["substitution"] == record["divides"], (
                f"Divisibility tests disagree for {P.label} and {g}"
            )
        records.append(record)
    return {"coeffs": list(g.coeffs), "results": records}


def _cmd_valuation(args):
    g = parse_coefficients(args.coeffs, args.lam)
    return {
        "coeffs": list(g.coeffs),
        "results": [
            {"divisor": P.to_dict(), "valuation": valuation(P, g)}
            for P in _select_divisors(args)
        ],
    }


def _cmd_factor(args):
    return factor(parse_coefficients(args.coeffs, args.lam)).to_dict()


def _cmd_search(args):
    budget = _budget(args)
    results = []
    for P in _select_divisors(args):
        if P.kind == DivisorKind.LAMBDA:
            raise ValueError("The divisor of λ is generated by 1 - α")
        results.append(search_generator(P, budget).to_dict())
    return {"results": results}


def _cmd_verify(args):
    g = parse_coefficients(args.coeffs, args.lam)
    report = brute_force_divisor_check(args.q, args.lam, g, _budget(args))
    return {
        "context": report.context,
        "agree": report.agree,
        "records": report.data,
    }


def _cmd_radical_axis(args):
    c1, c2 = _parse_circle(args.c1), _parse_circle(args.c2)
    axis = radical_axis(c1, c2)
    (x1, y1), (x2, y2) = c1.center, c2.center
    assert axis.direction[0] * (x2 - x1) + axis.direction[1] * (y2 - y1) == 0
    chord = common_chord_line(c1, c2)
    return {
        "radicalAxis": axis.to_dict(),
        "commonChord": chord.to_dict() if chord else None,
        "agree": chord is None or chord.line == axis,
    }


def _cmd_chord(args):
    cfg = chord_configuration(args.a, args.b, args.x0)
    tangent = cfg.kind == ChordKind.TANGENT
    result = cfg.to_dict()
    result["polarLine"] = polar_line(cfg).to_dict()
    result["signedChordPower"] = format_fraction(signed_chord_power(cfg))
    checks = {
        "sectionRelation": None if tangent else verify_section_relation(cfg),
        "chordPowerRelation": verify_chord_power_relation(cfg),
        "tangentMeeting": None if tangent else verify_tangent_meeting(cfg),
        "supplementaryConic": verify_supplementary_conic(cfg),
    }
    assert all(v is not False for v in checks.values()), checks
    result.update(checks)
    return result


def _cmd_geometry(args):
    if args.figure == "radical-axis":
        return _cmd_radical_axis(args)
    return _cmd_chord(args)


COMMANDS = {
    "norm": _cmd_norm,
    "mul": _cmd_mul,
    "conj": _cmd_conj,
    "eval": _cmd_eval,
    "periods": _cmd_periods,
    "divisors": _cmd_divisors,
    "divides": _cmd_divides,
    "valuation": _cmd_valuation,
    "factor": _cmd_factor,
    "search": _cmd_search,
    "verify": _cmd_verify,
    "geometry": _cmd_geometry,
}


def render_text(value, indent=0):
    """Indented "key: value" lines for a JSON-ready value"""
    pad = "  " * indent
    if isinstance(value, dict):
        lines = []
        for key, item in value.items():
            if isinstance(item, (dict, list)) and item and not _is_flat(item):
                lines.append(f"{pad}{key}:")
                lines.append(render_text(item, indent + 1))
            else:
                lines.append(f"{pad}{key}: {_scalar_text(item)}")
        return "\n".join(lines)
    if isinstance(value, list):
        lines = []
        for item in value:
            if isinstance(item, dict):
                lines.append(f"{pad}-")
                lines.append(render_text(item, indent + 1))
            else:
                lines.append(f"{pad}- {_scalar_text(item)}")
        return "\n".join(lines)
    return f"{pad}{_scalar_text(value)}"


def _is_flat(item):
    return isinstance(item, list) and all(
        not isinstance(v, (dict, list)) for v in item
    )


def _scalar_text(value):
    if value is None:
        return "none"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, list):
        return "(" + ", ".join(_scalar_text(v) for v in value) + ")"
    if isinstance(value, dict):
        return "{}"
    return str(value)


def _check_lambda(args):
    lam = getattr(args, "lam", None)
    if lam is None:
        return
    check_exponent(lam)
    if lam > MAX_LAMBDA and not args.allow_large:
        raise ValueError(
            f"λ = {lam} exceeds {MAX_LAMBDA}; pass --allow-large to proceed"
        )


def _run_sweep(args):
    table = create_sweeptable(args.lam, args.q_max, _budget(args))
    if args.output:
        if args.output.endswith((".h5", ".hdf5")):
            export_sweeptable_to_hdf5(table, args.output)
        elif args.output.endswith(".msgpack"):
            with open(args.output, "wb") as file:
                file.write(encode(table))
        else:
            raise ValueError(
                f"Output {args.output!r} must end in .h5, .hdf5 or .msgpack"
            )
    if args.fmt == "json":
        return table.sweeptable_acc.to_json_lines()
    return table.sweeptable_acc.to_text()


def run(argv=None):
    """
    Execute one command

    :param argv: argument list without the program name
    :return: exit code, 0 success, 1 input error, 2 internal error
    """
    try:
        args = build_parser().parse_args(argv)
        logging.basicConfig(
            level=logging.DEBUG if args.verbose else logging.WARNING,
            format="%(asctime)s %(levelname)s %(name)s: %(message)s",
            stream=sys.stderr,
            force=True,
        )
        _check_lambda(args)
        if args.command == "sweep":
            print(_run_sweep(args))
            return 0

        result = COMMANDS[args.command](args)
        if args.fmt == "json":
            print(json.dumps(result, separators=(",", ":")))
        else:
            print(render_text(result))
        if result.get("agree") is False:
            log.error("Oracle disagreement: %s", result)
            print("internal error: checks disagree", file=sys.stderr)
            return 2
        return 0
    except (ValueError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 1
    except AssertionError as err:
        print(f"internal error, please report: {err}", file=sys.stderr)
        return 2
    except SystemExit as err:
        return err.code if isinstance(err.code, int) else 0


def main():
    """Console entry point"""
    sys.exit(run())


if __name__ == "__main__":
    main()
