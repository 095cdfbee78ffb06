"""``a3check`` command line.

Every command prints one JSON envelope ``{command, inputs, result, checks}``
with sorted keys. Exit codes: 0 computed answer, 1 bad input, 2 an internal
identity failed.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Any, Sequence

from a3check.covers import (
    INV_ONE_MINUS_ZETA,
    INV_ONE_MINUS_ZETA2,
    MultiplicityPair,
    ScreeningReport,
    enumerate_profiles,
    screen,
    trace_from_multiplicities,
    Verdict,
)
from a3check.cubic3 import (
    SOCLE_DEGREE,
    CubicForm,
    graded_piece,
    hodge21_multiplicities,
    intermediate_jacobian_verdict,
)
from a3check.errors import InputError, InvariantViolation
from a3check.exactcore import ONE, EisensteinNumber, eis_conj, rational_str
from a3check.trigonal import TrigonalCurve, trigonal_report


def to_json(obj: Any) -> Any:
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, Verdict):
        return obj.value
    if isinstance(obj, int):
        return obj
    if isinstance(obj, Fraction):
        return rational_str(obj)
    if isinstance(obj, EisensteinNumber):
        return {"u": rational_str(obj.u), "v": rational_str(obj.v)}
    if isinstance(obj, dict):
        return {str(k): to_json(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_json(v) for v in obj]
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def envelope(command: str, inputs: dict, result: dict, checks: dict[str, bool]) -> dict:
    return {
        "command": command,
        "inputs": to_json(inputs),
        "result": to_json(result),
        "checks": [{"name": k, "ok": bool(v)} for k, v in checks.items()],
    }


def dumps(env: dict) -> str:
    return json.dumps(env, sort_keys=True, indent=2, ensure_ascii=True)


def _report_fields(rep: ScreeningReport) -> dict:
    return {
        "g": rep.g,
        "a": rep.a,
        "b": rep.b,
        "tau": rep.tau,
        "tau_norm": rational_str(rep.norm_one_minus_tau_conj),
        "bound_rhs": rational_str(rep.bound_rhs),
        "boundary": rep.boundary,
        "implied_profile": list(rep.implied_profile()),
        "verdict": rep.verdict,
    }


def _screening_checks(rep: ScreeningReport) -> dict[str, bool]:
    """Checks on the fixed-point counts a curve realizing ``(a, b)`` would need.

    The counts solve the Lefschetz identity formally even when negative; a
    negative count is exactly what rules out a curve.
    """
    h1, h2 = rep.implied_profile()
    m = MultiplicityPair(rep.a, rep.b)
    lhs = ONE - eis_conj(trace_from_multiplicities(m))
    rhs = INV_ONE_MINUS_ZETA * h1 + INV_ONE_MINUS_ZETA2 * h2
    realizable = h1 >= 0 and h2 >= 0
    return {
        "hurwitz_coherence": h1 + h2 - 2 == rep.g,
        "lefschetz_identity": lhs == rhs,
        "norm_bound_matches_verdict": (rep.norm_one_minus_tau_conj > rep.bound_rhs)
        == (rep.verdict is Verdict.NOT_JACOBIAN),
        "implied_counts_match_verdict": realizable == (rep.verdict is Verdict.INCONCLUSIVE),
    }


def cmd_criterion(args) -> tuple[dict, dict, dict]:
    if args.a is None or args.b is None:
        raise InputError("--a and --b are required")
    g = args.a + args.b if args.g is None else args.g
    if args.g is not None and args.a + args.b != args.g:
        raise InputError(f"a + b = {args.a + args.b} does not equal g = {args.g}")
    rep = screen(MultiplicityPair(args.a, args.b))
    inputs = {"a": args.a, "b": args.b, "g": g}
    return inputs, _report_fields(rep), _screening_checks(rep)


def cmd_enumerate(args) -> tuple[dict, dict, dict]:
    rep = enumerate_profiles(args.gmax)
    result = {
        "gmax": rep.g_max,
        "profiles": rep.profiles,
        "violations": len(rep.violations),
        "violating_profiles": [list(p) for p in rep.violations],
        "boundary": [list(p) for p in rep.boundary],
        "boundary_count": len(rep.boundary),
    }
    checks = {
        "zero_violations": rep.ok,
        "boundary_min_count_zero": rep.boundary_has_zero_count(),
    }
    return {"gmax": args.gmax}, result, checks


def cmd_trigonal(args) -> tuple[dict, dict, dict]:
    curve = TrigonalCurve.from_text(args.poly)
    rep = trigonal_report(curve)
    screening = screen(rep.from_differentials)
    result = {
        "variable": curve.variable,
        "degree": curve.degree,
        "genus": rep.genus,
        "profile": {"h1": rep.profile.h1, "h2": rep.profile.h2},
        "basis": [
            {"i": i, "j": j, "eigenvalue": z}
            for (i, j), z in zip(rep.basis.elements, rep.basis.eigenvalues)
        ],
        "multiplicities_differentials": {"a": rep.from_differentials.a, "b": rep.from_differentials.b},
        "multiplicities_lefschetz": {"a": rep.from_lefschetz.a, "b": rep.from_lefschetz.b},
        "tau": screening.tau,
        "tau_norm": rational_str(screening.norm_one_minus_tau_conj),
        "boundary": rep.boundary,
        "verdict": rep.verdict,
    }
    return {"poly": curve.f.to_text()}, result, dict(rep.checks)


def cmd_cubic(args) -> tuple[dict, dict, dict]:
    F = CubicForm.from_text(args.poly)
    pieces = [graded_piece(F, k) for k in range(SOCLE_DEGREE + 2)]
    dims = [p.dim for p in pieces]
    smooth = dims[SOCLE_DEGREE + 1] == 0
    inputs = {"poly": F.F.to_text()}
    result: dict[str, Any] = {"dims": dims, "smooth": smooth}
    if not smooth:
        result["status"] = "not_smooth"
        return inputs, result, {}
    hodge = hodge21_multiplicities(F)
    rep = intermediate_jacobian_verdict(F)
    result.update(
        status="smooth",
        h21=hodge.h21,
        h30=graded_piece(F, -2).dim,  # H^{3,0} <-> R^{3*1 - 5}
        multiplicities={"zeta": hodge.mult_zeta, "zeta2": hodge.mult_zeta2},
        h12_multiplicities={"zeta": hodge.conjugate[0], "zeta2": hodge.conjugate[1]},
        screening=_report_fields(rep),
        verdict=rep.verdict,
    )
    checks = {
        "gorenstein_symmetry": all(dims[k] == dims[SOCLE_DEGREE - k] for k in range(SOCLE_DEGREE + 1)),
        "socle_one_dimensional": dims[SOCLE_DEGREE] == 1,
        "h21_equals_dim_J": hodge.h21 == rep.g,
    }
    checks.update(_screening_checks(rep))
    return inputs, result, checks


def _pretty(env: dict) -> str:
    lines = [f"command: {env['command']}"]
    for k, v in sorted(env["inputs"].items()):
        lines.append(f"  input {k}: {v}")
    for k, v in sorted(env["result"].items()):
        if isinstance(v, (dict, list)):
            v = json.dumps(v, sort_keys=True)
        lines.append(f"  {k:<30} {v}")
    for c in env["checks"]:
        lines.append(f"  [{'ok' if c['ok'] else 'FAIL'}] {c['name']}")
    return "\n".join(lines)


COMMANDS = {
    "criterion": cmd_criterion,
    "enumerate": cmd_enumerate,
    "trigonal": cmd_trigonal,
    "cubic": cmd_cubic,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="a3check",
        description="Screen order-3 automorphism data on principally polarized abelian varieties.",
    )
    fmt = argparse.ArgumentParser(add_help=False)
    group = fmt.add_mutually_exclusive_group()
    group.add_argument("--json", dest="pretty", action="store_false", help="canonical JSON (default)")
    group.add_argument("--pretty", dest="pretty", action="store_true", help="human-readable table")
    fmt.set_defaults(pretty=False)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("criterion", parents=[fmt], help="apply the non-Jacobian criterion to (a, b)")
    p.add_argument("--a", type=int, required=True, help="multiplicity of zeta")
    p.add_argument("--b", type=int, required=True, help="multiplicity of zeta^2")
    p.add_argument("--g", type=int, help="dimension; must equal a + b")

    p = sub.add_parser("enumerate", parents=[fmt], help="sweep all admissible fixed-point profiles")
    p.add_argument("--gmax", type=int, required=True)

    p = sub.add_parser("trigonal", parents=[fmt], help="cross-check the curve y^3 = f(x)")
    p.add_argument("--poly", required=True, help='univariate f, e.g. "x^4 - 1"')

    p = sub.add_parser("cubic", parents=[fmt], help="cubic threefold y^3 = F(x0..x3)")
    p.add_argument("--poly", required=True, help='homogeneous cubic F, e.g. "x0^3+x1^3+x2^3+x3^3"')
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code else 0
    try:
        inputs, result, checks = COMMANDS[args.command](args)
    except InvariantViolation as exc:
        print(f"a3check: internal invariant violated: {exc}", file=sys.stderr)
        return 2
    except InputError as exc:
        print(f"a3check: {exc}", file=sys.stderr)
        return 1
    env = envelope(args.command, inputs, result, checks)
    print(_pretty(env) if args.pretty else dumps(env))
    return 0 if all(checks.values()) else 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
