"""Command-line front end: seeded verification suites and solution queries.

Exit codes: 0 all checks pass, 1 verification failure, 2 usage error.
The json format emits one canonical (sorted-key, separator-stable) object per
run with no timestamps, so identical invocations are byte-identical.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

import numpy as np

from .dirac import Bispinor, build_gamma_spinor, dirac_operator, dirac_solutions
from .dkp import DKPVector5, build_beta_spin0, build_beta_spin1, dkp_operator, dkp_solutions
from .linalg import max_abs
from .minkowski import FourVector
from .subsolutions import (
    embed_dirac_constituent,
    embed_dkp_triple,
    embedded_residual,
    split_dirac,
    split_dkp_spin0,
)
from .suites import (
    SUITE_NAMES,
    TOOL_VERSION,
    canonical_json,
    draw_momentum,
    report_payload,
    report_text,
    run_suite,
)
from .susy import susy_operator, susy_residual, susy_solutions

DEFAULT_TOLERANCE = 1e-10
_DEMO_STREAM = 97

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="relsub",
        description="Verify and query plane-wave solution spaces of "
                    "first-order relativistic wave equations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="run a seeded verification suite")
    verify.add_argument("--suite", choices=SUITE_NAMES, required=True)
    verify.add_argument("--seed", type=int, default=0)
    verify.add_argument("--trials", type=int, default=100)
    verify.add_argument("--tol", type=float, default=None)
    verify.add_argument("--format", choices=("text", "json"), default="text")
    verify.add_argument("--max-failures", type=int, default=25)

    solve = sub.add_parser("solve", help="print a plane-wave solution basis")
    solve.add_argument("--equation", choices=("dirac", "dkp0", "dkp1", "susy"),
                       required=True)
    solve.add_argument("--momentum", help="spatial components px,py,pz")
    solve.add_argument("--mass", type=float)
    solve.add_argument("--input", help="JSON file with a list of "
                                       "{momentum: [px,py,pz], mass: m} items")
    solve.add_argument("--tol", type=float, default=None)
    solve.add_argument("--format", choices=("text", "json"), default="text")

    demo = sub.add_parser("demo", help="end-to-end walkthrough")
    demo.add_argument("topic", choices=("susy",))
    demo.add_argument("--seed", type=int, default=1)
    demo.add_argument("--rest", action="store_true",
                      help="use the exact rest-frame configuration")
    demo.add_argument("--tol", type=float, default=None)
    return parser


def _resolve_tolerance(parser: argparse.ArgumentParser, flag_value) -> float:
    tol = flag_value
    if tol is None:
        raw = os.environ.get("RELSUB_TOL")
        if raw is not None:
            try:
                tol = float(raw)
            except ValueError:
                parser.error(f"RELSUB_TOL is not a number: {raw!r}")
        else:
            tol = DEFAULT_TOLERANCE
    if tol <= 0:
        parser.error("tolerance must be positive")
    return tol


def _cmd_verify(parser, args) -> int:
    tol = _resolve_tolerance(parser, args.tol)
    if args.trials < 1:
        parser.error("--trials must be at least 1")
    report = run_suite(args.suite, args.seed, args.trials, tol,
                       failure_limit=args.max_failures)
    if args.format == "json":
        print(canonical_json(report_payload(report)))
    else:
        print(report_text(report))
    return EXIT_PASS if report.failed == 0 else EXIT_FAIL


def _parse_momentum(parser, text: str) -> list[float]:
    try:
        parts = [float(piece) for piece in text.split(",")]
    except ValueError:
        parser.error(f"cannot parse momentum {text!r}; expected px,py,pz")
    if len(parts) != 3:
        parser.error("momentum needs exactly three components px,py,pz")
    return parts


def _solve_items(parser, args) -> list[tuple[list[float], float]]:
    if args.input:
        try:
            with open(args.input, encoding="utf-8") as handle:
                raw = json.load(handle)
        except (OSError, json.JSONDecodeError) as exc:
            parser.error(f"cannot read batch file: {exc}")
        if not isinstance(raw, list):
            parser.error("batch file must hold a JSON list")
        items = []
        for entry in raw:
            try:
                momentum = [float(c) for c in entry["momentum"]]
                mass = float(entry["mass"])
            except (KeyError, TypeError, ValueError):
                parser.error("batch entries need 'momentum': [px,py,pz] and 'mass'")
            if len(momentum) != 3:
                parser.error("batch momenta need exactly three components")
            items.append((momentum, mass))
        return items
    if args.momentum is None or args.mass is None:
        parser.error("provide --momentum and --mass, or --input FILE")
    return [(_parse_momentum(parser, args.momentum), args.mass)]


def _complex_pairs(vec) -> list[list[float]]:
    return [[float(z.real), float(z.imag)] for z in np.asarray(vec, dtype=complex)]


def _solve_one(equation: str, spatial: list[float], mass: float, tol: float) -> dict:
    p0 = float(np.sqrt(mass * mass + np.dot(spatial, spatial)))
    p = FourVector(p0, *spatial)
    result = {
        "equation": equation,
        "momentum": [p0, *spatial],
        "mass": mass,
        "tolerance": tol,
    }
    if equation == "dirac":
        rep = build_gamma_spinor()
        res = dirac_solutions(p, mass, tol)
        operator = dirac_operator(rep, p, mass)
    elif equation in ("dkp0", "dkp1"):
        rep = build_beta_spin0() if equation == "dkp0" else build_beta_spin1()
        res = dkp_solutions(rep, p, mass, tol)
        operator = dkp_operator(rep, p, mass)
    else:
        rep = build_gamma_spinor()
        res = susy_solutions(p, mass, tol)
        operator = susy_operator(rep, p, mass)
        result["trivial_direction"] = _complex_pairs([0, 0, 0, 1])
    result["dimension"] = res.dimension
    result["basis"] = [_complex_pairs(v) for v in res.basis]
    result["residuals"] = [max_abs(operator @ v) for v in res.basis]
    return result


def _cmd_solve(parser, args) -> int:
    tol = _resolve_tolerance(parser, args.tol)
    items = _solve_items(parser, args)
    results = []
    for spatial, mass in items:
        if mass < 0 or (mass == 0 and args.equation != "dirac"):
            parser.error(f"equation {args.equation} needs a positive mass")
        results.append(_solve_one(args.equation, spatial, mass, tol))
    payload = {"command": "solve", "results": results, "tool_version": TOOL_VERSION}
    worst = max((r for item in results for r in item["residuals"]), default=0.0)
    if args.format == "json":
        print(canonical_json(payload))
    else:
        for item in results:
            mom = ", ".join(f"{c:g}" for c in item["momentum"])
            print(f"{item['equation']} at p = ({mom}), m = {item['mass']:g}")
            print(f"  solution-space dimension: {item['dimension']}")
            if "trivial_direction" in item:
                print("  (the projected operator also annihilates the trivial "
                      "direction e4, excluded above)")
            for vec, residual in zip(item["basis"], item["residuals"]):
                rendered = ", ".join(f"{re:+.6f}{im:+.6f}j" for re, im in vec)
                print(f"  [{rendered}]  residual {residual:.2e}")
    return EXIT_PASS if worst <= tol else EXIT_FAIL


def _rest_frame_bases() -> tuple[FourVector, float, list[np.ndarray], list[np.ndarray]]:
    """Closed-form rest-frame solution bases; all residuals cancel exactly."""
    r = 1.0 / np.sqrt(2.0)
    p = FourVector(1.0, 0.0, 0.0, 0.0)
    dkp_basis = [np.array([r, 0, 0, 0, r], dtype=complex)]
    dirac_basis = [np.array([r, 0, r, 0], dtype=complex),
                   np.array([0, r, 0, r], dtype=complex)]
    return p, 1.0, dkp_basis, dirac_basis


def _cmd_demo(parser, args) -> int:
    tol = _resolve_tolerance(parser, args.tol)
    rep = build_gamma_spinor()
    if args.rest:
        p, m, dkp_basis, dirac_basis = _rest_frame_bases()
        source = "rest frame (exact path)"
    else:
        rng = np.random.default_rng([_DEMO_STREAM, args.seed])
        p, m = draw_momentum(rng)
        dkp_basis = dkp_solutions(build_beta_spin0(), p, m, tol).basis
        dirac_basis = dirac_solutions(p, m, tol).basis
        source = f"seed {args.seed}"

    rows: list[tuple[str, float]] = []
    multiplet = DKPVector5.from_array(dkp_basis[0])
    left, right = split_dkp_spin0(multiplet, p, m, tol)
    rows.append(("spin-0 left triple   -> shared projected system",
                 susy_residual(rep, p, m, embed_dkp_triple(left))))
    rows.append(("spin-0 right triple  -> mirrored system",
                 embedded_residual(embed_dkp_triple(right), p, m, "right")))
    for i, vec in enumerate(dirac_basis, start=1):
        c1, c2 = split_dirac(Bispinor.from_array(vec), p, m, tol)
        rows.append((f"bispinor {i} branch 1 -> shared projected system",
                     susy_residual(rep, p, m, embed_dirac_constituent(c1))))
        rows.append((f"bispinor {i} branch 2 -> mirrored system",
                     embedded_residual(embed_dirac_constituent(c2), p, m, "right")))

    worst = max(res for _, res in rows)
    mom = ", ".join(f"{c:.6g}" for c in p.as_array())
    print("one projected first-order system, two kinds of solutions")
    print(f"momentum p = ({mom}), mass m = {m:.6g}  [{source}]")
    print(f"spin-0 multiplet solutions: {len(dkp_basis)};"
          f" bispinor solutions: {len(dirac_basis)}")
    print("splitting both and embedding the three-component constituents:")
    for label, residual in rows:
        print(f"  {label}: residual {residual:.3e}")
    verdict = "PASS" if worst <= tol else "FAIL"
    print(f"{verdict}: max residual {worst:.3e} (tol {tol:g})")
    return EXIT_PASS if worst <= tol else EXIT_FAIL


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify":
        return _cmd_verify(parser, args)
    if args.command == "solve":
        return _cmd_solve(parser, args)
    return _cmd_demo(parser, args)


if __name__ == "__main__":
    sys.exit(main())
