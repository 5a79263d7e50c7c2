"""Seeded, deterministic verification suites over the package invariants.

Each suite repeats one trial function ``trials`` times; a trial draws its own
inputs from a per-trial generator seeded by (suite stream, seed, index), so
reports are reproducible and identical whether a suite runs alone or as part
of ``all``.  Check residuals are "missed-by" quantities: zero (or tiny) when
the property holds, so the report's max_residual stays meaningful.  Checks of
exact integer identities pass only at literally zero deviation.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import asdict, dataclass, field

import numpy as np

from .dirac import (
    Bispinor,
    PAULI,
    build_gamma_spinor,
    charge_conjugate,
    chiral_project,
    dirac_component_residual,
    dirac_operator,
    dirac_solutions,
    majorana_amplitudes,
    majorana_field,
    majorana_residual,
    majorana_solutions,
    second_order_residual,
    sigma_momentum,
    weyl_residual,
    SIGMA2,
)
from .dkp import (
    DKPVector5,
    DKPVector10,
    build_beta_spin0,
    build_beta_spin1,
    dkp_solutions,
    klein_gordon_residual,
    scalar_multiplet,
    spin0_component_residual,
    spin1_component_residual,
    transversality_residual,
    METRIC_DIAG,
)
from .linalg import exact_equal, max_abs, null_space
from .minkowski import (
    FourVector,
    half_pairing,
    minkowski_square,
    spinor_pairing,
    spinor_to_vector,
    vector_to_spinor,
)
from .lorentz import (
    intertwining_residual,
    make_boost,
    make_rotation,
    metric_residual,
    p4_commutation_residual,
    transform_dirac_solution,
    transform_susy_solution,
)
from .subsolutions import (
    constituent_identity_residual,
    constituent_residual,
    embed_dirac_constituent,
    embed_dkp_triple,
    embedded_residual,
    reassemble,
    reassemble_dkp,
    split_dirac,
    split_dkp_spin0,
    system_matrix,
    triple_identity_residual,
    triple_residual,
    triple_system_matrix,
)
from .susy import (
    build_p4_from_gammas,
    build_projector,
    decompose_susy,
    susy_cross_check,
    susy_residual,
    susy_solutions,
)

TOOL_VERSION = "0.1.0"


@dataclass(frozen=True)
class CheckOutcome:
    name: str
    residual: float
    ok: bool


def _tolcheck(name: str, residual: float, tol: float) -> CheckOutcome:
    return CheckOutcome(name, float(residual), bool(residual <= tol))


def _exactcheck(name: str, deviation: float) -> CheckOutcome:
    return CheckOutcome(name, float(deviation), deviation == 0.0)


def _countcheck(name: str, got: int, expected: int) -> CheckOutcome:
    return CheckOutcome(name, float(abs(got - expected)), got == expected)


@dataclass
class FailureRecord:
    check: str
    seed: str
    residual: float
    inputs_digest: str


@dataclass
class SuiteReport:
    suite: str
    seed: int
    trials: int
    passed: int
    failed: int
    max_residual: float
    tolerance: float
    tool_version: str
    truncated: bool
    failures: list[FailureRecord] = field(default_factory=list)


def draw_momentum(rng) -> tuple[FourVector, float]:
    """Random on-shell four-momentum: spatial parts in [-3,3], O(1) mass."""
    spatial = rng.uniform(-3.0, 3.0, 3)
    m = 1.0 if rng.random() < 0.5 else float(rng.uniform(0.5, 2.0))
    p0 = float(np.sqrt(m * m + spatial @ spatial))
    return FourVector(p0, *map(float, spatial)), m


def draw_null_momentum(rng) -> FourVector:
    """Random massless momentum, bounded away from zero."""
    while True:
        spatial = rng.uniform(-3.0, 3.0, 3)
        norm = float(np.linalg.norm(spatial))
        if norm >= 0.3:
            return FourVector(norm, *map(float, spatial))


def random_unit_complex(rng, n: int) -> np.ndarray:
    v = rng.normal(size=n) + 1j * rng.normal(size=n)
    return v / np.linalg.norm(v)


def _momentum_inputs(p: FourVector, m: float) -> dict:
    return {"momentum": list(p.as_array()), "mass": m}


def _trial_clifford(rng, tol):
    rep = build_gamma_spinor()
    eye = np.eye(4, dtype=complex)
    dev = 0.0
    for mu in range(4):
        for nu in range(mu, 4):
            target = 2.0 * (METRIC_DIAG[mu] if mu == nu else 0.0) * eye
            anti = rep.gamma[mu] @ rep.gamma[nu] + rep.gamma[nu] @ rep.gamma[mu]
            dev = max(dev, max_abs(anti - target))
    checks = [_exactcheck("anticommutators", dev)]

    checks.append(_exactcheck(
        "gamma5-diagonal",
        max_abs(rep.gamma5 - np.diag([1.0, 1.0, -1.0, -1.0])),
    ))
    product = 1j * rep.gamma[0] @ rep.gamma[1] @ rep.gamma[2] @ rep.gamma[3]
    checks.append(_exactcheck("gamma5-product-formula", max_abs(product - rep.gamma5)))
    dev5 = max(max_abs(rep.gamma5 @ g + g @ rep.gamma5) for g in rep.gamma)
    checks.append(_exactcheck("gamma5-anticommutes", dev5))

    qp = (eye + rep.gamma5) / 2
    qm = (eye - rep.gamma5) / 2
    checks.append(_exactcheck("chiral-complete", max_abs(qp + qm - eye)))
    checks.append(_exactcheck("chiral-idempotent",
                              max(max_abs(qp @ qp - qp), max_abs(qm @ qm - qm))))
    checks.append(_exactcheck("chiral-orthogonal", max_abs(qp @ qm)))
    return checks, {}


def _trial_dkp_algebra(rng, tol):
    checks = []
    for rep in (build_beta_spin0(), build_beta_spin1()):
        dev = 0.0
        for lam in range(4):
            for mu in range(4):
                for nu in range(4):
                    lhs = (rep.beta[lam] @ rep.beta[mu] @ rep.beta[nu]
                           + rep.beta[nu] @ rep.beta[mu] @ rep.beta[lam])
                    rhs = ((METRIC_DIAG[lam] if lam == mu else 0.0) * rep.beta[nu]
                           + (METRIC_DIAG[nu] if nu == mu else 0.0) * rep.beta[lam])
                    dev = max(dev, max_abs(lhs - rhs))
        checks.append(_exactcheck(f"trilinear-spin{rep.spin}", dev))
    b0 = build_beta_spin0().beta
    row_dev = max(
        max_abs(b0[0][0] - np.array([0, 0, 0, 0, 1], dtype=complex)),
        max_abs(b0[0][4] - np.array([1, 0, 0, 0, 0], dtype=complex)),
        max_abs(b0[1][1] - np.array([0, 0, 0, 0, -1], dtype=complex)),
    )
    checks.append(_exactcheck("spin0-row-structure", row_dev))
    return checks, {}


def _trial_spinor(rng, tol):
    v = FourVector(*map(float, rng.uniform(-3.0, 3.0, 4)))
    scale = max(1.0, max_abs(v.as_array()))
    sq_scale = max(1.0, float(v.as_array() @ v.as_array()))
    spin = vector_to_spinor(v)

    checks = [
        _exactcheck("upper-hermitian", max_abs(spin.upper - spin.upper.conj().T)),
        _tolcheck(
            "roundtrip",
            max_abs(spinor_to_vector(spin.upper, tol).as_array() - v.as_array()) / scale,
            tol,
        ),
        _tolcheck(
            "full-pairing",
            abs(spinor_pairing(v) - 2.0 * minkowski_square(v)) / sq_scale,
            tol,
        ),
    ]
    for dotted in (1, 2):
        checks.append(_tolcheck(
            f"half-pairing-{dotted}",
            abs(half_pairing(v, dotted) - minkowski_square(v)) / sq_scale,
            tol,
        ))
    return checks, {"vector": list(v.as_array())}


def _trial_split_dkp(rng, tol):
    p, m = draw_momentum(rng)
    scale = 1.0 + max_abs(p.as_array()) + m
    checks = []

    rep0 = build_beta_spin0()
    res0 = dkp_solutions(rep0, p, m, tol)
    checks.append(_countcheck("spin0-nullity", res0.dimension, 1))
    sol5 = DKPVector5.from_array(res0.basis[0] * np.exp(2j * np.pi * rng.random()))
    checks.append(_tolcheck("spin0-component-residual",
                            spin0_component_residual(sol5, p, m) / scale, tol))

    left, right = split_dkp_spin0(sol5, p, m, tol)
    checks.append(_tolcheck("triple-residuals",
                            max(triple_residual(left, p, m),
                                triple_residual(right, p, m)) / scale, tol))
    checks.append(_tolcheck("triple-identities",
                            max(triple_identity_residual(left, p),
                                triple_identity_residual(right, p)) / scale, tol))
    checks.append(_tolcheck(
        "embedded-systems",
        max(embedded_residual(embed_dkp_triple(left), p, m, "left"),
            embedded_residual(embed_dkp_triple(right), p, m, "right")) / scale,
        tol,
    ))
    rebuilt = reassemble_dkp(left, right)
    checks.append(_tolcheck("split-roundtrip",
                            max_abs(rebuilt.as_array() - sol5.as_array()), tol))
    for side in ("left", "right"):
        on = null_space(triple_system_matrix(p, m, side), tol).dimension
        off = null_space(triple_system_matrix(p, 1.75 * m, side), tol).dimension
        checks.append(_countcheck(f"triple-{side}-mass-onshell", on, 1))
        checks.append(_countcheck(f"triple-{side}-mass-offshell", off, 0))

    psi = complex(*rng.normal(size=2))
    factored = scalar_multiplet(p, m, psi)
    checks.append(_tolcheck("factorization",
                            spin0_component_residual(factored, p, m) / scale, tol))
    checks.append(_tolcheck("klein-gordon", klein_gordon_residual(p, m, psi) / scale, tol))

    rep1 = build_beta_spin1()
    res1 = dkp_solutions(rep1, p, m, tol)
    checks.append(_countcheck("spin1-nullity", res1.dimension, 3))
    worst_comp = worst_trans = 0.0
    for vec in res1.basis:
        sol10 = DKPVector10.from_array(vec)
        worst_comp = max(worst_comp, spin1_component_residual(sol10, p, m))
        worst_trans = max(worst_trans, transversality_residual(sol10, p))
    checks.append(_tolcheck("spin1-component-residual", worst_comp / scale, tol))
    checks.append(_tolcheck("spin1-transversality", worst_trans / scale, tol))
    return checks, _momentum_inputs(p, m)


def _trial_split_dirac(rng, tol):
    p, m = draw_momentum(rng)
    scale = 1.0 + max_abs(p.as_array()) + m
    checks = []

    res = dirac_solutions(p, m, tol)
    checks.append(_countcheck("nullity", res.dimension, 2))
    mix = random_unit_complex(rng, 2)
    samples = list(res.basis)
    samples.append(mix[0] * res.basis[0] + mix[1] * res.basis[1])
    worst = {"component": 0.0, "constituent": 0.0, "identity": 0.0,
             "sum-rule": 0.0, "embed": 0.0, "roundtrip": 0.0}
    for vec in samples:
        psi = Bispinor.from_array(vec)
        worst["component"] = max(worst["component"],
                                 dirac_component_residual(psi, p, m))
        c1, c2 = split_dirac(psi, p, m, tol)
        worst["constituent"] = max(worst["constituent"],
                                   constituent_residual(c1, p, m),
                                   constituent_residual(c2, p, m))
        worst["identity"] = max(worst["identity"],
                                constituent_identity_residual(c1, p),
                                constituent_identity_residual(c2, p))
        worst["sum-rule"] = max(worst["sum-rule"],
                                abs(c1.xi_a + c2.xi_a - psi.xi1),
                                abs(c1.xi_b + c2.xi_b - psi.xi2))
        worst["embed"] = max(
            worst["embed"],
            embedded_residual(embed_dirac_constituent(c1), p, m, "left"),
            embedded_residual(embed_dirac_constituent(c2), p, m, "right"),
        )
        worst["roundtrip"] = max(
            worst["roundtrip"],
            max_abs(reassemble(c1, c2, p, m).as_array() - vec),
        )
    for key, value in worst.items():
        checks.append(_tolcheck(key, value / scale, tol))

    spinor2 = random_unit_complex(rng, 2)
    checks.append(_tolcheck(
        "second-order",
        max(second_order_residual(p, m, spinor2, "xi"),
            second_order_residual(p, m, spinor2, "eta")) / scale ** 2,
        tol,
    ))

    rep = build_gamma_spinor()
    pn = draw_null_momentum(rng)
    null_scale = 1.0 + max_abs(pn.as_array())
    res0 = dirac_solutions(pn, 0.0, tol)
    checks.append(_countcheck("massless-nullity", res0.dimension, 2))
    worst_weyl = 0.0
    for vec in res0.basis:
        psi = Bispinor.from_array(vec)
        xi_part = chiral_project(rep, psi, +1)
        eta_part = chiral_project(rep, psi, -1)
        worst_weyl = max(
            worst_weyl,
            weyl_residual(pn, [xi_part.xi1, xi_part.xi2], "right"),
            weyl_residual(pn, [eta_part.eta1, eta_part.eta2], "left"),
        )
    checks.append(_tolcheck("massless-weyl-split", worst_weyl / null_scale, tol))
    return checks, _momentum_inputs(p, m)


def _trial_susy(rng, tol):
    p, m = draw_momentum(rng)
    scale = 1.0 + max_abs(p.as_array()) + m
    sub_seed = int(rng.integers(0, 2**31))
    report = susy_cross_check(p, m, sub_seed, tol * scale)
    checks = [_tolcheck(name, value / scale, tol)
              for name, value in sorted(report.residuals.items())]

    rep = build_gamma_spinor()
    checks.append(_exactcheck(
        "projector-formula",
        max_abs(build_p4_from_gammas(rep) - build_projector(4).matrix),
    ))
    sols = susy_solutions(p, m, tol)
    checks.append(_countcheck("physical-solutions", sols.dimension, 1))

    v = random_unit_complex(rng, 4)
    full = susy_residual(rep, p, m, v)
    res_a, res_b = decompose_susy(rep, p, m, v)
    checks.append(_tolcheck("split-equivalence",
                            abs(full - max(res_a, res_b)) / scale, tol))
    solution = sols.basis[0]
    fa, fb = decompose_susy(rep, p, m, solution)
    checks.append(_tolcheck("solution-split-residuals", max(fa, fb) / scale, tol))
    return checks, _momentum_inputs(p, m)


def _trial_majorana(rng, tol):
    p, m = draw_momentum(rng)
    scale = 1.0 + max_abs(p.as_array()) + m
    rep = build_gamma_spinor()
    checks = []
    for chirality in ("eta", "xi"):
        res = majorana_solutions(p, m, chirality, tol)
        checks.append(_countcheck(f"{chirality}-real-nullity", res.dimension, 4))
        worst_eq = worst_c = worst_dirac = 0.0
        for vec in res.basis:
            a, b = majorana_amplitudes(vec)
            worst_eq = max(worst_eq, majorana_residual(p, m, chirality, a, b))
            four = majorana_field(p, m, chirality, a, b)
            conj_invariance = (charge_conjugate(rep, four) - four).max_amplitude_norm()
            worst_c = max(worst_c, conj_invariance)
            full = four.apply(lambda q: dirac_operator(rep, q, m))
            worst_dirac = max(worst_dirac, full.max_amplitude_norm())
        checks.append(_tolcheck(f"{chirality}-equation", worst_eq / scale, tol))
        checks.append(_tolcheck(f"{chirality}-conjugation-invariance", worst_c, tol))
        checks.append(_tolcheck(f"{chirality}-solves-free-equation",
                                worst_dirac / scale, tol))

    res = majorana_solutions(p, m, "eta", tol)
    a, b = majorana_amplitudes(res.basis[0])
    predicted = (1j / m) * sigma_momentum(p, -1) @ (SIGMA2 @ a.conj())
    checks.append(_tolcheck("eta-amplitude-lock",
                            max_abs(b - predicted) / scale, tol))
    return checks, _momentum_inputs(p, m)


def _trial_lorentz(rng, tol):
    kind = "boost" if rng.random() < 0.5 else "rotation"
    axis = int(rng.integers(1, 4))
    parameter = float(rng.uniform(-1.5, 1.5))
    t = make_boost(axis, parameter) if kind == "boost" else make_rotation(axis, parameter)
    checks = [
        _tolcheck("metric-preserved", metric_residual(t), tol),
        _tolcheck("intertwining", intertwining_residual(t), tol),
        _tolcheck("unit-determinant",
                  abs(np.linalg.det(t.vector_matrix) - 1.0), tol),
    ]
    if kind == "boost":
        checks.append(_tolcheck("orthochronous",
                                max(0.0, 1.0 - t.vector_matrix[0, 0]), tol))

    p, m = draw_momentum(rng)
    scale = 1.0 + max_abs(p.as_array()) + m
    res = dirac_solutions(p, m, tol)
    mix = random_unit_complex(rng, 2)
    psi = Bispinor.from_array(mix[0] * res.basis[0] + mix[1] * res.basis[1])
    psi2, p2 = transform_dirac_solution(t, psi, p, m, tol)
    boost_scale = scale * (1.0 + max_abs(t.spinor_matrix)) ** 2
    checks.append(_tolcheck("solution-covariance",
                            dirac_component_residual(psi2, p2, m) / boost_scale, tol))

    z_param = float(rng.uniform(-1.2, 1.2))
    tz = make_boost(3, z_param) if rng.random() < 0.5 else make_rotation(3, z_param)
    checks.append(_exactcheck("axis3-projector-commutes", p4_commutation_residual(tz)))
    off_axis = int(rng.integers(1, 3))
    off_param = float(rng.choice([-1.0, 1.0]) * rng.uniform(0.3, 1.2))
    toff = make_boost(off_axis, off_param) if rng.random() < 0.5 \
        else make_rotation(off_axis, off_param)
    shortfall = max(0.0, 1e-3 - p4_commutation_residual(toff))
    checks.append(CheckOutcome("off-axis-projector-breaks", shortfall, shortfall == 0.0))

    sols = susy_solutions(p, m, tol)
    v2, pz = transform_susy_solution(tz, sols.basis[0], p, m, tol)
    rep = build_gamma_spinor()
    z_scale = scale * (1.0 + max_abs(tz.spinor_matrix)) ** 2
    checks.append(_tolcheck("projected-covariance",
                            susy_residual(rep, pz, m, v2) / z_scale, tol))
    return checks, {"kind": kind, "axis": axis, "parameter": parameter,
                    **_momentum_inputs(p, m)}


_SUITES = {
    "clifford": (0, _trial_clifford),
    "dkp-algebra": (1, _trial_dkp_algebra),
    "spinor": (2, _trial_spinor),
    "split-dkp": (3, _trial_split_dkp),
    "split-dirac": (4, _trial_split_dirac),
    "susy": (5, _trial_susy),
    "majorana": (6, _trial_majorana),
    "lorentz": (7, _trial_lorentz),
}

SUITE_NAMES = ("all",) + tuple(_SUITES)


def _digest(inputs: dict) -> str:
    blob = json.dumps(inputs, sort_keys=True).encode()
    return hashlib.sha256(blob).hexdigest()[:12]


def run_suite(name: str, seed: int, trials: int, tol: float,
              failure_limit: int = 25) -> SuiteReport:
    """Run one suite (or all of them) and aggregate a deterministic report."""
    if name not in SUITE_NAMES:
        raise ValueError(f"unknown suite {name!r}; choose from {SUITE_NAMES}")
    if trials < 1:
        raise ValueError("trials must be at least 1")
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    selected = list(_SUITES.items()) if name == "all" else [(name, _SUITES[name])]

    passed = failed = total = 0
    max_residual = 0.0
    failures: list[FailureRecord] = []
    truncated = False
    for suite_name, (stream, trial_fn) in selected:
        for index in range(trials):
            rng = np.random.default_rng([stream, seed, index])
            checks, inputs = trial_fn(rng, tol)
            total += 1
            max_residual = max(max_residual, max(c.residual for c in checks))
            bad = [c for c in checks if not c.ok]
            if not bad:
                passed += 1
                continue
            failed += 1
            digest = _digest(inputs)
            for check in bad:
                if len(failures) >= failure_limit:
                    truncated = True
                    break
                failures.append(FailureRecord(
                    check=f"{suite_name}:{check.name}",
                    seed=f"{seed}:{index}",
                    residual=check.residual,
                    inputs_digest=digest,
                ))
    return SuiteReport(
        suite=name,
        seed=seed,
        trials=total,
        passed=passed,
        failed=failed,
        max_residual=max_residual,
        tolerance=tol,
        tool_version=TOOL_VERSION,
        truncated=truncated,
        failures=failures,
    )


def report_payload(report: SuiteReport) -> dict:
    return asdict(report)


def canonical_json(payload: dict) -> str:
    """Stable byte-for-byte JSON encoding of a report payload."""
    return json.dumps(payload, sort_keys=True, separators=(",", ":"), allow_nan=False)


def report_text(report: SuiteReport) -> str:
    lines = [
        f"suite: {report.suite}",
        f"seed: {report.seed}  trials: {report.trials}  tol: {report.tolerance:g}",
        f"passed: {report.passed}  failed: {report.failed}",
        f"max residual: {report.max_residual:.3e}",
    ]
    for failure in report.failures:
        lines.append(
            f"  FAIL {failure.check} (seed {failure.seed}, "
            f"residual {failure.residual:.3e}, inputs {failure.inputs_digest})"
        )
    if report.truncated:
        lines.append("  ... failure list truncated")
    lines.append("PASS" if report.failed == 0 else "FAIL")
    return "\n".join(lines)
