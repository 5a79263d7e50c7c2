"""The projected first-order equation shared by both kinds of constituents.

Padding a three-component constituent with a zero turns its system into

    gamma^mu p_mu P psi = m P psi,    P = diag(1,1,1,0),

one equation satisfied by multiplet-origin (integer-spin) and
bispinor-origin (half-integer-spin) vectors alike; it is labelled
"supersymmetric" here for exactly that reason.  P also has the
representation-independent expansion (3 + gamma5 - gamma0 gamma3
+ i gamma1 gamma2)/4, which pins the gamma5 sign convention used in
:mod:`relsub.dirac`.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .dirac import Bispinor, GammaRep, build_gamma_spinor, dirac_solutions
from .dkp import DKPVector5, build_beta_spin0, dkp_solutions
from .linalg import DEFAULT_TOL, NullSpaceResult, max_abs, null_space
from .minkowski import FourVector, require_on_shell
from .subsolutions import (
    embed_dirac_constituent,
    embed_dkp_triple,
    embedded_residual,
    split_dirac,
    split_dkp_spin0,
)


@dataclass(eq=False)
class DiagonalProjector:
    """Rank-3 diagonal projector with a single zero on the diagonal."""

    index: int
    matrix: np.ndarray


def build_projector(index: int) -> DiagonalProjector:
    """Diagonal projector killing the given 1-based component."""
    if index not in (1, 2, 3, 4):
        raise ValueError("projector index must be between 1 and 4")
    diag = np.ones(4)
    diag[index - 1] = 0.0
    return DiagonalProjector(index=index, matrix=np.diag(diag).astype(complex))


def build_p4_from_gammas(rep: GammaRep) -> np.ndarray:
    """Representation-independent formula for the fourth projector.

    (3 + gamma5 - gamma0 gamma3 + i gamma1 gamma2) / 4, which is exactly
    diag(1,1,1,0) for the package's gamma5 = diag(1,1,-1,-1) convention.
    """
    g0, g1, g2, g3 = rep.gamma
    return (3 * np.eye(4, dtype=complex) + rep.gamma5 - g0 @ g3 + 1j * g1 @ g2) / 4


def susy_operator(rep: GammaRep, p: FourVector, m: float) -> np.ndarray:
    """(gamma^mu p_mu - m) P4; a vector solves the projected equation iff
    this operator annihilates it."""
    p4 = build_projector(4).matrix
    return (rep.contract(p) - m * np.eye(4, dtype=complex)) @ p4


def susy_residual(rep: GammaRep, p: FourVector, m: float, v) -> float:
    return max_abs(susy_operator(rep, p, m) @ np.asarray(v, dtype=complex))


def decompose_susy(rep: GammaRep, p: FourVector, m: float, v) -> tuple[float, float]:
    """Residuals of the two orthogonal pieces of the projected equation.

    Acting with P4 and (1 - P4) splits it into the three-component
    constituent system and the identity row; since the pieces are
    orthogonal, the squared full residual is exactly the sum of the squares
    of these two.
    """
    v = np.asarray(v, dtype=complex)
    p4 = build_projector(4).matrix
    eye = np.eye(4, dtype=complex)
    contracted = rep.contract(p) @ (p4 @ v)
    residual_a = max_abs(p4 @ contracted - m * (p4 @ v))
    residual_b = max_abs((eye - p4) @ contracted)
    return residual_a, residual_b


def susy_solutions(p: FourVector, m: float, tol: float = DEFAULT_TOL) -> NullSpaceResult:
    """Physical solutions of the projected equation at an on-shell momentum.

    The kernel of the projected operator always contains the fourth basis
    direction (P4 kills it); that trivial direction is excluded here by
    solving on the three-component subspace and padding with zero.
    """
    require_on_shell(p, m, tol)
    rep = build_gamma_spinor()
    reduced = (rep.contract(p) - m * np.eye(4, dtype=complex))[:, :3]
    res = null_space(reduced, tol)
    basis = [np.concatenate([v, [0.0]]) for v in res.basis]
    return NullSpaceResult(dimension=res.dimension, basis=basis,
                           singular_values=res.singular_values)


@dataclass(eq=False)
class CrossCheckReport:
    """Residual table from one shared-equation verification run."""

    momentum: FourVector
    mass: float
    seed: int
    tolerance: float
    residuals: dict[str, float]
    max_residual: float
    passed: bool


def susy_cross_check(p: FourVector, m: float, seed: int,
                     tol: float = DEFAULT_TOL) -> CrossCheckReport:
    """Verify that both solution families feed the same projected equation.

    Generates one spin-0 multiplet solution (randomly rephased) and the full
    bispinor solution space at (p, m), splits everything, embeds the
    constituents, and measures every embedded vector against its side's
    system: left triples and branch-1 constituents against the projected
    gamma system, right triples and branch-2 constituents against the
    mirrored one.  Also records the orthogonal-decomposition residuals for
    the left embeddings.
    """
    require_on_shell(p, m, tol)
    rng = np.random.default_rng(seed)
    rep = build_gamma_spinor()
    residuals: dict[str, float] = {}

    phase = np.exp(2j * np.pi * rng.random())
    multiplet = dkp_solutions(build_beta_spin0(), p, m, tol)
    sol5 = DKPVector5.from_array(multiplet.basis[0] * phase)
    left, right = split_dkp_spin0(sol5, p, m, tol)
    va = embed_dkp_triple(left)
    vb = embed_dkp_triple(right)
    residuals["multiplet-left-shared"] = susy_residual(rep, p, m, va)
    residuals["multiplet-right-mirror"] = embedded_residual(vb, p, m, "right")
    res_a, res_b = decompose_susy(rep, p, m, va)
    residuals["multiplet-left-projected-row"] = res_a
    residuals["multiplet-left-identity-row"] = res_b

    bispinors = dirac_solutions(p, m, tol)
    samples = [(f"bispinor{i + 1}", v) for i, v in enumerate(bispinors.basis)]
    weights = rng.normal(size=2) + 1j * rng.normal(size=2)
    mix = weights[0] * bispinors.basis[0] + weights[1] * bispinors.basis[1]
    samples.append(("bispinor-mix", mix / max(1.0, max_abs(mix))))
    for label, vec in samples:
        c1, c2 = split_dirac(Bispinor.from_array(vec), p, m, tol)
        e1 = embed_dirac_constituent(c1)
        e2 = embed_dirac_constituent(c2)
        residuals[f"{label}-branch1-shared"] = susy_residual(rep, p, m, e1)
        residuals[f"{label}-branch2-mirror"] = embedded_residual(e2, p, m, "right")
        res_a, res_b = decompose_susy(rep, p, m, e1)
        residuals[f"{label}-branch1-projected-row"] = res_a
        residuals[f"{label}-branch1-identity-row"] = res_b

    worst = max(residuals.values())
    return CrossCheckReport(
        momentum=p,
        mass=m,
        seed=seed,
        tolerance=tol,
        residuals=residuals,
        max_residual=worst,
        passed=worst <= tol,
    )
