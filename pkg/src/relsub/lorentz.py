"""Finite boosts and rotations on vectors and bispinors, with covariance checks.

The bispinor matrix is the exponential of the matching gamma bilinear.  For a
boost of rapidity chi along axis j the generator gamma0 gamma^j squares to +1,
so S = cosh(chi/2) + sinh(chi/2) gamma0 gamma^j; for a rotation by theta about
axis k the generator gamma^i gamma^j (i, j, k cyclic) squares to -1, so
S = cos(theta/2) + sin(theta/2) gamma^i gamma^j.  The sign choices are the
ones that satisfy the intertwining relation S^-1 gamma^mu S = L^mu_nu gamma^nu
for this package's gamma matrices; the tests treat that relation as the
arbiter.  Rotations pick up the spinor double cover: S(2 pi) = -1.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .dirac import Bispinor, build_gamma_spinor, require_dirac_solution
from .linalg import DEFAULT_TOL, max_abs
from .minkowski import FourVector
from .susy import build_projector, susy_residual

_CYCLIC = {1: (2, 3), 2: (3, 1), 3: (1, 2)}


@dataclass(eq=False)
class LorentzTransform:
    """Paired vector (4x4 real) and bispinor (4x4 complex) representations."""

    vector_matrix: np.ndarray
    spinor_matrix: np.ndarray
    kind: str
    axis: int
    parameter: float

    def inverse_spinor_matrix(self) -> np.ndarray:
        """Closed-form inverse: the same transform at negated parameter."""
        if self.kind == "boost":
            return make_boost(self.axis, -self.parameter).spinor_matrix
        return make_rotation(self.axis, -self.parameter).spinor_matrix


def _check_axis(axis: int) -> None:
    if axis not in (1, 2, 3):
        raise ValueError("axis must be 1, 2 or 3")


def make_boost(axis: int, rapidity: float) -> LorentzTransform:
    _check_axis(axis)
    if not np.isfinite(rapidity):
        raise ValueError("rapidity must be finite")
    lam = np.eye(4)
    ch, sh = np.cosh(rapidity), np.sinh(rapidity)
    lam[0, 0] = lam[axis, axis] = ch
    lam[0, axis] = lam[axis, 0] = sh
    rep = build_gamma_spinor()
    generator = rep.gamma[0] @ rep.gamma[axis]
    spinor = np.cosh(rapidity / 2) * np.eye(4, dtype=complex) \
        + np.sinh(rapidity / 2) * generator
    return LorentzTransform(lam, spinor, "boost", axis, float(rapidity))


def make_rotation(axis: int, angle: float) -> LorentzTransform:
    _check_axis(axis)
    if not np.isfinite(angle):
        raise ValueError("angle must be finite")
    i, j = _CYCLIC[axis]
    lam = np.eye(4)
    co, si = np.cos(angle), np.sin(angle)
    lam[i, i] = lam[j, j] = co
    lam[i, j] = -si
    lam[j, i] = si
    rep = build_gamma_spinor()
    generator = rep.gamma[i] @ rep.gamma[j]
    spinor = np.cos(angle / 2) * np.eye(4, dtype=complex) \
        + np.sin(angle / 2) * generator
    return LorentzTransform(lam, spinor, "rotation", axis, float(angle))


def transform_vector(t: LorentzTransform, p: FourVector) -> FourVector:
    return FourVector.from_array(t.vector_matrix @ p.as_array())


def metric_residual(t: LorentzTransform) -> float:
    """Deviation of Lambda^T g Lambda from g."""
    g = np.diag([1.0, -1.0, -1.0, -1.0])
    return max_abs(t.vector_matrix.T @ g @ t.vector_matrix - g)


def intertwining_residual(t: LorentzTransform) -> float:
    """Worst deviation of S^-1 gamma^mu S from Lambda^mu_nu gamma^nu."""
    rep = build_gamma_spinor()
    s_inv = t.inverse_spinor_matrix()
    worst = 0.0
    for mu in range(4):
        rotated = sum(t.vector_matrix[mu, nu] * rep.gamma[nu] for nu in range(4))
        worst = max(worst, max_abs(s_inv @ rep.gamma[mu] @ t.spinor_matrix - rotated))
    return worst


def transform_dirac_solution(
    t: LorentzTransform, psi: Bispinor, p: FourVector, m: float,
    tol: float = DEFAULT_TOL,
) -> tuple[Bispinor, FourVector]:
    """Map a solution at p to the solution S psi at Lambda p."""
    require_dirac_solution(psi, p, m, tol)
    return (
        Bispinor.from_array(t.spinor_matrix @ psi.as_array()),
        transform_vector(t, p),
    )


def p4_commutation_residual(t: LorentzTransform) -> float:
    """Norm of [S, P4]; zero exactly on the axis-3 boost/rotation subgroup.

    The projector's gamma expansion is built from the axis-3 boost and
    rotation generators, so only that one-parameter pair commutes with it.
    """
    p4 = build_projector(4).matrix
    return max_abs(t.spinor_matrix @ p4 - p4 @ t.spinor_matrix)


def transform_susy_solution(
    t: LorentzTransform, v, p: FourVector, m: float, tol: float = DEFAULT_TOL,
) -> tuple[np.ndarray, FourVector]:
    """Covariant map of a projected-equation solution along the axis-3 subgroup.

    Outside the subgroup S fails to commute with the projector and the
    transformed vector satisfies no manifestly projected equation, so other
    transforms are rejected.
    """
    if t.axis != 3:
        raise ValueError("projected-equation covariance is manifest only for "
                         "axis-3 boosts and rotations")
    v = np.asarray(v, dtype=complex)
    res = susy_residual(build_gamma_spinor(), p, m, v)
    scale = max(1.0, max_abs(v)) * (1.0 + max_abs(p.as_array()) + abs(m))
    if res > tol * scale:
        raise ValueError(
            f"vector does not solve the projected equation (residual {res:.3g})"
        )
    return t.spinor_matrix @ v, transform_vector(t, p)
