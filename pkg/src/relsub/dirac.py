"""Spinor-representation gamma matrices and the free spin-1/2 plane-wave problem.

Conventions used by the whole package:

* metric diag(1,-1,-1,-1), natural units, momentum operator i d/dx_mu;
* gamma^0 has identity off-diagonal blocks, gamma^j carries -sigma^j on top,
  +sigma^j below;
* gamma5 = diag(1,1,-1,-1), which equals +i gamma^0 gamma^1 gamma^2 gamma^3
  for these blocks.  With this sign the chiral projector Q+ keeps the upper
  (xi) spinor and Q- the lower (eta) one, and the rank-3 projector formula in
  :mod:`relsub.susy` comes out as diag(1,1,1,0).  Flipping the sign of gamma5
  swaps the roles of Q+ and Q- and breaks that projector identity;
* plane waves are amplitude * exp(-i p.x) with p0 > 0 called positive energy,
  so complex conjugation of a term flips the sign of its momentum.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NotASolutionError
from .linalg import DEFAULT_TOL, NullSpaceResult, max_abs, null_space, realify_antilinear
from .minkowski import FourVector, require_on_shell

SIGMA0 = np.eye(2, dtype=complex)
SIGMA1 = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA2 = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA3 = np.array([[1, 0], [0, -1]], dtype=complex)
PAULI = (SIGMA0, SIGMA1, SIGMA2, SIGMA3)

_ZERO2 = np.zeros((2, 2), dtype=complex)


@dataclass(eq=False)
class GammaRep:
    """The four gamma matrices plus gamma5 in the spinor representation."""

    gamma: tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]
    gamma5: np.ndarray

    def contract(self, p: FourVector) -> np.ndarray:
        """gamma^mu p_mu with covariant components (p0, -px, -py, -pz)."""
        g0, g1, g2, g3 = self.gamma
        return p.t * g0 - p.x * g1 - p.y * g2 - p.z * g3


def build_gamma_spinor() -> GammaRep:
    """Exact integer/imaginary-unit gamma matrices in the spinor representation."""
    g0 = np.block([[_ZERO2, SIGMA0], [SIGMA0, _ZERO2]])
    gj = tuple(np.block([[_ZERO2, -s], [s, _ZERO2]]) for s in (SIGMA1, SIGMA2, SIGMA3))
    gamma5 = np.diag([1.0, 1.0, -1.0, -1.0]).astype(complex)
    return GammaRep(gamma=(g0, *gj), gamma5=gamma5)


def sigma_momentum(p: FourVector, sign: int) -> np.ndarray:
    """The 2x2 block p0*s0 + sign*(sigma.p), sign +1 or -1."""
    return p.t * SIGMA0 + sign * (p.x * SIGMA1 + p.y * SIGMA2 + p.z * SIGMA3)


@dataclass(frozen=True)
class Bispinor:
    """Four complex amplitudes ordered (xi1, xi2, eta1, eta2)."""

    xi1: complex
    xi2: complex
    eta1: complex
    eta2: complex

    @classmethod
    def from_array(cls, arr) -> "Bispinor":
        a = np.asarray(arr, dtype=complex)
        if a.shape != (4,):
            raise ValueError("bispinor needs exactly 4 components")
        return cls(complex(a[0]), complex(a[1]), complex(a[2]), complex(a[3]))

    def as_array(self) -> np.ndarray:
        return np.array([self.xi1, self.xi2, self.eta1, self.eta2])


def dirac_operator(rep: GammaRep, p: FourVector, m: float) -> np.ndarray:
    """gamma^mu p_mu - m; its kernel is the plane-wave solution space."""
    return rep.contract(p) - m * np.eye(4, dtype=complex)


def dirac_component_residual(psi: Bispinor, p: FourVector, m: float) -> float:
    """Largest residual of the four scalar equations, written out explicitly.

    Independent of the gamma-matrix contraction path, so it doubles as an
    oracle for operator assembly.
    """
    a, b, c, d = p.t, p.x, p.y, p.z
    x1, x2, e1, e2 = psi.xi1, psi.xi2, psi.eta1, psi.eta2
    rows = (
        (a + d) * e1 + (b - 1j * c) * e2 - m * x1,
        (b + 1j * c) * e1 + (a - d) * e2 - m * x2,
        (a - d) * x1 + (-b + 1j * c) * x2 - m * e1,
        (-b - 1j * c) * x1 + (a + d) * x2 - m * e2,
    )
    return max_abs(np.array(rows))


def dirac_solutions(p: FourVector, m: float, tol: float = DEFAULT_TOL) -> NullSpaceResult:
    """Orthonormal basis of plane-wave amplitudes at an on-shell momentum."""
    require_on_shell(p, m, tol)
    rep = build_gamma_spinor()
    return null_space(dirac_operator(rep, p, m), tol)


def chiral_project(rep: GammaRep, psi: Bispinor, sign: int) -> Bispinor:
    """Apply Q(sign) = (1 + sign*gamma5)/2; here Q+ keeps xi and Q- keeps eta."""
    if sign not in (+1, -1):
        raise ValueError("sign must be +1 or -1")
    q = (np.eye(4, dtype=complex) + sign * rep.gamma5) / 2
    return Bispinor.from_array(q @ psi.as_array())


def weyl_residual(p: FourVector, spinor2, handedness: str) -> float:
    """Residual of the massless two-component equation.

    ``left`` checks (p0 + sigma.p) eta = 0, the negative-helicity branch;
    ``right`` checks (p0 - sigma.p) xi = 0.
    """
    spinor2 = np.asarray(spinor2, dtype=complex)
    if handedness == "left":
        sign = +1
    elif handedness == "right":
        sign = -1
    else:
        raise ValueError("handedness must be 'left' or 'right'")
    return max_abs(sigma_momentum(p, sign) @ spinor2)


def second_order_residual(p: FourVector, m: float, spinor2, which: str) -> float:
    """Residual of the factorized second-order equation for one 2-spinor.

    (p0 + sigma.p)(p0 - sigma.p) = p.p times the identity, so the residual
    vanishes for every spinor exactly when p is on shell.
    """
    spinor2 = np.asarray(spinor2, dtype=complex)
    if which == "xi":
        first, second = +1, -1
    elif which == "eta":
        first, second = -1, +1
    else:
        raise ValueError("which must be 'xi' or 'eta'")
    out = sigma_momentum(p, first) @ (sigma_momentum(p, second) @ spinor2)
    return max_abs(out - m * m * spinor2)


class PlaneWaveSuperposition:
    """Finite sum of plane-wave terms (amplitude, momentum).

    Terms with equal momentum are merged; the stored order is canonical
    (sorted by momentum components) so equal superpositions compare cleanly.
    """

    def __init__(self, terms):
        merged: dict[FourVector, np.ndarray] = {}
        arity = None
        for amplitude, momentum in terms:
            amp = np.asarray(amplitude, dtype=complex)
            if amp.ndim != 1:
                raise ValueError("amplitudes must be flat complex vectors")
            if arity is None:
                arity = amp.size
            elif amp.size != arity:
                raise ValueError("all amplitudes must have the same length")
            if momentum in merged:
                merged[momentum] = merged[momentum] + amp
            else:
                merged[momentum] = amp.copy()
        self._terms = tuple(
            (merged[q], q) for q in sorted(merged, key=lambda v: (v.t, v.x, v.y, v.z))
        )

    @property
    def terms(self) -> tuple:
        return self._terms

    @property
    def arity(self) -> int:
        return self._terms[0][0].size if self._terms else 0

    def conjugate(self) -> "PlaneWaveSuperposition":
        """Complex-conjugate the field: (c, p) -> (conj c, -p) termwise."""
        return PlaneWaveSuperposition((amp.conj(), -q) for amp, q in self._terms)

    def apply_matrix(self, matrix) -> "PlaneWaveSuperposition":
        matrix = np.asarray(matrix, dtype=complex)
        return PlaneWaveSuperposition((matrix @ amp, q) for amp, q in self._terms)

    def apply(self, matrix_of_momentum) -> "PlaneWaveSuperposition":
        """Act with a momentum-dependent matrix termwise (momentum-operator action)."""
        return PlaneWaveSuperposition(
            (np.asarray(matrix_of_momentum(q), dtype=complex) @ amp, q)
            for amp, q in self._terms
        )

    def scaled(self, factor: complex) -> "PlaneWaveSuperposition":
        return PlaneWaveSuperposition((factor * amp, q) for amp, q in self._terms)

    def __add__(self, other: "PlaneWaveSuperposition") -> "PlaneWaveSuperposition":
        return PlaneWaveSuperposition(list(self._terms) + list(other.terms))

    def __sub__(self, other: "PlaneWaveSuperposition") -> "PlaneWaveSuperposition":
        return self + other.scaled(-1.0)

    def max_amplitude_norm(self) -> float:
        return max((max_abs(amp) for amp, _ in self._terms), default=0.0)


def charge_conjugate(rep: GammaRep, psi: PlaneWaveSuperposition) -> PlaneWaveSuperposition:
    """Charge conjugation i gamma^2 conj(psi); an involution on superpositions."""
    if psi.arity not in (0, 4):
        raise ValueError("charge conjugation needs 4-component amplitudes")
    return psi.conjugate().apply_matrix(1j * rep.gamma[2])


def _majorana_parts(p: FourVector, m: float, chirality: str):
    """Linear and antilinear blocks of the two-exponential ansatz system.

    For the eta branch the field a*exp(-ip.x) + b*exp(+ip.x) must satisfy
    (p0 + sigma.p) eta = -i m sigma2 conj(eta); matching exponentials gives
    a linear action on (a, b) plus an antilinear one on their conjugates.
    The xi branch mirrors it with the opposite sigma.p and mass-term signs.
    """
    if chirality == "eta":
        block = sigma_momentum(p, +1)
        coupling = 1j * m * SIGMA2
    elif chirality == "xi":
        block = sigma_momentum(p, -1)
        coupling = -1j * m * SIGMA2
    else:
        raise ValueError("chirality must be 'eta' or 'xi'")
    linear = np.block([[block, _ZERO2], [_ZERO2, block]])
    antilinear = np.block([[_ZERO2, coupling], [-coupling, _ZERO2]])
    return linear, antilinear


def majorana_solutions(
    p: FourVector, m: float, chirality: str, tol: float = DEFAULT_TOL
) -> NullSpaceResult:
    """Kernel of the realified antilinear system; real dimension 4 on shell.

    Basis vectors live in the 8-dimensional real space stacking the real and
    imaginary parts of (a, b); decode them with ``majorana_amplitudes``.
    """
    if m <= 0:
        raise ValueError("the antilinear mass coupling needs m > 0; "
                         "use weyl_residual for the massless case")
    require_on_shell(p, m, tol)
    linear, antilinear = _majorana_parts(p, m, chirality)
    return null_space(realify_antilinear(linear, antilinear), tol)


def majorana_amplitudes(vec8) -> tuple[np.ndarray, np.ndarray]:
    """Decode a realified kernel vector into the (a, b) amplitude pair."""
    v = np.asarray(vec8, dtype=float)
    if v.shape != (8,):
        raise ValueError("expected an 8-component real vector")
    z = v[:4] + 1j * v[4:]
    return z[:2], z[2:]


def majorana_superposition(p: FourVector, a, b) -> PlaneWaveSuperposition:
    """Two-term 2-component field a*exp(-ip.x) + b*exp(+ip.x)."""
    return PlaneWaveSuperposition([(np.asarray(a, complex), p), (np.asarray(b, complex), -p)])


def majorana_residual(p: FourVector, m: float, chirality: str, a, b) -> float:
    """Residual of the antilinear equation on the two-term field."""
    field = majorana_superposition(p, a, b)
    if chirality == "eta":
        lhs = field.apply(lambda q: sigma_momentum(q, +1))
        rhs = field.conjugate().apply_matrix(-1j * m * SIGMA2)
    elif chirality == "xi":
        lhs = field.apply(lambda q: sigma_momentum(q, -1))
        rhs = field.conjugate().apply_matrix(1j * m * SIGMA2)
    else:
        raise ValueError("chirality must be 'eta' or 'xi'")
    return (lhs - rhs).max_amplitude_norm()


def majorana_field(p: FourVector, m: float, chirality: str, a, b) -> PlaneWaveSuperposition:
    """Assemble the 4-component field whose two halves are conjugation-locked.

    The free half is the (a, b) two-term field; the other half is built from
    it (xi = -i sigma2 conj(eta), or eta = +i sigma2 conj(xi)), which makes
    the result charge-conjugation invariant by construction.
    """
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if chirality == "eta":
        top_p, top_m = -1j * SIGMA2 @ b.conj(), -1j * SIGMA2 @ a.conj()
        terms = [
            (np.concatenate([top_p, a]), p),
            (np.concatenate([top_m, b]), -p),
        ]
    elif chirality == "xi":
        bot_p, bot_m = 1j * SIGMA2 @ b.conj(), 1j * SIGMA2 @ a.conj()
        terms = [
            (np.concatenate([a, bot_p]), p),
            (np.concatenate([b, bot_m]), -p),
        ]
    else:
        raise ValueError("chirality must be 'eta' or 'xi'")
    return PlaneWaveSuperposition(terms)


def require_dirac_solution(psi: Bispinor, p: FourVector, m: float,
                           tol: float = DEFAULT_TOL) -> None:
    """Raise NotASolutionError when psi fails the component equations."""
    scale = max(1.0, max_abs(psi.as_array())) * (1.0 + max_abs(p.as_array()) + abs(m))
    res = dirac_component_residual(psi, p, m)
    if res > tol * scale:
        raise NotASolutionError(
            f"bispinor does not solve the free equation at this momentum "
            f"(residual {res:.3g}, allowed {tol * scale:.3g})"
        )
