"""Spin-0 (5x5) and spin-1 (10x10) first-order multiplet representations.

The beta matrices are fixed entirely by demanding that the contracted
operator reproduce the component equations under the multiplet layouts

    spin 0: (v0, v1, v2, v3, s)            with p^mu s = m v^mu, p_mu v^mu = m s
    spin 1: (t01, t02, t03, t23, t31, t12, v0, v1, v2, v3)
            with p^mu v^nu - p^nu v^mu = m t^{mu nu}, p_mu t^{mu nu} = m v^nu

and both sets satisfy the trilinear relation

    b^l b^m b^n + b^n b^m b^l = g^{lm} b^n + g^{nm} b^l

exactly (all entries are 0 or +-1).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import DEFAULT_TOL, NullSpaceResult, max_abs, null_space
from .minkowski import FourVector, minkowski_square, require_on_shell

METRIC_DIAG = (1.0, -1.0, -1.0, -1.0)

TENSOR_PAIRS = ((0, 1), (0, 2), (0, 3), (2, 3), (3, 1), (1, 2))

_TENSOR_SLOT: dict[tuple[int, int], tuple[int, float]] = {}
for _k, (_mu, _nu) in enumerate(TENSOR_PAIRS):
    _TENSOR_SLOT[(_mu, _nu)] = (_k, 1.0)
    _TENSOR_SLOT[(_nu, _mu)] = (_k, -1.0)


@dataclass(eq=False)
class BetaRep:
    """A set of four beta matrices with its spin label."""

    beta: tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]
    spin: int

    @property
    def dim(self) -> int:
        return self.beta[0].shape[0]

    def contract(self, p: FourVector) -> np.ndarray:
        b0, b1, b2, b3 = self.beta
        return p.t * b0 - p.x * b1 - p.y * b2 - p.z * b3


def build_beta_spin0() -> BetaRep:
    betas = []
    for lam in range(4):
        b = np.zeros((5, 5), dtype=complex)
        b[lam, 4] = METRIC_DIAG[lam]
        b[4, lam] = 1.0
        betas.append(b)
    return BetaRep(beta=tuple(betas), spin=0)


def build_beta_spin1() -> BetaRep:
    betas = [np.zeros((10, 10), dtype=complex) for _ in range(4)]
    for r, (mu, nu) in enumerate(TENSOR_PAIRS):
        betas[mu][r, 6 + nu] += METRIC_DIAG[mu]
        betas[nu][r, 6 + mu] -= METRIC_DIAG[nu]
    for nu in range(4):
        for lam in range(4):
            if lam == nu:
                continue
            k, sign = _TENSOR_SLOT[(lam, nu)]
            betas[lam][6 + nu, k] += sign
    return BetaRep(beta=tuple(betas), spin=1)


@dataclass(eq=False)
class DKPVector5:
    """Spin-0 multiplet: four-vector part plus scalar, layout (v, s)."""

    psi_mu: np.ndarray
    psi: complex

    @classmethod
    def from_array(cls, arr) -> "DKPVector5":
        a = np.asarray(arr, dtype=complex)
        if a.shape != (5,):
            raise ValueError("spin-0 multiplet needs 5 components")
        return cls(psi_mu=a[:4].copy(), psi=complex(a[4]))

    def as_array(self) -> np.ndarray:
        return np.concatenate([self.psi_mu, [self.psi]])


@dataclass(eq=False)
class DKPVector10:
    """Spin-1 multiplet: six tensor components then the four-vector part."""

    psi_tensor: np.ndarray
    psi_vec: np.ndarray

    @classmethod
    def from_array(cls, arr) -> "DKPVector10":
        a = np.asarray(arr, dtype=complex)
        if a.shape != (10,):
            raise ValueError("spin-1 multiplet needs 10 components")
        return cls(psi_tensor=a[:6].copy(), psi_vec=a[6:].copy())

    def as_array(self) -> np.ndarray:
        return np.concatenate([self.psi_tensor, self.psi_vec])

    def tensor_component(self, mu: int, nu: int) -> complex:
        """Full antisymmetric tensor entry from the six stored values."""
        if mu == nu:
            return 0j
        k, sign = _TENSOR_SLOT[(mu, nu)]
        return complex(sign * self.psi_tensor[k])


def dkp_operator(rep: BetaRep, p: FourVector, m: float) -> np.ndarray:
    if m <= 0:
        raise ValueError("the first-order multiplet operator needs m > 0")
    return rep.contract(p) - m * np.eye(rep.dim, dtype=complex)


def dkp_solutions(rep: BetaRep, p: FourVector, m: float,
                  tol: float = DEFAULT_TOL) -> NullSpaceResult:
    """Plane-wave multiplet amplitudes at an on-shell momentum."""
    require_on_shell(p, m, tol)
    return null_space(dkp_operator(rep, p, m), tol)


def spin0_component_residual(sol: DKPVector5, p: FourVector, m: float) -> float:
    """Largest residual of the five component equations (oracle path)."""
    pu = p.as_array()  # contravariant components
    rows = list(pu * sol.psi - m * sol.psi_mu)
    trace = pu[0] * sol.psi_mu[0] - pu[1:] @ sol.psi_mu[1:]
    rows.append(trace - m * sol.psi)
    return max_abs(np.array(rows))


def spin1_component_residual(sol: DKPVector10, p: FourVector, m: float) -> float:
    """Largest residual of the ten component equations (oracle path)."""
    pu = p.as_array()
    pl = np.array([p.t, -p.x, -p.y, -p.z])
    rows = []
    for k, (mu, nu) in enumerate(TENSOR_PAIRS):
        rows.append(pu[mu] * sol.psi_vec[nu] - pu[nu] * sol.psi_vec[mu]
                    - m * sol.psi_tensor[k])
    for nu in range(4):
        contraction = sum(pl[mu] * sol.tensor_component(mu, nu) for mu in range(4))
        rows.append(contraction - m * sol.psi_vec[nu])
    return max_abs(np.array(rows))


def transversality_residual(sol: DKPVector10, p: FourVector) -> float:
    """|p_nu v^nu| for the vector part; zero for on-shell solutions."""
    v = sol.psi_vec
    return abs(p.t * v[0] - p.x * v[1] - p.y * v[2] - p.z * v[3])


def klein_gordon_residual(p: FourVector, m: float, psi: complex) -> float:
    """|(p.p - m^2) psi|, the second-order consistency of the scalar part."""
    return abs((minkowski_square(p) - m * m) * psi)


def scalar_multiplet(p: FourVector, m: float, psi: complex) -> DKPVector5:
    """Factorized multiplet v^mu = p^mu psi / m built from a scalar amplitude.

    Lies in the kernel of the spin-0 operator exactly when p is on shell,
    which is the first-order factorization of the second-order scalar
    equation.
    """
    if m <= 0:
        raise ValueError("factorized multiplet needs m > 0")
    return DKPVector5(psi_mu=p.as_array().astype(complex) * psi / m, psi=psi)
