"""Four-vectors with metric diag(1,-1,-1,-1) and their two-index spinor form.

A four-vector v maps to the 2x2 matrix v^0 s0 + v.s with rows indexed by the
undotted and columns by the dotted spinor index.  The lower-index companion
is fixed so that contracting a momentum spinor against a solution spinor
reproduces the third row of the mixed first-order systems in
:mod:`relsub.subsolutions`; see ``lower_spinor_matrix``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import OffShellError
from .linalg import DEFAULT_TOL, max_abs


@dataclass(frozen=True)
class FourVector:
    """Real Minkowski four-vector (t, x, y, z) in natural units."""

    t: float
    x: float
    y: float
    z: float

    @classmethod
    def from_array(cls, arr) -> "FourVector":
        t, x, y, z = np.asarray(arr, dtype=float)
        return cls(float(t), float(x), float(y), float(z))

    def as_array(self) -> np.ndarray:
        return np.array([self.t, self.x, self.y, self.z], dtype=float)

    @property
    def spatial(self) -> np.ndarray:
        return np.array([self.x, self.y, self.z], dtype=float)

    def __neg__(self) -> "FourVector":
        return FourVector(-self.t, -self.x, -self.y, -self.z)


def minkowski_square(v: FourVector) -> float:
    return v.t * v.t - v.x * v.x - v.y * v.y - v.z * v.z


def shell_residual(p: FourVector, m: float) -> float:
    """|p.p - m^2|, zero exactly on the mass shell."""
    return abs(minkowski_square(p) - m * m)


def require_on_shell(p: FourVector, m: float, tol: float = DEFAULT_TOL) -> None:
    res = shell_residual(p, m)
    if res > tol * max(1.0, m * m):
        raise OffShellError(
            f"momentum off shell: p.p = {minkowski_square(p):.6g}, "
            f"m^2 = {m * m:.6g}, |p.p - m^2| = {res:.3g}"
        )


@dataclass(eq=False)
class MomentumSpinor:
    """Upper- and lower-index 2x2 spinor matrices of one four-vector."""

    upper: np.ndarray
    lower: np.ndarray


def upper_spinor_matrix(components) -> np.ndarray:
    """Two-index spinor matrix of a (possibly complex) four-component vector."""
    c0, c1, c2, c3 = np.asarray(components, dtype=complex)
    return np.array([[c0 + c3, c1 - 1j * c2], [c1 + 1j * c2, c0 - c3]])


def lower_spinor_matrix(components) -> np.ndarray:
    """Lower-index companion of ``upper_spinor_matrix``.

    Entry pattern [[c0-c3, -c1-i c2], [-c1+i c2, c0+c3]]: the unique choice
    for which the elementwise pairing with the upper matrix gives twice the
    Minkowski square and each single-column pairing gives it once.
    """
    c0, c1, c2, c3 = np.asarray(components, dtype=complex)
    return np.array([[c0 - c3, -c1 - 1j * c2], [-c1 + 1j * c2, c0 + c3]])


def components_from_spinor(s) -> np.ndarray:
    """Invert ``upper_spinor_matrix``; works for complex component vectors."""
    s = np.asarray(s, dtype=complex)
    if s.shape != (2, 2):
        raise ValueError("expected a 2x2 spinor matrix")
    return np.array(
        [
            (s[0, 0] + s[1, 1]) / 2,
            (s[0, 1] + s[1, 0]) / 2,
            (s[1, 0] - s[0, 1]) / 2j,
            (s[0, 0] - s[1, 1]) / 2,
        ]
    )


def vector_to_spinor(v: FourVector) -> MomentumSpinor:
    arr = v.as_array()
    return MomentumSpinor(upper=upper_spinor_matrix(arr), lower=lower_spinor_matrix(arr))


def spinor_to_vector(s, tol: float = DEFAULT_TOL) -> FourVector:
    """Read a real four-vector off a Hermitian 2x2 spinor matrix."""
    s = np.asarray(s, dtype=complex)
    if s.shape != (2, 2):
        raise ValueError("expected a 2x2 spinor matrix")
    herm = max_abs(s - s.conj().T)
    if herm > tol * max(1.0, max_abs(s)):
        raise ValueError(f"spinor matrix is not Hermitian (deviation {herm:.3g})")
    return FourVector.from_array(components_from_spinor(s).real)


def spinor_pairing(p: FourVector) -> float:
    """Full elementwise pairing of lower against upper; equals 2 p.p."""
    s = vector_to_spinor(p)
    return float(np.sum(s.lower * s.upper).real)


def half_pairing(p: FourVector, dotted_index: int) -> float:
    """Single-column pairing at fixed dotted index (1 or 2); equals p.p.

    This is the identity that lets the trace row of the spin-0 system split
    into two independent three-component systems.
    """
    if dotted_index not in (1, 2):
        raise ValueError("dotted_index must be 1 or 2")
    s = vector_to_spinor(p)
    col = dotted_index - 1
    return float(np.sum(s.lower[:, col] * s.upper[:, col]).real)
