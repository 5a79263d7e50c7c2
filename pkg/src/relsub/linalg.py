"""Complex matrix helpers: products, SVD null spaces, realified antilinear maps.

All matrices here are tiny (at most 16x16) and dense; numpy is the backend.
Representation matrices with entries in {0, +-1, +-i} admit exact comparisons,
so algebra identities on them are checked with ``exact_equal`` rather than a
tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

DEFAULT_TOL = 1e-10


def max_abs(a) -> float:
    """Largest entry magnitude, used as the residual norm throughout."""
    a = np.asarray(a)
    if a.size == 0:
        return 0.0
    return float(np.max(np.abs(a)))


def exact_equal(a, b) -> bool:
    """Entrywise exact equality, for identities on integer-valued matrices."""
    return np.array_equal(np.asarray(a), np.asarray(b))


def matmul(a, b) -> np.ndarray:
    """Matrix product with an explicit shape contract.

    Exact whenever the entries are Gaussian integers scaled by a common
    power of two, since float products and sums of such values round-trip.
    """
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if a.ndim != 2 or b.ndim != 2:
        raise ValueError("matmul expects two 2-d matrices")
    if a.shape[1] != b.shape[0]:
        raise ValueError(f"incompatible shapes {a.shape} x {b.shape}")
    return a @ b


@dataclass(eq=False)
class NullSpaceResult:
    """Orthonormal kernel basis together with the full singular spectrum."""

    dimension: int
    basis: list[np.ndarray] = field(default_factory=list)
    singular_values: np.ndarray = field(default_factory=lambda: np.zeros(0))


def null_space(m, tol: float = DEFAULT_TOL) -> NullSpaceResult:
    """Numerical kernel of ``m``: span of {v : ||m v|| <= tol ||m|| ||v||}.

    Rank is decided by the relative threshold tol * (largest singular value);
    a zero matrix therefore has a full-dimensional kernel.  Basis vectors are
    unit-norm and mutually orthonormal (right singular vectors).
    """
    m = np.asarray(m)
    if m.ndim != 2 or m.size == 0:
        raise ValueError("null_space expects a nonempty 2-d matrix")
    if tol <= 0:
        raise ValueError("tol must be positive")
    # keep real input real so kernels of realified systems stay real vectors
    m = m.astype(complex if np.iscomplexobj(m) else float)
    _, s, vh = np.linalg.svd(m)
    threshold = tol * (s[0] if s.size else 0.0)
    rank = int(np.sum(s > threshold))
    dimension = m.shape[1] - rank
    basis = [vh[i].conj() for i in range(rank, m.shape[1])]
    return NullSpaceResult(dimension=dimension, basis=basis, singular_values=s)


def realify_antilinear(linear_part, antilinear_part) -> np.ndarray:
    """Real 2n x 2n matrix of v -> L v + A conj(v) acting on stacked (Re v, Im v).

    With L = Lr + i Li and A = Ar + i Ai the action splits into

        Re out = (Lr + Ar) Re v + (Ai - Li) Im v
        Im out = (Li + Ai) Re v + (Lr - Ar) Im v

    so kernels of the returned matrix encode solutions of the antilinear system.
    """
    lin = np.asarray(linear_part, dtype=complex)
    anti = np.asarray(antilinear_part, dtype=complex)
    if lin.shape != anti.shape or lin.ndim != 2 or lin.shape[0] != lin.shape[1]:
        raise ValueError("linear and antilinear parts must be square with equal shape")
    lr, li = lin.real, lin.imag
    ar, ai = anti.real, anti.imag
    return np.block([[lr + ar, ai - li], [li + ai, lr - ar]])


def split_realified(v) -> np.ndarray:
    """Reassemble the complex vector encoded by a stacked (Re v, Im v) vector."""
    v = np.asarray(v, dtype=float)
    if v.ndim != 1 or v.size % 2:
        raise ValueError("expected a flat real vector of even length")
    n = v.size // 2
    return v[:n] + 1j * v[n:]
