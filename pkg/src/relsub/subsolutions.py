"""Splitting multiplet and bispinor solutions into three-component constituents.

Both splits end in the same place: a three-component object (two spinor
amplitudes and one scalar-like amplitude) padded with a zero into a
four-component vector that solves a fixed 4x4 first-order system.  There are
two such systems, one per dotted spinor column:

* the ``left`` system, whose matrix coincides with gamma^mu p_mu in the
  spinor representation, solved by the dotted-1 column of a spin-0 multiplet
  and by the branch-1 piece of a bispinor;
* the ``right`` system, the same matrix with the two off-diagonal blocks
  swapped between columns, solved by the dotted-2 column and the branch-2
  piece.

The fourth row of each system is not an equation of motion; it evaluates an
identity that holds automatically for genuine constituents, consistent with
the padded zero.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .dirac import Bispinor, require_dirac_solution
from .dkp import DKPVector5, spin0_component_residual
from .errors import NotASolutionError
from .linalg import DEFAULT_TOL, max_abs
from .minkowski import (
    FourVector,
    components_from_spinor,
    upper_spinor_matrix,
    vector_to_spinor,
)

SIDES = ("left", "right")


@dataclass(frozen=True)
class ScalarTriple:
    """Dotted-column constituent of a spin-0 multiplet solution.

    ``comp1``/``comp2`` are the two solution-spinor entries with undotted
    index 1 and 2 at the fixed dotted column; ``scalar`` is the multiplet
    scalar; ``side`` records which column (left = dotted 1, right = dotted 2).
    """

    comp1: complex
    comp2: complex
    scalar: complex
    side: str


@dataclass(frozen=True)
class DiracConstituent:
    """Branch constituent of a bispinor solution.

    Branch 1 pairs (xi_a, xi_b) with eta1, branch 2 with eta2; the xi parts
    are defined from eta by division by the mass, so these exist only for
    m > 0.
    """

    xi_a: complex
    xi_b: complex
    eta: complex
    branch: int


def system_matrix(p: FourVector, side: str) -> np.ndarray:
    """The shared 4x4 first-order matrix for one side, written out entrywise.

    The left matrix is numerically identical to the gamma contraction of
    :mod:`relsub.dirac`; building it from explicit entries keeps this module
    an independent check on that path.
    """
    a, b, c, d = p.t, p.x, p.y, p.z
    if side == "left":
        return np.array(
            [
                [0, 0, a + d, b - 1j * c],
                [0, 0, b + 1j * c, a - d],
                [a - d, -b + 1j * c, 0, 0],
                [-b - 1j * c, a + d, 0, 0],
            ],
            dtype=complex,
        )
    if side == "right":
        return np.array(
            [
                [0, 0, a - d, b + 1j * c],
                [0, 0, b - 1j * c, a + d],
                [a + d, -b - 1j * c, 0, 0],
                [-b + 1j * c, a - d, 0, 0],
            ],
            dtype=complex,
        )
    raise ValueError("side must be 'left' or 'right'")


def triple_system_matrix(p: FourVector, m: float, side: str) -> np.ndarray:
    """Homogeneous 3x3 form of one triple's equations; kernel nonzero only on shell."""
    if side not in SIDES:
        raise ValueError("side must be 'left' or 'right'")
    s = vector_to_spinor(p)
    col = 0 if side == "left" else 1
    return np.array(
        [
            [-m, 0, s.upper[0, col]],
            [0, -m, s.upper[1, col]],
            [s.lower[0, col], s.lower[1, col], -m],
        ],
        dtype=complex,
    )


def triple_residual(t: ScalarTriple, p: FourVector, m: float) -> float:
    """Largest residual of the triple's three defining equations."""
    vec = np.array([t.comp1, t.comp2, t.scalar])
    return max_abs(triple_system_matrix(p, m, t.side) @ vec)


def triple_identity_residual(t: ScalarTriple, p: FourVector) -> float:
    """Cross identity p^{2B} c1 = p^{1B} c2 at the triple's dotted column."""
    s = vector_to_spinor(p)
    col = 0 if t.side == "left" else 1
    return abs(s.upper[1, col] * t.comp1 - s.upper[0, col] * t.comp2)


def split_dkp_spin0(sol: DKPVector5, p: FourVector, m: float,
                    tol: float = DEFAULT_TOL) -> tuple[ScalarTriple, ScalarTriple]:
    """Split a spin-0 multiplet solution into its two dotted-column triples.

    The vector part is rewritten as a 2x2 spinor matrix; each column, with
    the shared scalar, closes into a three-equation system of its own.  The
    input must genuinely solve the multiplet equations, otherwise the triples
    would satisfy nothing and the error is raised up front.
    """
    if m <= 0:
        raise ValueError("splitting divides by the mass; m > 0 required")
    res = spin0_component_residual(sol, p, m)
    scale = max(1.0, max_abs(sol.as_array())) * (1.0 + max_abs(p.as_array()) + m)
    if res > tol * scale:
        raise NotASolutionError(
            f"multiplet does not solve the spin-0 system (residual {res:.3g})"
        )
    spinor = upper_spinor_matrix(sol.psi_mu)
    left = ScalarTriple(complex(spinor[0, 0]), complex(spinor[1, 0]), sol.psi, "left")
    right = ScalarTriple(complex(spinor[0, 1]), complex(spinor[1, 1]), sol.psi, "right")
    return left, right


def reassemble_dkp(left: ScalarTriple, right: ScalarTriple) -> DKPVector5:
    """Inverse of the spin-0 split: rebuild the multiplet from both triples."""
    if left.side != "left" or right.side != "right":
        raise ValueError("expected one left and one right triple, in that order")
    spinor = np.array(
        [[left.comp1, right.comp1], [left.comp2, right.comp2]], dtype=complex
    )
    return DKPVector5(psi_mu=components_from_spinor(spinor), psi=left.scalar)


def embed_dkp_triple(t: ScalarTriple) -> np.ndarray:
    """Pad a triple into the four-vector solving its side's 4x4 system.

    The right-side system wants the component order swapped (undotted 2
    first), mirroring the swap built into ``system_matrix('right')``.
    """
    if t.side == "left":
        return np.array([t.comp1, t.comp2, t.scalar, 0.0], dtype=complex)
    if t.side == "right":
        return np.array([t.comp2, t.comp1, t.scalar, 0.0], dtype=complex)
    raise ValueError("side must be 'left' or 'right'")


def constituent_residual(c: DiracConstituent, p: FourVector, m: float) -> float:
    """Largest residual of the constituent's three defining equations."""
    a, b, cc, d = p.t, p.x, p.y, p.z
    if c.branch == 1:
        rows = (
            (a + d) * c.eta - m * c.xi_a,
            (b + 1j * cc) * c.eta - m * c.xi_b,
            (a - d) * c.xi_a + (-b + 1j * cc) * c.xi_b - m * c.eta,
        )
    elif c.branch == 2:
        rows = (
            (b - 1j * cc) * c.eta - m * c.xi_a,
            (a - d) * c.eta - m * c.xi_b,
            (-b - 1j * cc) * c.xi_a + (a + d) * c.xi_b - m * c.eta,
        )
    else:
        raise ValueError("branch must be 1 or 2")
    return max_abs(np.array(rows))


def constituent_identity_residual(c: DiracConstituent, p: FourVector) -> float:
    """The per-branch identity that backs the zero fourth row after embedding."""
    a, b, cc, d = p.t, p.x, p.y, p.z
    if c.branch == 1:
        return abs((b + 1j * cc) * c.xi_a - (a + d) * c.xi_b)
    if c.branch == 2:
        return abs((a - d) * c.xi_a - (b - 1j * cc) * c.xi_b)
    raise ValueError("branch must be 1 or 2")


def split_dirac(sol: Bispinor, p: FourVector, m: float,
                tol: float = DEFAULT_TOL) -> tuple[DiracConstituent, DiracConstituent]:
    """Split a massive bispinor solution into its two branch constituents.

    Each xi component is divided between the branches according to which eta
    sources it; the branch sums reproduce the original xi components, and
    each branch closes into a three-equation system equivalent to its side's
    4x4 system.
    """
    if m <= 0:
        raise ValueError("branch definitions divide by the mass; m > 0 required")
    require_dirac_solution(sol, p, m, tol)
    a, b, c, d = p.t, p.x, p.y, p.z
    c1 = DiracConstituent(
        xi_a=(a + d) * sol.eta1 / m,
        xi_b=(b + 1j * c) * sol.eta1 / m,
        eta=sol.eta1,
        branch=1,
    )
    c2 = DiracConstituent(
        xi_a=(b - 1j * c) * sol.eta2 / m,
        xi_b=(a - d) * sol.eta2 / m,
        eta=sol.eta2,
        branch=2,
    )
    return c1, c2


def embed_dirac_constituent(c: DiracConstituent) -> np.ndarray:
    """Pad a constituent into the four-vector solving its branch's system.

    Branch 2 takes the order (xi_b, xi_a, eta, 0): the swap is what makes
    the right-side matrix rows line up, and the unswapped order does not
    solve that system.
    """
    if c.branch == 1:
        return np.array([c.xi_a, c.xi_b, c.eta, 0.0], dtype=complex)
    if c.branch == 2:
        return np.array([c.xi_b, c.xi_a, c.eta, 0.0], dtype=complex)
    raise ValueError("branch must be 1 or 2")


def reassemble(c1: DiracConstituent, c2: DiracConstituent,
               p: FourVector, m: float) -> Bispinor:
    """Sum the branch constituents back into a bispinor solution."""
    if c1.branch != 1 or c2.branch != 2:
        raise ValueError("expected a branch-1 and a branch-2 constituent, in order")
    return Bispinor(
        xi1=c1.xi_a + c2.xi_a,
        xi2=c1.xi_b + c2.xi_b,
        eta1=c1.eta,
        eta2=c2.eta,
    )


def embedded_residual(vec4, p: FourVector, m: float, side: str) -> float:
    """Residual of a padded four-vector in its side's 4x4 system."""
    vec4 = np.asarray(vec4, dtype=complex)
    return max_abs(system_matrix(p, side) @ vec4 - m * vec4)
