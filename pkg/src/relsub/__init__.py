"""Plane-wave solution spaces and subsolution cross-checks for first-order
relativistic wave equations (spin 0, 1/2 and 1)."""

from .errors import NotASolutionError, OffShellError
from .linalg import (
    DEFAULT_TOL,
    NullSpaceResult,
    matmul,
    null_space,
    realify_antilinear,
)
from .minkowski import (
    FourVector,
    MomentumSpinor,
    half_pairing,
    minkowski_square,
    spinor_pairing,
    spinor_to_vector,
    vector_to_spinor,
)
from .dirac import (
    Bispinor,
    GammaRep,
    PlaneWaveSuperposition,
    build_gamma_spinor,
    charge_conjugate,
    chiral_project,
    dirac_operator,
    dirac_solutions,
    majorana_solutions,
    second_order_residual,
    weyl_residual,
)
from .dkp import (
    BetaRep,
    DKPVector5,
    DKPVector10,
    build_beta_spin0,
    build_beta_spin1,
    dkp_operator,
    dkp_solutions,
    klein_gordon_residual,
)
from .subsolutions import (
    DiracConstituent,
    ScalarTriple,
    embed_dirac_constituent,
    embed_dkp_triple,
    reassemble,
    split_dirac,
    split_dkp_spin0,
)
from .susy import (
    DiagonalProjector,
    build_p4_from_gammas,
    build_projector,
    decompose_susy,
    susy_cross_check,
    susy_operator,
    susy_solutions,
)
from .lorentz import (
    LorentzTransform,
    make_boost,
    make_rotation,
    p4_commutation_residual,
    transform_dirac_solution,
    transform_susy_solution,
)
from .suites import SUITE_NAMES, SuiteReport, TOOL_VERSION, run_suite

__version__ = TOOL_VERSION

__all__ = [
    "Bispinor",
    "BetaRep",
    "DEFAULT_TOL",
    "DKPVector10",
    "DKPVector5",
    "DiagonalProjector",
    "DiracConstituent",
    "FourVector",
    "GammaRep",
    "LorentzTransform",
    "MomentumSpinor",
    "NotASolutionError",
    "NullSpaceResult",
    "OffShellError",
    "PlaneWaveSuperposition",
    "SUITE_NAMES",
    "ScalarTriple",
    "SuiteReport",
    "TOOL_VERSION",
    "build_beta_spin0",
    "build_beta_spin1",
    "build_gamma_spinor",
    "build_p4_from_gammas",
    "build_projector",
    "charge_conjugate",
    "chiral_project",
    "decompose_susy",
    "dirac_operator",
    "dirac_solutions",
    "dkp_operator",
    "dkp_solutions",
    "embed_dirac_constituent",
    "embed_dkp_triple",
    "half_pairing",
    "klein_gordon_residual",
    "majorana_solutions",
    "make_boost",
    "make_rotation",
    "matmul",
    "minkowski_square",
    "null_space",
    "p4_commutation_residual",
    "realify_antilinear",
    "reassemble",
    "run_suite",
    "second_order_residual",
    "spinor_pairing",
    "spinor_to_vector",
    "split_dirac",
    "split_dkp_spin0",
    "susy_cross_check",
    "susy_operator",
    "susy_solutions",
    "transform_dirac_solution",
    "transform_susy_solution",
    "vector_to_spinor",
    "weyl_residual",
]
