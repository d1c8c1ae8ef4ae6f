"""Two-level PT-symmetric Hamiltonian toolkit and claim checker."""
from .cxmat import AntilinearOp, Mat2C, Vec2C, apply_antilinear, commutator, eigen_oracle, frobenius_norm
from .errors import (
    DegenerateParameter,
    ExceptionalPoint,
    PTSymError,
    SingularMatrix,
    SingularSum,
    ZeroVector,
)
from .hamiltonian import (
    CorrectedBasis,
    HamiltonianParams,
    LegacyBasis,
    PTPhase,
    Spectrum,
    build_hamiltonian,
    corrected_vectors,
    discriminant_root,
    eigen_residual,
    legacy_vectors,
    spectrum,
)
from .symmetry import (
    ConjugationConvention,
    InvolutionReport,
    c_operator,
    completeness_sum,
    cpt_operator,
    involution_check,
    legacy_c_operator,
    parity,
    pseudo_hermiticity_residual,
    pt_operator,
    reconstruct_parity,
    time_reversal,
)
from .claims import BatteryResult, CheckReport, battery_verdict, run_battery

__version__ = "0.1.0"
