"""
C, P, T, PT and CPT operators for H(a, b, c), and the structural checks on them.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

from .cxmat import AntilinearOp, Mat2C, Vec2C, eigen_oracle, frobenius_norm, outer
from .errors import DegenerateParameter, ExceptionalPoint, SingularSum
from .hamiltonian import (
    CorrectedBasis,
    HamiltonianParams,
    PTPhase,
    classify_phase,
    corrected_vectors,
    discriminant_root,
    legacy_vectors,
)

SINGULAR_SUM_TOL = 1e-14


class ConjugationConvention(enum.Enum):
    """How the bra ⟨φ| is formed from a ket |φ⟩."""

    HERMITIAN = "hermitian"
    TRANSPOSE = "transpose"


@dataclass(frozen=True, slots=True)
class InvolutionReport:
    square_residual: float
    eigenvalues: tuple[complex, complex]


def c_operator(p: HamiltonianParams) -> Mat2C:
    """(1/s) [[c, −ib], [−ib, −c]], s = √(c² − b²)."""
    if classify_phase(p) is PTPhase.EXCEPTIONAL:
        raise ExceptionalPoint(
            f"C diverges at c² = b² (b={p.b!r}, c={p.c!r})")
    s = discriminant_root(p)
    return Mat2C(p.c / s, complex(0.0, -p.b) / s,
                 complex(0.0, -p.b) / s, -p.c / s)


def legacy_c_operator(p: HamiltonianParams) -> Mat2C:
    """[[0, −i/r], [ir, 0]] built on the legacy r = (c + s)/b."""
    r = legacy_vectors(p).r
    if r == 0:
        raise DegenerateParameter("legacy C needs r != 0")
    return Mat2C(0j, -1j / r, 1j * r, 0j)


def parity() -> Mat2C:
    return Mat2C.diag(-1, 1)


def time_reversal() -> AntilinearOp:
    """Plain complex conjugation K: the identity-matrix solution of T = M·K."""
    return AntilinearOp(Mat2C.identity(), conjugates=True)


def pt_operator() -> AntilinearOp:
    return AntilinearOp(parity(), conjugates=False).compose(time_reversal())


def cpt_operator(p: HamiltonianParams) -> AntilinearOp:
    c = AntilinearOp(c_operator(p), conjugates=False)
    return c.compose(pt_operator())


def completeness_sum(basis: CorrectedBasis, conv: ConjugationConvention) -> Mat2C:
    """|φ₋⟩⟨φ₋| + |φ₊⟩⟨φ₊| with the bra formed per ``conv``."""
    total = Mat2C.zeros()
    for ket in (basis.phi_minus, basis.phi_plus):
        bra = ket.conj() if conv is ConjugationConvention.HERMITIAN else ket
        total = total + outer(ket, bra)
    return total


def reconstruct_parity(p: HamiltonianParams,
                       conv: ConjugationConvention) -> tuple[Mat2C, float]:
    """C · (Σ|φ⟩⟨φ|)⁻¹ and its distance from diag(−1, 1).

    Raises SingularSum before touching C, so the coalescing basis at
    c² = b² reports the singular sum rather than the divergent C.
    """
    total = completeness_sum(corrected_vectors(p), conv)
    if abs(total.det()) <= SINGULAR_SUM_TOL:
        raise SingularSum(f"completeness sum is singular (det={total.det()})")
    rebuilt = c_operator(p) @ total.inv()
    return rebuilt, frobenius_norm(rebuilt - parity())


def involution_check(x: Mat2C) -> InvolutionReport:
    eig = eigen_oracle(x)
    return InvolutionReport(
        square_residual=frobenius_norm(x @ x - Mat2C.identity()),
        eigenvalues=(eig.lambda1, eig.lambda2),
    )


def pseudo_hermiticity_residual(h: Mat2C, eta: Mat2C) -> float:
    """||η H η⁻¹ − H†||."""
    return frobenius_norm(eta @ h @ eta.inv() - h.dagger())


def pt_invariance_residual(h: Mat2C) -> float:
    """||P conj(H) P − H||."""
    return frobenius_norm(pt_operator().conjugate_by(h) - h)


def cpt_invariance_residual(p: HamiltonianParams, h: Mat2C) -> float:
    """||(CPT) H (CPT)⁻¹ − H||."""
    return frobenius_norm(cpt_operator(p).conjugate_by(h) - h)


def antilinearity_residual(t: AntilinearOp, v: Vec2C) -> float:
    """||T(−i v) − i T(v)||, zero for any map of the form M·K."""
    return (t(-1j * v) - 1j * t(v)).norm()
