"""
The two-level PT-symmetric model H(a, b, c) = [[a − c, ib], [ib, a + c]].

Spectrum E∓ = a ∓ s with s the principal root of c² − b², plus the two
eigenvector families in circulation for it: the legacy pair
ψ∓ = (1, −ir), (1, −i/r) with r = (c + s)/b, and the corrected pair
φ₋ = (√R₊, −i√R₋), φ₊ = (i√R₋, √R₊) with R± = (c ± s)/(2c).

The closed forms assume b > 0, c > 0. Other real parameters are accepted,
but the results carry ``in_paper_domain = False``.
"""
from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass

from .cxmat import Mat2C, Vec2C, frobenius_norm
from .errors import DegenerateParameter, ZeroVector

# |c² − b²| at or below this fraction of b² + c² counts as the exceptional point.
EXCEPTIONAL_RTOL = 1e-14


@dataclass(frozen=True, slots=True)
class HamiltonianParams:
    a: float
    b: float
    c: float

    def __post_init__(self):
        for name in ("a", "b", "c"):
            value = getattr(self, name)
            if not math.isfinite(value):
                raise ValueError(f"parameter {name} must be finite, got {value!r}")

    @property
    def in_paper_domain(self) -> bool:
        return self.b > 0 and self.c > 0

    @property
    def discriminant(self) -> float:
        """c² − b²."""
        return self.c * self.c - self.b * self.b

    def exceptional_tol(self) -> float:
        return EXCEPTIONAL_RTOL * (self.b * self.b + self.c * self.c)


class PTPhase(enum.Enum):
    UNBROKEN = "unbroken"
    BROKEN = "broken"
    EXCEPTIONAL = "exceptional"


def classify_phase(p: HamiltonianParams, tol: float | None = None) -> PTPhase:
    if tol is None:
        tol = p.exceptional_tol()
    d = p.discriminant
    if d > tol:
        return PTPhase.UNBROKEN
    if d < -tol:
        return PTPhase.BROKEN
    return PTPhase.EXCEPTIONAL


@dataclass(frozen=True, slots=True)
class Spectrum:
    s: complex
    e_minus: complex
    e_plus: complex
    phase: PTPhase


@dataclass(frozen=True, slots=True)
class LegacyBasis:
    r: complex
    psi_minus: Vec2C
    psi_plus: Vec2C


@dataclass(frozen=True, slots=True)
class CorrectedBasis:
    r_plus: complex
    r_minus: complex
    phi_minus: Vec2C
    phi_plus: Vec2C
    # s ~ 0: phi_plus = i * phi_minus, the pair no longer spans C².
    coalescent: bool = False
    in_paper_domain: bool = True


def build_hamiltonian(p: HamiltonianParams) -> Mat2C:
    return Mat2C(complex(p.a - p.c), complex(0.0, p.b),
                 complex(0.0, p.b), complex(p.a + p.c))


def discriminant_root(p: HamiltonianParams) -> complex:
    # complex(x) keeps a +0.0 imaginary part, so negative x lands on +i·√|x|
    return cmath.sqrt(complex(p.discriminant))


def spectrum(p: HamiltonianParams, tol: float | None = None) -> Spectrum:
    """E∓ = a ∓ s, tagged with the PT phase.

    ``tol`` is the absolute band on c² − b² classified as exceptional;
    by default it is ``EXCEPTIONAL_RTOL * (b² + c²)``.
    """
    s = discriminant_root(p)
    return Spectrum(s=s, e_minus=p.a - s, e_plus=p.a + s,
                    phase=classify_phase(p, tol))


def legacy_vectors(p: HamiltonianParams) -> LegacyBasis:
    if p.b == 0:
        raise DegenerateParameter("legacy vectors need b != 0 (r = (c + s)/b)")
    s = discriminant_root(p)
    # (c + s)(c − s) = b², so b/(c − s) is the same r without the cancellation
    if abs(p.c + s) >= abs(p.c - s):
        r = (p.c + s) / p.b
    else:
        r = p.b / (p.c - s)
    if r == 0:
        raise DegenerateParameter("r underflows to zero")
    if not cmath.isfinite(r):
        raise DegenerateParameter("r overflows")
    return LegacyBasis(r=r,
                       psi_minus=Vec2C(1 + 0j, -1j * r),
                       psi_plus=Vec2C(1 + 0j, -1j / r))


def corrected_vectors(p: HamiltonianParams) -> CorrectedBasis:
    if p.c == 0:
        raise DegenerateParameter("corrected vectors need c != 0 (R± = (c ± s)/2c)")
    s = discriminant_root(p)
    r_plus = (p.c + s) / (2 * p.c)
    r_minus = (p.c - s) / (2 * p.c)
    sp, sm = cmath.sqrt(r_plus), cmath.sqrt(r_minus)
    return CorrectedBasis(
        r_plus=r_plus,
        r_minus=r_minus,
        phi_minus=Vec2C(sp, -1j * sm),
        phi_plus=Vec2C(1j * sm, sp),
        coalescent=classify_phase(p) is PTPhase.EXCEPTIONAL,
        in_paper_domain=p.in_paper_domain,
    )


def eigen_residual(h: Mat2C, v: Vec2C, lam: complex) -> float:
    """||Hv − λv|| / ||v||."""
    n = v.norm()
    if n == 0.0:
        raise ZeroVector("eigen residual of the zero vector is undefined")
    return (h @ v - lam * v).norm() / n


def scaled_tol(h: Mat2C, tol: float) -> float:
    return tol * (1.0 + frobenius_norm(h))
