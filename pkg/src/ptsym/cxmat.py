"""
Fixed-size complex linear algebra: 2-vectors, 2x2 matrices and antilinear maps.

Scalars are plain Python ``complex``. Everything is immutable and closed
form, so no numpy is needed; the eigen solver here works from trace and
determinant only and is used as an independent check on the model's
analytic spectrum.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import NamedTuple

from .errors import SingularMatrix, ZeroVector

# Coalescence test for eigen_oracle, relative to 1 + ||A||.
DEFECTIVE_TOL = 1e-9
# Real parts this close (relative) are ordered by imaginary part.
ORDER_RTOL = 1e-12


@dataclass(frozen=True, slots=True)
class Vec2C:
    x0: complex
    x1: complex

    def __add__(self, other: Vec2C) -> Vec2C:
        return Vec2C(self.x0 + other.x0, self.x1 + other.x1)

    def __sub__(self, other: Vec2C) -> Vec2C:
        return Vec2C(self.x0 - other.x0, self.x1 - other.x1)

    def __mul__(self, alpha: complex) -> Vec2C:
        return Vec2C(alpha * self.x0, alpha * self.x1)

    __rmul__ = __mul__

    def __neg__(self) -> Vec2C:
        return Vec2C(-self.x0, -self.x1)

    def __iter__(self):
        yield self.x0
        yield self.x1

    def conj(self) -> Vec2C:
        return Vec2C(self.x0.conjugate(), self.x1.conjugate())

    def norm(self) -> float:
        return math.hypot(abs(self.x0), abs(self.x1))

    def vdot(self, other: Vec2C) -> complex:
        """Hermitian inner product, conjugate-linear in ``self``."""
        return self.x0.conjugate() * other.x0 + self.x1.conjugate() * other.x1

    def normalized(self) -> Vec2C:
        n = self.norm()
        if n == 0.0:
            raise ZeroVector("cannot normalize the zero vector")
        return Vec2C(self.x0 / n, self.x1 / n)


@dataclass(frozen=True, slots=True)
class Mat2C:
    m00: complex
    m01: complex
    m10: complex
    m11: complex

    @classmethod
    def from_rows(cls, rows) -> Mat2C:
        (m00, m01), (m10, m11) = rows
        return cls(complex(m00), complex(m01), complex(m10), complex(m11))

    @classmethod
    def identity(cls) -> Mat2C:
        return cls(1 + 0j, 0j, 0j, 1 + 0j)

    @classmethod
    def zeros(cls) -> Mat2C:
        return cls(0j, 0j, 0j, 0j)

    @classmethod
    def diag(cls, d0: complex, d1: complex) -> Mat2C:
        return cls(complex(d0), 0j, 0j, complex(d1))

    def rows(self) -> list[list[complex]]:
        return [[self.m00, self.m01], [self.m10, self.m11]]

    def __add__(self, other: Mat2C) -> Mat2C:
        return Mat2C(self.m00 + other.m00, self.m01 + other.m01,
                     self.m10 + other.m10, self.m11 + other.m11)

    def __sub__(self, other: Mat2C) -> Mat2C:
        return Mat2C(self.m00 - other.m00, self.m01 - other.m01,
                     self.m10 - other.m10, self.m11 - other.m11)

    def __neg__(self) -> Mat2C:
        return Mat2C(-self.m00, -self.m01, -self.m10, -self.m11)

    def __mul__(self, alpha: complex) -> Mat2C:
        return Mat2C(alpha * self.m00, alpha * self.m01,
                     alpha * self.m10, alpha * self.m11)

    __rmul__ = __mul__

    def __matmul__(self, other):
        if isinstance(other, Vec2C):
            return Vec2C(self.m00 * other.x0 + self.m01 * other.x1,
                         self.m10 * other.x0 + self.m11 * other.x1)
        if isinstance(other, Mat2C):
            return Mat2C(
                self.m00 * other.m00 + self.m01 * other.m10,
                self.m00 * other.m01 + self.m01 * other.m11,
                self.m10 * other.m00 + self.m11 * other.m10,
                self.m10 * other.m01 + self.m11 * other.m11,
            )
        return NotImplemented

    def conj(self) -> Mat2C:
        return Mat2C(self.m00.conjugate(), self.m01.conjugate(),
                     self.m10.conjugate(), self.m11.conjugate())

    def transpose(self) -> Mat2C:
        return Mat2C(self.m00, self.m10, self.m01, self.m11)

    def dagger(self) -> Mat2C:
        return Mat2C(self.m00.conjugate(), self.m10.conjugate(),
                     self.m01.conjugate(), self.m11.conjugate())

    def trace(self) -> complex:
        return self.m00 + self.m11

    def det(self) -> complex:
        return self.m00 * self.m11 - self.m01 * self.m10

    def inv(self, tol: float = 0.0) -> Mat2C:
        d = self.det()
        if abs(d) <= tol:
            raise SingularMatrix(f"determinant {d} is not invertible")
        return Mat2C(self.m11 / d, -self.m01 / d, -self.m10 / d, self.m00 / d)

    def norm(self) -> float:
        return frobenius_norm(self)


def outer(u: Vec2C, v: Vec2C) -> Mat2C:
    """u vᵀ, no conjugation."""
    return Mat2C(u.x0 * v.x0, u.x0 * v.x1, u.x1 * v.x0, u.x1 * v.x1)


def commutator(a: Mat2C, b: Mat2C) -> Mat2C:
    return a @ b - b @ a


def frobenius_norm(a: Mat2C) -> float:
    return math.hypot(abs(a.m00), abs(a.m01), abs(a.m10), abs(a.m11))


class Eigen(NamedTuple):
    lambda1: complex
    v1: Vec2C
    lambda2: complex
    v2: Vec2C
    defective: bool


def _kernel_vector(a: Mat2C, lam: complex, fallback: Vec2C) -> Vec2C:
    # kernel of the 2x2 singular matrix a - lam*I from its heavier row
    p0, q0 = a.m00 - lam, a.m01
    p1, q1 = a.m10, a.m11 - lam
    n0 = abs(p0) ** 2 + abs(q0) ** 2
    n1 = abs(p1) ** 2 + abs(q1) ** 2
    p, q = (p0, q0) if n0 >= n1 else (p1, q1)
    if p == 0 and q == 0:
        return fallback
    return Vec2C(q, -p).normalized()


def _ordered(l1: complex, l2: complex) -> tuple[complex, complex]:
    # (re, im) ascending; real parts within rounding of each other count as
    # equal so conjugate pairs always come out as (re - i|im|, re + i|im|)
    tie = ORDER_RTOL * (1.0 + max(abs(l1), abs(l2)))
    if abs(l1.real - l2.real) <= tie:
        return (l1, l2) if l1.imag <= l2.imag else (l2, l1)
    return (l1, l2) if l1.real < l2.real else (l2, l1)


def eigen_oracle(a: Mat2C) -> Eigen:
    """Eigenpairs of a 2x2 complex matrix from its characteristic polynomial.

    Roots of λ² − tr·λ + det come from the quadratic formula, with the
    smaller root recovered as det/λ_big to avoid cancellation. Each
    eigenvector is a unit kernel vector of (A − λI) taken from the row of
    larger norm. Eigenvalues are ordered by (real, imag) ascending, with
    real parts equal up to rounding treated as ties.
    ``defective`` is set when the roots coincide and so do the vectors.
    """
    half_tr = 0.5 * a.trace()
    half_diff = 0.5 * (a.m00 - a.m11)
    root = cmath.sqrt(half_diff * half_diff + a.m01 * a.m10)
    if (half_tr.conjugate() * root).real < 0:
        root = -root
    big = half_tr + root
    small = a.det() / big if big != 0 else half_tr - root
    l1, l2 = _ordered(big, small)

    e0, e1 = Vec2C(1 + 0j, 0j), Vec2C(0j, 1 + 0j)
    v1 = _kernel_vector(a, l1, e0)
    v2 = _kernel_vector(a, l2, e1)

    scale = 1.0 + frobenius_norm(a)
    defective = (abs(l1 - l2) <= DEFECTIVE_TOL * scale
                 and abs(v1.vdot(v2)) > 1.0 - DEFECTIVE_TOL)
    return Eigen(l1, v1, l2, v2, defective)


@dataclass(frozen=True, slots=True)
class AntilinearOp:
    """v -> m @ conj(v) when ``conjugates`` is set, else the linear map m @ v."""

    m: Mat2C
    conjugates: bool = True

    def __call__(self, v: Vec2C) -> Vec2C:
        return apply_antilinear(self, v)

    def compose(self, other: AntilinearOp) -> AntilinearOp:
        """self ∘ other."""
        m = self.m @ (other.m.conj() if self.conjugates else other.m)
        return AntilinearOp(m, self.conjugates != other.conjugates)

    def inverse(self) -> AntilinearOp:
        # (M K)^-1 = K M^-1 = conj(M^-1) K
        minv = self.m.inv()
        return AntilinearOp(minv.conj() if self.conjugates else minv,
                            self.conjugates)

    def conjugate_by(self, h: Mat2C) -> Mat2C:
        """Matrix of the linear map U h U⁻¹."""
        inner = h.conj() if self.conjugates else h
        return self.m @ inner @ self.m.inv()


def apply_antilinear(op: AntilinearOp, v: Vec2C) -> Vec2C:
    return op.m @ (v.conj() if op.conjugates else v)
