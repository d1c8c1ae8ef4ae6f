import math

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from ptsym.cxmat import Mat2C, Vec2C, commutator, frobenius_norm
from ptsym.errors import DegenerateParameter, ExceptionalPoint, SingularMatrix, SingularSum
from ptsym.hamiltonian import (
    CorrectedBasis,
    HamiltonianParams,
    build_hamiltonian,
    corrected_vectors,
    legacy_vectors,
)
from ptsym.symmetry import (
    ConjugationConvention,
    antilinearity_residual,
    c_operator,
    completeness_sum,
    cpt_invariance_residual,
    cpt_operator,
    involution_check,
    legacy_c_operator,
    parity,
    pseudo_hermiticity_residual,
    pt_invariance_residual,
    pt_operator,
    reconstruct_parity,
    time_reversal,
)

HERM, TRANS = ConjugationConvention.HERMITIAN, ConjugationConvention.TRANSPOSE

real = st.floats(min_value=-10, max_value=10, allow_nan=False)
positive = st.floats(min_value=1e-3, max_value=10, allow_nan=False)
vectors = st.builds(Vec2C, st.complex_numbers(max_magnitude=10), st.complex_numbers(max_magnitude=10))


def close(x: Mat2C, rows, tol=1e-13):
    return frobenius_norm(x - Mat2C.from_rows(rows)) <= tol


@st.composite
def off_exceptional(draw):
    a, b, c = draw(real), draw(real), draw(real)
    p = HamiltonianParams(a, b, c)
    assume(abs(c * c - b * b) > 1e-6 * (1 + b * b + c * c))
    return p


# -- C operators --------------------------------------------------------------

def test_c_operator_unbroken():
    c = c_operator(HamiltonianParams(0, 3, 5))
    assert close(c, [[1.25, -0.75j], [-0.75j, -1.25]], 0)


def test_c_operator_broken():
    # 1/(4i) = -i/4
    c = c_operator(HamiltonianParams(0, 5, 3))
    assert close(c, [[-0.75j, -1.25], [-1.25, 0.75j]], 1e-15)


def test_c_operator_exceptional():
    with pytest.raises(ExceptionalPoint):
        c_operator(HamiltonianParams(0, 2, 2))


def test_legacy_c_operator():
    cz = legacy_c_operator(HamiltonianParams(0, 3, 5))
    assert close(cz, [[0, -1j / 3], [3j, 0]], 1e-15)
    assert close(cz @ cz, [[1, 0], [0, 1]], 1e-15)


def test_legacy_c_needs_b():
    with pytest.raises(DegenerateParameter):
        legacy_c_operator(HamiltonianParams(0, 0, 5))


@given(off_exceptional())
def test_c_commutes_with_h(p):
    h, c = build_hamiltonian(p), c_operator(p)
    bound = 1e-12 * (1 + frobenius_norm(h)) * (1 + frobenius_norm(c))
    assert frobenius_norm(commutator(h, c)) <= bound


@given(off_exceptional())
def test_c_is_involution(p):
    rep = involution_check(c_operator(p))
    # C² = (c² − b²)/s² · I; rounding grows with ||C||²
    assert rep.square_residual <= 1e-12 * (1 + frobenius_norm(c_operator(p)) ** 2)
    assert rep.eigenvalues[0] == pytest.approx(-1, abs=1e-10)
    assert rep.eigenvalues[1] == pytest.approx(1, abs=1e-10)


@given(real, real.filter(lambda x: abs(x) > 1e-3), real.filter(lambda x: abs(x) > 1e-3))
def test_legacy_commutator_closed_form(a, b, c):
    p = HamiltonianParams(a, b, c)
    r = legacy_vectors(p).r
    comm = commutator(build_hamiltonian(p), legacy_c_operator(p))
    expected = Mat2C(-b * (r + 1 / r), 2j * c / r, 2j * c * r, b * (r + 1 / r))
    assert frobenius_norm(comm - expected) <= 1e-12 * (1 + frobenius_norm(expected))
    assert frobenius_norm(comm) > 0


def test_legacy_commutator_vanishes_at_c_zero():
    p = HamiltonianParams(0, 3, 0)
    assert frobenius_norm(commutator(build_hamiltonian(p), legacy_c_operator(p))) <= 1e-14


@given(real, positive, positive)
def test_c_grades_corrected_basis(a, b, c):
    assume(abs(b - c) > 1e-3)
    p = HamiltonianParams(a, b, c)
    cop, cb = c_operator(p), corrected_vectors(p)
    tol = 1e-12 * (1 + frobenius_norm(cop))
    assert (cop @ cb.phi_minus - cb.phi_minus).norm() <= tol
    assert (cop @ cb.phi_plus + cb.phi_plus).norm() <= tol


# -- P, T, PT, CPT -----------------------------------------------------------

def test_parity():
    p = parity()
    assert p @ p == Mat2C.identity()
    h = build_hamiltonian(HamiltonianParams(0, 3, 5))
    assert p @ h @ p == Mat2C.from_rows([[-5, -3j], [-3j, 5]]) == h.dagger()
    assert p @ h.conj() @ p == h


def test_time_reversal():
    t = time_reversal()
    assert t.m == Mat2C.identity() and t.conjugates
    assert t(Vec2C(0, 1j)) == Vec2C(0, -1j)


@given(vectors)
def test_time_reversal_squares_to_one(v):
    t = time_reversal()
    assert t(t(v)) == v
    assert antilinearity_residual(t, v) == 0


def test_pt_operator():
    pt = pt_operator()
    assert pt.m == parity() and pt.conjugates
    assert pt.compose(pt).m == Mat2C.identity()
    cb = corrected_vectors(HamiltonianParams(0, 3, 5))
    assert (pt(cb.phi_plus) - cb.phi_plus).norm() == 0


@given(real, real, real, vectors)
def test_structure_identities(a, b, c, v):
    h = build_hamiltonian(HamiltonianParams(a, b, c))
    pt, t, p = pt_operator(), time_reversal(), parity()
    assert frobenius_norm(p @ p - Mat2C.identity()) <= 1e-13
    assert (t(t(v)) - v).norm() <= 1e-13 * (1 + v.norm())
    assert (pt(pt(v)) - v).norm() <= 1e-13 * (1 + v.norm())
    assert pseudo_hermiticity_residual(h, p) <= 1e-13
    assert pt_invariance_residual(h) <= 1e-13


@given(off_exceptional())
def test_cpt_invariance(p):
    h = build_hamiltonian(p)
    # C P conj(H) (C P)^-1 loses accuracy like cond(C) = ||C||² near c² = b²
    cond = (1 + frobenius_norm(c_operator(p))) ** 2
    assert cpt_invariance_residual(p, h) <= 1e-13 * (1 + frobenius_norm(h)) * cond


def test_cpt_operator_unbroken():
    p = HamiltonianParams(0, 3, 5)
    cpt = cpt_operator(p)
    assert cpt.m == c_operator(p) @ parity() and cpt.conjugates
    assert cpt_invariance_residual(p, build_hamiltonian(p)) <= 1e-13
    v = Vec2C(0.3 - 1j, 2 + 0.5j)
    assert (cpt(cpt(v)) - v).norm() <= 1e-14


def test_cpt_exceptional():
    with pytest.raises(ExceptionalPoint):
        cpt_operator(HamiltonianParams(0, 2, 2))


# -- completeness sum and parity reconstruction -------------------------------

def test_completeness_sum_axis_vectors():
    basis = CorrectedBasis(1, 0, Vec2C(1, 0), Vec2C(0, 1))
    assert completeness_sum(basis, HERM) == Mat2C.identity()


def test_completeness_sum_conventions():
    basis = corrected_vectors(HamiltonianParams(0, 3, 5))
    # off-diagonal 2i√(R₊R₋) = ib/c; transpose gives (R₊ − R₋)·I = (s/c)·I
    assert close(completeness_sum(basis, HERM), [[1, 0.6j], [-0.6j, 1]], 1e-15)
    assert close(completeness_sum(basis, TRANS), [[0.8, 0], [0, 0.8]], 1e-15)


def test_reconstruct_parity_hermitian():
    # (c²/s³)[[c + b²/c, −2ib], [−2ib, −c − b²/c]] at c=5, b=3, s=4
    m, residual = reconstruct_parity(HamiltonianParams(0, 3, 5), HERM)
    assert close(m, [[2.65625, -2.34375j], [-2.34375j, -2.65625]], 1e-12)
    assert residual > 1


def test_reconstruct_parity_transpose():
    m, residual = reconstruct_parity(HamiltonianParams(0, 3, 5), TRANS)
    assert close(m, [[25 / 16, -15j / 16], [-15j / 16, -25 / 16]], 1e-14)
    assert residual > 0


@pytest.mark.parametrize("conv", [HERM, TRANS])
def test_reconstruct_parity_singular_at_coalescence(conv):
    with pytest.raises(SingularSum):
        reconstruct_parity(HamiltonianParams(0, 2, 2), conv)


def test_hermitian_sum_determinant():
    # det = 1 − b²/c²
    for b in (0.5, 1.9, 1.999):
        total = completeness_sum(corrected_vectors(HamiltonianParams(0, b, 2)), HERM)
        assert total.det() == pytest.approx(1 - b * b / 4, abs=1e-14)


# -- involution / pseudo-Hermiticity -------------------------------------------

def test_involution_examples():
    rep = involution_check(c_operator(HamiltonianParams(0, 3, 5)))
    assert rep.square_residual <= 1e-14
    assert rep.eigenvalues == pytest.approx((-1, 1))
    rep = involution_check(parity())
    assert rep.square_residual == 0 and rep.eigenvalues == (-1, 1)
    rep = involution_check(Mat2C.identity() * 2)
    assert rep.square_residual == pytest.approx(3 * math.sqrt(2))
    assert rep.eigenvalues == (2, 2)


def test_pseudo_hermiticity_examples():
    assert pseudo_hermiticity_residual(build_hamiltonian(HamiltonianParams(0, 3, 5)), parity()) <= 1e-14
    assert pseudo_hermiticity_residual(build_hamiltonian(HamiltonianParams(1, 3, 5)), parity()) <= 1e-14
    h = build_hamiltonian(HamiltonianParams(0, 3, 5))
    assert pseudo_hermiticity_residual(h, Mat2C.identity()) == pytest.approx(6 * math.sqrt(2))


def test_pseudo_hermiticity_singular_metric():
    with pytest.raises(SingularMatrix):
        pseudo_hermiticity_residual(Mat2C.identity(), Mat2C.diag(1, 0))
