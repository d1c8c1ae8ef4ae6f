import pytest

from ptsym.hamiltonian import HamiltonianParams, PTPhase
from ptsym.scan import SKIPPED_RESIDUAL, bisect_crossing, grid, scan


def test_grid_uniform_and_inclusive():
    xs = grid(0.0, 2.0, 201)
    assert len(xs) == 201 and xs[0] == 0.0 and xs[-1] == 2.0
    assert all(b > a for a, b in zip(xs, xs[1:]))
    assert xs[100] == 1.0


@pytest.mark.parametrize("start, stop, steps", [(0, 1, 1), (1, 0, 5), (1, 1, 5)])
def test_grid_rejects_bad_ranges(start, stop, steps):
    with pytest.raises(ValueError):
        grid(start, stop, steps)


def test_scan_b_finds_exceptional_point():
    res = scan(HamiltonianParams(0, 0, 1), "b", 0.0, 2.0, 201)
    assert len(res.rows) == 201
    assert len(res.exceptional_points) == 1
    assert res.exceptional_points[0] == pytest.approx(1.0, abs=1e-9)
    for row in res.rows:
        if row.value < 1:
            assert row.im_e_plus == 0 and row.phase is PTPhase.UNBROKEN
        elif row.value > 1:
            assert row.im_e_plus > 0 and row.phase is PTPhase.BROKEN
        else:
            assert row.phase is PTPhase.EXCEPTIONAL
            assert row.comm_residual == SKIPPED_RESIDUAL


def test_scan_bisects_between_grid_points():
    res = scan(HamiltonianParams(0, 0, 1), "b", 0.0, 2.0, 200)
    assert 1.0 not in [r.value for r in res.rows]
    (x,) = res.exceptional_points
    assert abs(1 - x * x) <= 1e-12


def test_scan_symmetric_range_finds_both_crossings():
    res = scan(HamiltonianParams(0, 0, 1.5), "b", -3.0, 3.0, 50)
    assert [round(x, 9) for x in res.exceptional_points] == [-1.5, 1.5]


def test_scan_over_c():
    res = scan(HamiltonianParams(0.5, 2.0, 0), "c", 0.5, 4.0, 33)
    (x,) = res.exceptional_points
    assert x == pytest.approx(2.0, abs=1e-9)


def test_scan_a_never_changes_phase():
    res = scan(HamiltonianParams(0, 3, 5), "a", -10.0, 10.0, 41)
    assert res.exceptional_points == ()
    for row in res.rows:
        assert row.phase is PTPhase.UNBROKEN
        assert 0 <= row.comm_residual <= 1e-12


def test_bisect_direct():
    x = bisect_crossing(HamiltonianParams(0, 0, 3), "b", 2.0, 4.5)
    assert abs(9 - x * x) <= 1e-12


def test_scan_rejects_unknown_parameter():
    with pytest.raises(ValueError):
        scan(HamiltonianParams(0, 0, 1), "d", 0, 1, 3)
