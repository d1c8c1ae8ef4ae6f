"""One-parameter sweeps of H(a, b, c) across the PT phase diagram."""
from __future__ import annotations

import math
from dataclasses import dataclass, replace

from .cxmat import commutator, frobenius_norm
from .errors import ExceptionalPoint
from .hamiltonian import HamiltonianParams, PTPhase, build_hamiltonian, spectrum
from .symmetry import c_operator

SWEEPABLE = ("a", "b", "c")
# Bisection stops once |c² − b²| is this small.
CROSSING_TOL = 1e-12
MAX_BISECTIONS = 200
# comm_residual when C is undefined on a grid point.
SKIPPED_RESIDUAL = -1.0


@dataclass(frozen=True)
class ScanRow:
    value: float
    re_e_minus: float
    im_e_minus: float
    re_e_plus: float
    im_e_plus: float
    phase: PTPhase
    comm_residual: float


@dataclass(frozen=True)
class ScanResult:
    sweep: str
    rows: tuple[ScanRow, ...]
    exceptional_points: tuple[float, ...]


def grid(start: float, stop: float, steps: int) -> list[float]:
    if steps < 2:
        raise ValueError("steps must be >= 2")
    if not (math.isfinite(start) and math.isfinite(stop)) or not start < stop:
        raise ValueError(f"need finite from < to, got {start!r}, {stop!r}")
    width = stop - start
    xs = [start + width * i / (steps - 1) for i in range(steps - 1)] + [stop]
    if any(x1 <= x0 for x0, x1 in zip(xs, xs[1:])):
        raise ValueError("range too narrow for the requested number of steps")
    return xs


def _at(base: HamiltonianParams, sweep: str, x: float) -> HamiltonianParams:
    return replace(base, **{sweep: x})


def scan_row(p: HamiltonianParams, value: float) -> ScanRow:
    sp = spectrum(p)
    try:
        comm = frobenius_norm(commutator(build_hamiltonian(p), c_operator(p)))
    except ExceptionalPoint:
        comm = SKIPPED_RESIDUAL
    return ScanRow(value, sp.e_minus.real, sp.e_minus.imag,
                   sp.e_plus.real, sp.e_plus.imag, sp.phase, comm)


def bisect_crossing(base: HamiltonianParams, sweep: str, lo: float, hi: float) -> float:
    """Root of c² − b² in [lo, hi] along ``sweep``; endpoints must differ in sign."""
    def disc(x):
        return _at(base, sweep, x).discriminant

    d_lo = disc(lo)
    mid = 0.5 * (lo + hi)
    for _ in range(MAX_BISECTIONS):
        mid = 0.5 * (lo + hi)
        d_mid = disc(mid)
        if abs(d_mid) <= CROSSING_TOL or mid in (lo, hi):
            break
        if (d_mid > 0) == (d_lo > 0):
            lo, d_lo = mid, d_mid
        else:
            hi = mid
    return mid


def scan(base: HamiltonianParams, sweep: str, start: float, stop: float,
         steps: int) -> ScanResult:
    """Spectrum, phase and ||[H, C]|| on a uniform grid, plus located crossings.

    A grid point with |c² − b²| <= CROSSING_TOL is itself reported as an
    exceptional point; a strict sign change between neighbours is refined
    by bisection.
    """
    if sweep not in SWEEPABLE:
        raise ValueError(f"sweep must be one of {SWEEPABLE}, got {sweep!r}")
    xs = grid(start, stop, steps)
    points = [_at(base, sweep, x) for x in xs]
    rows = tuple(scan_row(p, x) for p, x in zip(points, xs))

    crossings = []
    discs = [p.discriminant for p in points]
    for i, (x, d) in enumerate(zip(xs, discs)):
        if abs(d) <= CROSSING_TOL:
            crossings.append(x)
        elif i > 0 and abs(discs[i - 1]) > CROSSING_TOL and (d > 0) != (discs[i - 1] > 0):
            crossings.append(bisect_crossing(base, sweep, xs[i - 1], x))
    return ScanResult(sweep, rows, tuple(crossings))
