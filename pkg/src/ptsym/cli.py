"""
Command-line front end.

    ptsym spectrum  --a 0 --b 3 --c 5 [--format text|json|csv]
    ptsym vectors   --a 0 --b 3 --c 5
    ptsym operators --a 0 --b 3 --c 5
    ptsym verify    --a 0 --b 3 --c 5 [--tol-eq 1e-10] [--tol-ineq 1e-6]
    ptsym scan      --sweep b --from 0 --to 2 --steps 201 --a 0 --c 1

Data goes to stdout, diagnostics to stderr. Exit status: 0 ok (for verify:
every claim met its expected verdict), 1 verify mismatch, 2 usage error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys

from . import claims
from .cxmat import AntilinearOp, Mat2C, Vec2C
from .errors import ExceptionalPoint, PTSymError
from .hamiltonian import (
    HamiltonianParams,
    build_hamiltonian,
    corrected_vectors,
    legacy_vectors,
    spectrum,
)
from .scan import SWEEPABLE, scan
from .symmetry import (
    c_operator,
    cpt_operator,
    legacy_c_operator,
    parity,
    pt_operator,
    time_reversal,
)

FORMATS = ("text", "json", "csv")


# -- number formatting -------------------------------------------------------

def _num(x: float):
    """Machine output: shortest round-trip repr; None for non-finite."""
    if not math.isfinite(x):
        return None
    return x + 0.0  # drop negative zero


def _cx(z: complex) -> dict:
    return {"re": _num(z.real), "im": _num(z.imag)}


def _csvnum(x: float) -> str:
    return "" if not math.isfinite(x) else repr(x + 0.0)


def _t(x: float) -> str:
    return f"{x + 0.0:.6g}"


def _tcx(z: complex) -> str:
    re, im = z.real + 0.0, z.imag + 0.0
    sign = "-" if math.copysign(1.0, im) < 0 else "+"
    return f"{re:.6g}{sign}{abs(im):.6g}i"


def _tvec(v: Vec2C) -> str:
    return f"({_tcx(v.x0)}, {_tcx(v.x1)})"


def _tmat(m: Mat2C) -> str:
    return f"[[{_tcx(m.m00)}, {_tcx(m.m01)}], [{_tcx(m.m10)}, {_tcx(m.m11)}]]"


def _params_json(p: HamiltonianParams) -> dict:
    return {"a": _num(p.a), "b": _num(p.b), "c": _num(p.c)}


def _params_text(p: HamiltonianParams) -> str:
    return f"a = {_t(p.a)}, b = {_t(p.b)}, c = {_t(p.c)}"


def _json(obj) -> str:
    return json.dumps(obj, indent=2, allow_nan=False) + "\n"


def _csv(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _error(exc: Exception) -> dict:
    return {"error": type(exc).__name__, "message": str(exc)}


# -- commands ----------------------------------------------------------------

def cmd_spectrum(p: HamiltonianParams, fmt: str) -> str:
    sp = spectrum(p)
    if fmt == "json":
        return _json({"params": _params_json(p), "s": _cx(sp.s),
                      "e_minus": _cx(sp.e_minus), "e_plus": _cx(sp.e_plus),
                      "phase": sp.phase.value})
    if fmt == "csv":
        return _csv(
            ["a", "b", "c", "re_s", "im_s", "re_e_minus", "im_e_minus",
             "re_e_plus", "im_e_plus", "phase"],
            [[_csvnum(p.a), _csvnum(p.b), _csvnum(p.c),
              _csvnum(sp.s.real), _csvnum(sp.s.imag),
              _csvnum(sp.e_minus.real), _csvnum(sp.e_minus.imag),
              _csvnum(sp.e_plus.real), _csvnum(sp.e_plus.imag), sp.phase.value]])
    return "\n".join([
        _params_text(p),
        f"s = {_tcx(sp.s)}",
        f"E- = {_tcx(sp.e_minus)}",
        f"E+ = {_tcx(sp.e_plus)}",
        f"phase = {sp.phase.value}",
    ]) + "\n"


def _vector_families(p: HamiltonianParams):
    """(family, scalars, vectors, flags) or (family, exception)."""
    out = []
    try:
        lb = legacy_vectors(p)
        out.append(("legacy", {"r": lb.r},
                    {"psi_minus": lb.psi_minus, "psi_plus": lb.psi_plus}, {}))
    except PTSymError as exc:
        out.append(("legacy", exc))
    try:
        cb = corrected_vectors(p)
        out.append(("corrected", {"r_plus": cb.r_plus, "r_minus": cb.r_minus},
                    {"phi_minus": cb.phi_minus, "phi_plus": cb.phi_plus},
                    {"coalescent": cb.coalescent,
                     "in_paper_domain": cb.in_paper_domain}))
    except PTSymError as exc:
        out.append(("corrected", exc))
    return out


def cmd_vectors(p: HamiltonianParams, fmt: str) -> str:
    families = _vector_families(p)
    if fmt == "json":
        doc = {"params": _params_json(p)}
        for fam in families:
            if len(fam) == 2:
                doc[fam[0]] = _error(fam[1])
                continue
            name, scalars, vectors, flags = fam
            entry = {k: _cx(z) for k, z in scalars.items()}
            entry.update({k: [_cx(v.x0), _cx(v.x1)] for k, v in vectors.items()})
            entry.update(flags)
            doc[name] = entry
        return _json(doc)

    if fmt == "csv":
        rows = []
        for fam in families:
            if len(fam) == 2:
                rows.append([fam[0], "", "", "", "", type(fam[1]).__name__])
                continue
            name, scalars, vectors, flags = fam
            tags = (["coalescent"] if flags.get("coalescent") else []) + \
                ([] if flags.get("in_paper_domain", True) else ["out_of_domain"])
            status = ";".join(tags) or "ok"
            for k, z in scalars.items():
                rows.append([name, k, "", _csvnum(z.real), _csvnum(z.imag), status])
            for k, v in vectors.items():
                for i, z in enumerate(v):
                    rows.append([name, k, i, _csvnum(z.real), _csvnum(z.imag), status])
        return _csv(["family", "quantity", "index", "re", "im", "status"], rows)

    lines = [_params_text(p)]
    for fam in families:
        if len(fam) == 2:
            lines.append(f"[{fam[0]}] {type(fam[1]).__name__}: {fam[1]}")
            continue
        name, scalars, vectors, flags = fam
        lines.append(f"[{name}]")
        lines += [f"  {k} = {_tcx(z)}" for k, z in scalars.items()]
        lines += [f"  {k} = {_tvec(v)}" for k, v in vectors.items()]
        if flags.get("coalescent"):
            lines.append("  warning: exceptional point, phi+ = i*phi- (eigenvectors coalesce)")
        if flags and not flags.get("in_paper_domain"):
            lines.append("  warning: outside b > 0, c > 0; closed forms may not be eigenvectors")
    return "\n".join(lines) + "\n"


def _operators(p: HamiltonianParams):
    builders = [
        ("H", lambda: build_hamiltonian(p)),
        ("C", lambda: c_operator(p)),
        ("C_legacy", lambda: legacy_c_operator(p)),
        ("P", parity),
        ("T", time_reversal),
        ("PT", pt_operator),
        ("CPT", lambda: cpt_operator(p)),
    ]
    out = []
    for name, build in builders:
        try:
            op = build()
        except PTSymError as exc:
            out.append((name, exc))
            continue
        if isinstance(op, AntilinearOp):
            out.append((name, op.m, op.conjugates))
        else:
            out.append((name, op, False))
    return out


def _describe(exc: Exception) -> str:
    if isinstance(exc, ExceptionalPoint):
        return f"exceptional point ({exc})"
    return f"{type(exc).__name__} ({exc})"


def cmd_operators(p: HamiltonianParams, fmt: str) -> str:
    ops = _operators(p)
    if fmt == "json":
        doc = {}
        for op in ops:
            if len(op) == 2:
                doc[op[0]] = _error(op[1])
            else:
                name, m, conj = op
                doc[name] = {"matrix": [[_cx(z) for z in row] for row in m.rows()],
                             "antilinear": conj}
        return _json({"params": _params_json(p), "operators": doc})

    if fmt == "csv":
        header = ["operator", "antilinear"]
        for ij in ("00", "01", "10", "11"):
            header += [f"m{ij}_re", f"m{ij}_im"]
        header.append("status")
        rows = []
        for op in ops:
            if len(op) == 2:
                rows.append([op[0], ""] + [""] * 8 + [type(op[1]).__name__])
                continue
            name, m, conj = op
            row = [name, "true" if conj else "false"]
            for z in (m.m00, m.m01, m.m10, m.m11):
                row += [_csvnum(z.real), _csvnum(z.imag)]
            rows.append(row + ["ok"])
        return _csv(header, rows)

    lines = [_params_text(p)]
    for op in ops:
        if len(op) == 2:
            lines.append(f"{op[0]}: {_describe(op[1])}")
        else:
            name, m, conj = op
            lines.append(f"{name} = {_tmat(m)}" + (" K" if conj else ""))
    return "\n".join(lines) + "\n"


def render_battery(result: claims.BatteryResult, fmt: str) -> str:
    if fmt == "json":
        return _json({
            "params": _params_json(result.params),
            "phase": result.phase.value,
            "checks": [{"id": c.claim_id, "kind": c.kind.value,
                        "residual": _num(c.residual), "threshold": _num(c.threshold),
                        "verdict": c.verdict.value, "note": c.note}
                       for c in result.checks],
        })
    if fmt == "csv":
        return _csv(["id", "kind", "residual", "threshold", "verdict", "note"],
                    [[c.claim_id, c.kind.value, _csvnum(c.residual),
                      _csvnum(c.threshold), c.verdict.value, c.note]
                     for c in result.checks])

    lines = [_params_text(result.params), f"phase = {result.phase.value}", ""]
    lines.append(f"{'claim':<7} {'kind':<14} {'residual':>12} {'threshold':>12} "
                 f"{'verdict':<8} {'expected':<8} note")
    for c in result.checks:
        res = "-" if c.verdict is claims.Verdict.SKIPPED else _t(c.residual)
        thr = "-" if c.verdict is claims.Verdict.SKIPPED else _t(c.threshold)
        exp = claims.expected_verdict(c.claim_id).value
        lines.append(f"{c.claim_id:<7} {c.kind.value:<14} {res:>12} {thr:>12} "
                     f"{c.verdict.value:<8} {exp:<8} {c.note}")
    code = claims.battery_verdict(result)
    lines += ["", "result = " + ("expected verdicts met" if code == 0
                                 else "adjudication mismatch")]
    return "\n".join(lines) + "\n"


def cmd_verify(p: HamiltonianParams, tol_eq: float, tol_ineq: float,
               fmt: str) -> tuple[str, int]:
    result = claims.run_battery(p, tol_eq, tol_ineq)
    return render_battery(result, fmt), claims.battery_verdict(result)


SCAN_HEADER = ["param", "re_e_minus", "im_e_minus", "re_e_plus", "im_e_plus",
               "phase", "comm_residual"]


def cmd_scan(base: HamiltonianParams, sweep: str, start: float, stop: float,
             steps: int, fmt: str) -> tuple[str, list[str]]:
    """Rendered rows plus diagnostics for stderr."""
    res = scan(base, sweep, start, stop, steps)
    diagnostics = [f"exceptional point at {sweep} = {x!r}" for x in res.exceptional_points]
    if fmt == "json":
        fixed = {k: v for k, v in _params_json(base).items() if k != sweep}
        return _json({
            "sweep": sweep,
            "fixed": fixed,
            "rows": [{"param": _num(r.value),
                      "re_e_minus": _num(r.re_e_minus), "im_e_minus": _num(r.im_e_minus),
                      "re_e_plus": _num(r.re_e_plus), "im_e_plus": _num(r.im_e_plus),
                      "phase": r.phase.value, "comm_residual": _num(r.comm_residual)}
                     for r in res.rows],
            "exceptional_points": [_num(x) for x in res.exceptional_points],
        }), []
    if fmt == "csv":
        return _csv(SCAN_HEADER,
                    [[_csvnum(r.value), _csvnum(r.re_e_minus), _csvnum(r.im_e_minus),
                      _csvnum(r.re_e_plus), _csvnum(r.im_e_plus), r.phase.value,
                      _csvnum(r.comm_residual)] for r in res.rows]), diagnostics
    lines = [" ".join(f"{h:>12}" for h in SCAN_HEADER)]
    for r in res.rows:
        comm = "-" if r.comm_residual < 0 else _t(r.comm_residual)
        cells = [_t(r.value), _t(r.re_e_minus), _t(r.im_e_minus), _t(r.re_e_plus),
                 _t(r.im_e_plus), r.phase.value, comm]
        lines.append(" ".join(f"{x:>12}" for x in cells))
    if res.exceptional_points:
        lines += [""] + [f"exceptional point: {sweep} = {x:.12g}"
                         for x in res.exceptional_points]
    else:
        lines += ["", "exceptional point: none in range"]
    return "\n".join(lines) + "\n", []


# -- argument parsing --------------------------------------------------------

def _finite(text: str) -> float:
    try:
        x = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not math.isfinite(x):
        raise argparse.ArgumentTypeError(f"must be finite: {text!r}")
    return x


def _positive_tol(text: str) -> float:
    x = _finite(text)
    if x < 0:
        raise argparse.ArgumentTypeError(f"tolerance must be >= 0: {text!r}")
    return x


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ptsym",
        description="Spectra, symmetry operators and claim checks for the "
                    "2x2 PT-symmetric Hamiltonian [[a-c, ib], [ib, a+c]].")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, required=True):
        for name in ("a", "b", "c"):
            sp.add_argument(f"--{name}", type=_finite, required=required,
                            default=None)
        sp.add_argument("--format", choices=FORMATS, default="text")

    for name, help_ in [("spectrum", "eigenvalues and PT phase"),
                        ("vectors", "legacy and corrected eigenvector families"),
                        ("operators", "H, C, C_legacy, P, T, PT, CPT")]:
        common(sub.add_parser(name, help=help_))

    verify = sub.add_parser("verify", help="run the claim battery")
    common(verify)
    verify.add_argument("--tol-eq", type=_positive_tol, default=claims.DEFAULT_TOL_EQ)
    verify.add_argument("--tol-ineq", type=_positive_tol, default=claims.DEFAULT_TOL_INEQ)

    sc = sub.add_parser("scan", help="sweep one parameter across the phase diagram")
    common(sc, required=False)
    sc.add_argument("--sweep", choices=SWEEPABLE, required=True)
    sc.add_argument("--from", dest="start", type=_finite, required=True)
    sc.add_argument("--to", dest="stop", type=_finite, required=True)
    sc.add_argument("--steps", type=int, required=True)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.command == "scan":
        missing = [k for k in ("a", "b", "c")
                   if k != args.sweep and getattr(args, k) is None]
        if missing:
            parser.error("scan needs the fixed parameters: "
                         + ", ".join(f"--{k}" for k in missing))
        if args.steps < 2:
            parser.error("--steps must be >= 2")
        if not args.start < args.stop:
            parser.error("--from must be less than --to")
        values = {k: (getattr(args, k) if getattr(args, k) is not None else 0.0)
                  for k in ("a", "b", "c")}
        try:
            out, diagnostics = cmd_scan(HamiltonianParams(**values), args.sweep,
                                        args.start, args.stop, args.steps, args.format)
        except ValueError as exc:
            parser.error(str(exc))
        sys.stdout.write(out)
        for line in diagnostics:
            print(line, file=sys.stderr)
        return 0

    p = HamiltonianParams(args.a, args.b, args.c)
    if args.command == "verify":
        out, code = cmd_verify(p, args.tol_eq, args.tol_ineq, args.format)
        sys.stdout.write(out)
        return code
    render = {"spectrum": cmd_spectrum, "vectors": cmd_vectors,
              "operators": cmd_operators}[args.command]
    sys.stdout.write(render(p, args.format))
    return 0


if __name__ == "__main__":
    sys.exit(main())
