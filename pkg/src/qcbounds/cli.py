"""Command-line interface.

Exit codes: 0 success, 2 bad input, 3 numerical failure, 4 I/O failure on output.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from . import isotropic
from .errors import StateError, SvdFailure
from .maps import ppt_norm, realign_norm
from .qconcurrence import bound_report, critical_s, prior_from_norms, theorem1_from_norms
from .separability import detect, is_entangled
from .stateio import as_density, dumps_state, load_state, save_state
from .states import BipartiteDims, random_density

EXIT_OK, EXIT_INPUT, EXIT_NUMERIC, EXIT_IO = 0, 2, 3, 4


class InputError(Exception):
    pass


class OutputError(Exception):
    pass


def _fmt(x) -> str:
    if x is None:
        return ""
    return f"{x:.12g}"


def _threads() -> int:
    raw = os.environ.get("QC_THREADS")
    if raw is None:
        return min(4, os.cpu_count() or 1)
    try:
        n = int(raw)
    except ValueError:
        raise InputError(f"QC_THREADS must be a positive integer, got {raw!r}") from None
    if n < 1:
        raise InputError(f"QC_THREADS must be a positive integer, got {raw!r}")
    return n


def _read_state(path):
    try:
        return as_density(load_state(path))
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror or exc}") from None
    except StateError as exc:
        raise InputError(f"{path}: {exc}") from None


def _emit(text: str, out_path) -> None:
    if out_path is None or out_path == "-":
        sys.stdout.write(text)
        return
    try:
        with open(out_path, "w", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise OutputError(f"cannot write {out_path}: {exc.strerror or exc}") from None


def _check_q(q):
    if not (math.isfinite(q) and q >= 2):
        raise InputError(f"q must be >= 2, got {q}")


def cmd_analyze(args) -> int:
    _check_q(args.q)
    if args.iterations < 0:
        raise InputError("iterations must be >= 0")
    rho = _read_state(args.input)
    verdicts = detect(rho)
    report = bound_report(rho, args.q, args.iterations, args.seed)
    if args.json:
        payload = {
            "dims": {"dA": rho.dims.dA, "dB": rho.dims.dB},
            "entangled": is_entangled(verdicts),
            "verdicts": [v.to_dict() for v in verdicts],
            "report": report.to_dict(),
        }
        print(json.dumps(payload, indent=2))
        return EXIT_OK
    print(f"dims: {rho.dims} (d = {rho.dims.d})")
    for v in verdicts:
        print(f"{v.criterion.value:5s} {v.status.value:12s} witness = {v.witness:.12g}")
    _print_report(report)
    return EXIT_OK


def _print_report(report) -> None:
    print(f"q = {report.q:g}, regime {report.regime}")
    print(f"||rho^T_B||_1 = {report.ppt_norm:.12g}")
    print(f"||R(rho)||_1  = {report.realign_norm:.12g}")
    th1 = "n/a" if report.theorem1_bound is None else f"{report.theorem1_bound:.12g}"
    print(f"theorem1 bound = {th1}")
    print(f"prior bound    = {report.prior_bound:.12g}")
    print(f"best lower     = {report.best_lower:.12g}")
    if report.upper_estimate is not None:
        print(f"upper estimate = {report.upper_estimate:.12g}")


def cmd_bounds(args) -> int:
    _check_q(args.q)
    if args.iterations < 0:
        raise InputError("iterations must be >= 0")
    rho = _read_state(args.input)
    report = bound_report(rho, args.q, args.iterations, args.seed)
    if args.json:
        print(json.dumps(report.to_dict(), indent=2))
    else:
        _print_report(report)
    return EXIT_OK


def _grid(f_min, f_max, steps):
    if not (0 <= f_min < f_max <= 1):
        raise InputError(f"need 0 <= f_min < f_max <= 1, got [{f_min}, {f_max}]")
    if steps < 2:
        raise InputError("steps must be >= 2")
    return np.linspace(f_min, f_max, steps)


def sweep_rows(d: int, q: float, grid, grid_size: int = isotropic.DEFAULT_GRID, threads: int = 1):
    """Rows ``(F, exact, theorem1, prior)``; bounds use the trace norms of the actual state matrices."""
    env = isotropic.exact_isotropic_qc(q, d, grid_size)

    def row(F):
        rho = isotropic.isotropic_state(F, d)
        pn, rn = ppt_norm(rho), realign_norm(rho)
        th1, _ = theorem1_from_norms(pn, rn, q, d)
        return float(F), env(F), th1, prior_from_norms(pn, rn, q, d)

    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(row, grid))


def cmd_isotropic_sweep(args) -> int:
    _check_q(args.q)
    if args.d < 2:
        raise InputError("d must be >= 2")
    grid = _grid(args.f_min, args.f_max, args.steps)
    rows = sweep_rows(args.d, args.q, grid, args.grid_size, _threads())
    lines = ["F,exact,theorem1,prior"] + [",".join(_fmt(v) for v in r) for r in rows]
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_derivatives(args) -> int:
    _check_q(args.q)
    d, h = args.d, args.step
    if d < 2:
        raise InputError("d must be >= 2")
    if not h > 0:
        raise InputError("step must be > 0")
    f_min = 1.0 / d + 1e-3 if args.f_min is None else args.f_min
    f_max = 1.0 - 1e-3 if args.f_max is None else args.f_max
    grid = _grid(f_min, f_max, args.steps)
    if grid[0] - h <= 1.0 / d or grid[-1] + h > 1.0:
        raise InputError(f"grid +/- step must stay inside (1/d, 1] = ({1.0 / d:.6g}, 1]")
    d1, d2 = isotropic.xi_derivatives(grid, args.q, d, h)
    lines = ["F,dxi_dF,d2xi_dF2"] + [f"{_fmt(a)},{_fmt(b)},{_fmt(c)}" for a, b, c in zip(grid, d1, d2)]
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_random(args) -> int:
    try:
        dims = BipartiteDims(args.dA, args.dB)
        rho = random_density(dims, args.rank, args.seed)
    except StateError as exc:
        raise InputError(str(exc)) from None
    if args.out is None:
        print(dumps_state(rho))
        return EXIT_OK
    try:
        save_state(args.out, rho)
    except OSError as exc:
        raise OutputError(f"cannot write {args.out}: {exc.strerror or exc}") from None
    return EXIT_OK


def cmd_critical_s(args) -> int:
    s = critical_s()
    print(json.dumps({"s": s}) if args.json else f"{s:.12f}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qcbounds", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    for name, fn, hlp in [("analyze", cmd_analyze, "detect entanglement and bound C_q for a state file"),
                          ("bounds", cmd_bounds, "print the bound report for a state file")]:
        a = sub.add_parser(name, help=hlp)
        a.add_argument("input")
        a.add_argument("--q", type=float, default=3.0)
        a.add_argument("--iterations", type=int, default=0, help="upper-bound search budget (0 skips it)")
        a.add_argument("--seed", type=int, default=0)
        a.add_argument("--json", action="store_true")
        a.set_defaults(func=fn)

    s = sub.add_parser("isotropic-sweep", help="CSV of exact C_q and both lower bounds for isotropic states")
    s.add_argument("--d", type=int, required=True)
    s.add_argument("--q", type=float, required=True)
    s.add_argument("--f-min", type=float, default=0.0)
    s.add_argument("--f-max", type=float, default=1.0)
    s.add_argument("--steps", type=int, default=201)
    s.add_argument("--grid-size", type=int, default=isotropic.DEFAULT_GRID)
    s.add_argument("--out")
    s.set_defaults(func=cmd_isotropic_sweep)

    v = sub.add_parser("derivatives", help="CSV of finite-difference derivatives of xi")
    v.add_argument("--d", type=int, default=3)
    v.add_argument("--q", type=float, default=3.0)
    v.add_argument("--f-min", type=float)
    v.add_argument("--f-max", type=float)
    v.add_argument("--steps", type=int, default=200)
    v.add_argument("--step", type=float, default=1e-5)
    v.add_argument("--out")
    v.set_defaults(func=cmd_derivatives)

    r = sub.add_parser("random", help="write a seeded random density matrix")
    r.add_argument("--dA", type=int, required=True)
    r.add_argument("--dB", type=int, required=True)
    r.add_argument("--rank", type=int, required=True)
    r.add_argument("--seed", type=int, required=True)
    r.add_argument("--out")
    r.set_defaults(func=cmd_random)

    c = sub.add_parser("critical-s", help="print the critical q for two-qubit monotonicity")
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_critical_s)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (SvdFailure, np.linalg.LinAlgError, FloatingPointError, ArithmeticError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except OutputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
