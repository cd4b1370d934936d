"""Command-line front end: solve, sweep, scaling, wavefunctions, validate."""

from __future__ import annotations

import argparse
import sys

from .model import make_params
from .solver import refine_until
from .observables import bloch
from .tangles import residual_average, tangle_report
from .sweep import (
    ConfigError,
    load_config,
    run_scaling,
    run_sweep,
    run_wavefunctions,
)
from .validate import run_validate


def _float_list(text: str) -> list[float]:
    try:
        return [float(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}")


def _parse_set(pairs: list[str]) -> dict[str, str]:
    out = {}
    for pair in pairs:
        if "=" not in pair:
            raise ConfigError(f"--set expects key=value, got {pair!r}")
        key, value = pair.split("=", 1)
        out[key.strip()] = value.strip()
    return out


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="jtfield",
        description="Ground-state entanglement sharing of a driven vibronic qubit model.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", help="solve one (D, alpha) point and print observables")
    p_solve.add_argument("--D", type=float, required=True)
    p_solve.add_argument("--alpha", type=float, required=True)
    p_solve.add_argument("--tol", type=float, default=1e-8)

    p_sweep = sub.add_parser("sweep", help="run a (D, alpha) sweep to CSV")
    p_sweep.add_argument("--config", default=None, help="config file; defaults used if omitted")
    p_sweep.add_argument(
        "--set",
        dest="overrides",
        action="append",
        default=[],
        metavar="KEY=VALUE",
        help="override a config key (repeatable)",
    )

    p_scaling = sub.add_parser("scaling", help="fit the power law of tangles vs D")
    p_scaling.add_argument("--D-list", type=_float_list, required=True)
    p_scaling.add_argument("--alpha", type=float, default=1.0)
    p_scaling.add_argument("--tol", type=float, default=1e-8)
    p_scaling.add_argument("--output", default=None, help="optional CSV path")

    p_wf = sub.add_parser("wavefunctions", help="dump wavefunction columns on a shared grid")
    p_wf.add_argument("--D", type=float, required=True)
    p_wf.add_argument("--alpha-list", type=_float_list, required=True)
    p_wf.add_argument("--output", default="wavefunctions.csv")
    p_wf.add_argument("--n", type=int, default=4096)

    sub.add_parser("validate", help="run the acceptance checks")
    return parser


def _cmd_solve(args) -> int:
    params = make_params(args.D, args.alpha)
    state = refine_until(params, args.tol)
    b = bloch(params, state)
    rep = tangle_report(b)
    res = residual_average(rep)
    print(f"D = {params.D:g}")
    print(f"alpha = {params.alpha:g}")
    print(f"energy = {state.energy:.12g}")
    print(f"n_grid = {state.grid.n}")
    print(f"b_z = {b.b_z:.12g}")
    print(f"b_phi = {b.b_phi:.12g}")
    print(f"tau_E_phiq = {rep.tau_E_phiq:.12g}")
    print(f"tau_Ephi = {rep.tau_Ephi:.12g}")
    print(f"tau_q_Ephi = {rep.tau_q_Ephi:.12g}")
    print(f"lambda_min = {rep.lambda_min_Ephi:.12g}")
    print(f"residual = {res:.12g}")
    return 0


def _cmd_sweep(args) -> int:
    config = load_config(args.config, _parse_set(args.overrides))
    rows = run_sweep(config)
    failed = sum(1 for r in rows if not r.converged)
    print(f"{len(rows)} rows -> {config.output_path or '(no file)'}; {failed} failed")
    return 0 if failed == 0 else 1


def _cmd_scaling(args) -> int:
    fit = run_scaling(args.D_list, at_alpha=args.alpha, output_path=args.output, tol=args.tol)
    for name in ("tau_E_phiq", "tau_Ephi", "residual"):
        print(
            f"{name}: exponent = {fit.exponents[name]:.4f}, "
            f"prefactor = {fit.prefactors[name]:.4f}"
        )
    return 0


def _cmd_wavefunctions(args) -> int:
    q, columns = run_wavefunctions(args.D, args.alpha_list, args.output, n=args.n)
    print(f"{len(q)} grid points x {len(columns)} couplings -> {args.output}")
    return 0


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    handlers = {
        "solve": _cmd_solve,
        "sweep": _cmd_sweep,
        "scaling": _cmd_scaling,
        "wavefunctions": _cmd_wavefunctions,
        "validate": lambda a: run_validate(),
    }
    try:
        return handlers[args.command](args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except (RuntimeError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
