"""Parameter sweeps, scaling fits, and wavefunction dumps with CSV output.

Configs are flat key = value text with dotted section names; every value
has a CLI override. Output is deterministic: fixed column order, 17
significant digits, D-major/alpha-minor row order, plus a JSON metadata
sidecar next to each CSV.
"""

from __future__ import annotations

import json
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, asdict

import numpy as np

from .model import make_params, w_minus
from .solver import RadialGrid, default_grid, refine_potential, solve_physical
from .observables import bloch
from .tangles import tangle_report, residual_average

__all__ = [
    "ConfigError",
    "SweepConfig",
    "SweepRow",
    "ScalingFit",
    "parse_config",
    "load_config",
    "build_config",
    "default_config",
    "run_sweep",
    "run_scaling",
    "run_wavefunctions",
]

WORKERS_ENV = "JTFIELD_WORKERS"
OUTPUT_TOKENS = ("wavefunction", "bloch", "tangles", "residual", "scaling")

ROW_FIELDS = (
    "D",
    "alpha",
    "energy",
    "b_z",
    "b_phi",
    "tau_E_phiq",
    "tau_Ephi",
    "tau_q_Ephi",
    "residual",
    "lambda_min",
    "n_grid",
    "converged",
)

_COLUMN_GROUPS = {
    "bloch": ("b_z", "b_phi"),
    "tangles": ("tau_E_phiq", "tau_Ephi", "tau_q_Ephi", "lambda_min"),
    "residual": ("residual",),
}


class ConfigError(ValueError):
    """Invalid sweep configuration."""


@dataclass(frozen=True)
class SweepConfig:
    """Sweep definition: field values, coupling grid, solver knobs, outputs.

    alpha_values, when nonempty, overrides the (min, max, count, spacing)
    grid. q_max_policy is "auto" (box follows the surface minimum) or a
    number fixing the starting box size. outputs selects CSV column groups;
    the "wavefunction" token adds per-D wavefunction files and "scaling"
    adds a power-law fit to the metadata sidecar.
    """

    D_values: tuple[float, ...] = (10.0, 20.0, 50.0)
    alpha_min: float = 0.0
    alpha_max: float = 4.0
    alpha_count: int = 81
    alpha_spacing: str = "linear"
    alpha_values: tuple[float, ...] = ()
    tol: float = 1e-6
    n_initial: int = 4096
    q_max_policy: str = "auto"
    outputs: tuple[str, ...] = ("bloch", "tangles", "residual")
    output_path: str = "sweep.csv"

    def __post_init__(self):
        if not self.D_values:
            raise ConfigError("D_values must be nonempty")
        if any(d <= 0 for d in self.D_values):
            raise ConfigError(f"D values must be positive, got {self.D_values}")
        if self.alpha_values:
            if any(a < 0 for a in self.alpha_values):
                raise ConfigError("alpha values must be nonnegative")
        else:
            if self.alpha_count < 2:
                raise ConfigError(f"alpha count must be >= 2, got {self.alpha_count}")
            if not self.alpha_min < self.alpha_max:
                raise ConfigError("alpha grid requires min < max")
            if self.alpha_min < 0:
                raise ConfigError("alpha grid must be nonnegative")
        if self.alpha_spacing not in ("linear", "log"):
            raise ConfigError(f"unknown spacing {self.alpha_spacing!r}")
        if self.tol < 1e-12:
            raise ConfigError(f"tol must be >= 1e-12, got {self.tol}")
        if self.n_initial < 64:
            raise ConfigError(f"n_initial must be >= 64, got {self.n_initial}")
        if self.q_max_policy != "auto":
            try:
                q = float(self.q_max_policy)
            except ValueError:
                raise ConfigError(
                    f"q_max_policy must be 'auto' or a number, got {self.q_max_policy!r}"
                ) from None
            if q <= 0:
                raise ConfigError("fixed q_max must be positive")
        for token in self.outputs:
            if token not in OUTPUT_TOKENS:
                raise ConfigError(f"unknown output token {token!r}")

    def alphas(self) -> tuple[float, ...]:
        if self.alpha_values:
            return self.alpha_values
        if self.alpha_spacing == "log":
            if self.alpha_min <= 0:
                raise ConfigError("log spacing requires alpha_min > 0")
            grid = np.geomspace(self.alpha_min, self.alpha_max, self.alpha_count)
        else:
            grid = np.linspace(self.alpha_min, self.alpha_max, self.alpha_count)
        return tuple(float(a) for a in grid)


@dataclass(frozen=True)
class SweepRow:
    """One computed point of a sweep; nan fields when converged is False."""

    D: float
    alpha: float
    energy: float
    b_z: float
    b_phi: float
    tau_E_phiq: float
    tau_Ephi: float
    tau_q_Ephi: float
    residual: float
    lambda_min: float
    n_grid: int
    converged: bool


@dataclass(frozen=True)
class ScalingFit:
    """Log-log power-law fit of tangles against D at fixed alpha."""

    alpha: float
    D_values: tuple[float, ...]
    exponents: dict[str, float]
    prefactors: dict[str, float]
    rows: tuple[SweepRow, ...] = field(repr=False, default=())


def parse_config(text: str) -> dict[str, str]:
    """Parse flat key = value lines; '#' starts a comment; later keys win."""
    out: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected key = value, got {raw!r}")
        key, value = line.split("=", 1)
        out[key.strip()] = value.strip()
    return out


def _floats(value: str) -> tuple[float, ...]:
    items = [v.strip() for v in value.split(",") if v.strip()]
    return tuple(float(v) for v in items)


def build_config(raw: dict[str, str]) -> SweepConfig:
    """Build a SweepConfig from parsed key-value pairs; unknown keys error."""
    kwargs = {}
    converters = {
        "D_values": _floats,
        "alpha_grid.min": ("alpha_min", float),
        "alpha_grid.max": ("alpha_max", float),
        "alpha_grid.count": ("alpha_count", int),
        "alpha_grid.spacing": ("alpha_spacing", str),
        "alpha_values": (
            "alpha_values",
            _floats,
        ),
        "solver.tol": ("tol", float),
        "solver.n_initial": ("n_initial", int),
        "solver.q_max_policy": ("q_max_policy", str),
        "outputs": lambda v: tuple(t.strip() for t in v.split(",") if t.strip()),
        "output_path": ("output_path", str),
    }
    for key, value in raw.items():
        if key not in converters:
            raise ConfigError(f"unknown config key {key!r}")
        conv = converters[key]
        if isinstance(conv, tuple):
            name, fn = conv
        else:
            name, fn = key, conv
        try:
            kwargs[name] = fn(value)
        except ValueError as exc:
            raise ConfigError(f"bad value for {key}: {value!r} ({exc})") from None
    return SweepConfig(**kwargs)


def load_config(path: str | None, overrides: dict[str, str] | None = None) -> SweepConfig:
    """Read a config file (missing path means all defaults) plus overrides."""
    raw: dict[str, str] = {}
    if path is not None:
        with open(path, encoding="utf-8") as fh:
            raw = parse_config(fh.read())
    if overrides:
        raw.update(overrides)
    return build_config(raw)


def default_config(**replacements) -> SweepConfig:
    """The all-defaults config, optionally with dataclass field replacements."""
    return SweepConfig(**replacements)


def _start_grid(D: float, alpha: float, n: int, q_max_policy: str) -> RadialGrid:
    params = make_params(D, alpha)
    if q_max_policy == "auto":
        grid = default_grid(params, n=n)
    else:
        grid = RadialGrid(q_max=float(q_max_policy), n=n)
    return grid


def _compute_row(task: tuple[float, float, float, int, str]) -> SweepRow:
    D, alpha, tol, n_initial, q_max_policy = task
    params = make_params(D, alpha)
    try:
        grid = _start_grid(D, alpha, n_initial, q_max_policy)
        state = refine_potential(lambda q: w_minus(params, q), grid, tol)
        b = bloch(params, state)
        rep = tangle_report(b)
        res = residual_average(rep)
    except (RuntimeError, ValueError):
        nan = math.nan
        return SweepRow(
            D=D, alpha=alpha, energy=nan, b_z=nan, b_phi=nan,
            tau_E_phiq=nan, tau_Ephi=nan, tau_q_Ephi=nan, residual=nan,
            lambda_min=nan, n_grid=0, converged=False,
        )
    return SweepRow(
        D=D,
        alpha=alpha,
        energy=state.energy,
        b_z=b.b_z,
        b_phi=b.b_phi,
        tau_E_phiq=rep.tau_E_phiq,
        tau_Ephi=rep.tau_Ephi,
        tau_q_Ephi=rep.tau_q_Ephi,
        residual=res,
        lambda_min=rep.lambda_min_Ephi,
        n_grid=state.grid.n,
        converged=True,
    )


def _worker_count() -> int:
    try:
        return max(1, int(os.environ.get(WORKERS_ENV, "1")))
    except ValueError:
        return 1


def _compute_rows(tasks: list[tuple]) -> list[SweepRow]:
    workers = _worker_count()
    if workers == 1 or len(tasks) < 2:
        return [_compute_row(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_compute_row, tasks, chunksize=4))


def _fmt(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return "%.17g" % (value + 0.0)  # folds -0.0 to 0


def _check_row(row: SweepRow) -> None:
    # write-time recheck of the physical invariants on every converged row
    if not row.converged:
        return
    for name in ("tau_E_phiq", "tau_Ephi", "tau_q_Ephi", "residual"):
        v = getattr(row, name)
        if not -1e-9 <= v <= 1.0 + 1e-9:
            raise ValueError(f"row (D={row.D}, alpha={row.alpha}): {name} = {v} out of range")
    if row.tau_E_phiq - row.tau_Ephi < -1e-12:
        raise ValueError(f"row (D={row.D}, alpha={row.alpha}): monogamy violated")


def _write_rows_csv(path: str, rows: list[SweepRow], columns: tuple[str, ...]) -> None:
    lines = [",".join(columns)]
    for row in rows:
        _check_row(row)
        lines.append(",".join(_fmt(getattr(row, c)) for c in columns))
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")


def _write_sidecar(path: str, payload: dict) -> None:
    with open(path + ".meta.json", "w", encoding="utf-8") as fh:
        json.dump(payload, fh, indent=2, sort_keys=True)
        fh.write("\n")


def _columns(outputs: tuple[str, ...]) -> tuple[str, ...]:
    cols = ["D", "alpha", "energy"]
    for token in ("bloch", "tangles", "residual"):
        if token in outputs:
            cols.extend(_COLUMN_GROUPS[token])
    cols.extend(["n_grid", "converged"])
    return tuple(cols)


def _fit_loglog(rows: list[SweepRow]) -> tuple[dict[str, float], dict[str, float]]:
    good = [r for r in rows if r.converged]
    if len(good) < 2:
        raise ConfigError("power-law fit needs at least 2 converged rows")
    exponents, prefactors = {}, {}
    logd = np.log([r.D for r in good])
    for name in ("tau_E_phiq", "tau_Ephi", "residual"):
        logt = np.log([getattr(r, name) for r in good])
        slope, intercept = np.polyfit(logd, logt, 1)
        exponents[name] = float(slope)
        prefactors[name] = float(math.exp(intercept))
    return exponents, prefactors


def run_sweep(config: SweepConfig) -> list[SweepRow]:
    """Compute one row per (D, alpha) pair and write CSV plus sidecar.

    Rows are D-major, alpha-minor, in config order. Solver failures are
    recorded with converged = false and the run continues.
    """
    alphas = config.alphas()
    tasks = [
        (D, a, config.tol, config.n_initial, config.q_max_policy)
        for D in config.D_values
        for a in alphas
    ]
    rows = _compute_rows(tasks)
    meta: dict = {
        "config": asdict(config),
        "rows": len(rows),
        "failed": sum(1 for r in rows if not r.converged),
        "workers": _worker_count(),
    }
    if "scaling" in config.outputs:
        if len(alphas) != 1:
            raise ConfigError("the scaling output needs a single-alpha sweep")
        exponents, prefactors = _fit_loglog(rows)
        meta["scaling"] = {"exponents": exponents, "prefactors": prefactors}
    if config.output_path:
        _write_rows_csv(config.output_path, rows, _columns(config.outputs))
        _write_sidecar(config.output_path, meta)
        if "wavefunction" in config.outputs:
            stem = config.output_path.rsplit(".", 1)[0]
            for D in config.D_values:
                run_wavefunctions(D, list(alphas), f"{stem}_wf_D{D:g}.csv")
    return rows


def run_scaling(
    D_list: list[float],
    at_alpha: float = 1.0,
    output_path: str | None = None,
    tol: float = 1e-8,
) -> ScalingFit:
    """Fit the power law tau ~ C D^m at fixed alpha over a list of D values.

    Requires at least 4 D values spanning at least 1.5 decades. Slopes and
    prefactors are reported for the two qubit tangles and the residual.
    """
    ds = sorted(float(d) for d in D_list)
    if len(ds) < 4:
        raise ConfigError(f"need at least 4 D values, got {len(ds)}")
    if ds[0] <= 0:
        raise ConfigError("D values must be positive")
    span = math.log10(ds[-1] / ds[0])
    if span < 1.5:
        raise ConfigError(f"D span must cover >= 1.5 decades, got {span:.3g}")
    tasks = [(d, at_alpha, tol, 4096, "auto") for d in ds]
    rows = _compute_rows(tasks)
    if any(not r.converged for r in rows):
        bad = [r.D for r in rows if not r.converged]
        raise ConfigError(f"solver failed at D = {bad}; cannot fit")
    exponents, prefactors = _fit_loglog(rows)
    fit = ScalingFit(
        alpha=at_alpha,
        D_values=tuple(ds),
        exponents=exponents,
        prefactors=prefactors,
        rows=tuple(rows),
    )
    if output_path:
        _write_rows_csv(output_path, rows, ROW_FIELDS)
        _write_sidecar(
            output_path,
            {
                "alpha": at_alpha,
                "D_values": ds,
                "exponents": exponents,
                "prefactors": prefactors,
                "tol": tol,
            },
        )
    return fit


def run_wavefunctions(
    D: float,
    alpha_list: list[float],
    output_path: str | None = None,
    n: int = 4096,
) -> tuple[np.ndarray, dict[float, np.ndarray]]:
    """Normalized ground wavefunctions on one shared grid, one column per alpha.

    The common box is the largest default box over the requested couplings,
    so columns are directly comparable without interpolation; n fixes the
    resolution for every column.
    """
    if not alpha_list:
        raise ConfigError("alpha_list must be nonempty")
    alphas = [float(a) for a in alpha_list]
    q_max = max(default_grid(make_params(D, a)).q_max for a in alphas)
    grid = RadialGrid(q_max=q_max, n=n)
    columns: dict[float, np.ndarray] = {}
    for a in alphas:
        state = solve_physical(make_params(D, a), grid)
        columns[a] = state.phi
    if output_path:
        header = ["q"] + [f"phi_alpha={a:g}" for a in alphas]
        data = np.column_stack([grid.nodes] + [columns[a] for a in alphas])
        lines = [",".join(header)]
        for row in data:
            lines.append(",".join("%.17g" % v for v in row))
        with open(output_path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write("\n".join(lines) + "\n")
        _write_sidecar(output_path, {"D": D, "alphas": alphas, "n": n, "q_max": q_max})
    return grid.nodes, columns
