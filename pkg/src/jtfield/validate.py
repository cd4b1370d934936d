"""Acceptance suite: one pass/fail line per check, exit 0 iff all pass.

Each check pins a published reference value, a closed-form oracle, or a
structural property of the pipeline. Checks that fail document real
discrepancies; see the test suite for the per-check tolerances asserted
in-process.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass

import numpy as np

from .model import make_params, w_minus_quartic
from .solver import (
    default_grid,
    refine_potential,
    refine_scaled,
    refine_until,
    solve_scaled,
)
from .observables import BlochVector, bloch, moment
from .tangles import (
    generic_rank2_tangle,
    q_partition_tangle,
    rank2_from_bloch,
    residual_average,
    tangle_report,
)
from .asymptotics import (
    recombine_energy,
    small_coupling,
    strong_coupling,
    symanzik_zeta,
)
from .sweep import default_config, run_scaling, run_sweep

__all__ = ["CheckResult", "run_validate"]


@dataclass(frozen=True)
class CheckResult:
    number: int
    name: str
    passed: bool
    detail: str
    seconds: float


def _random_bloch(n: int, seed: int = 7) -> list[BlochVector]:
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(n):
        b_z = -rng.uniform(0.05, 0.95)
        b_phi = -rng.uniform(0.05, 0.999) * math.sqrt(1.0 - b_z**2)
        out.append(BlochVector(b_z=b_z, b_phi=b_phi))
    return out


def _rel(value: float, ref: float) -> float:
    return abs(value - ref) / abs(ref)


def _check_quartic_energy(cache: dict) -> tuple[bool, str]:
    t0 = time.perf_counter()
    state = solve_scaled(0.0)
    elapsed = time.perf_counter() - t0
    cache["scaled_state"] = state
    ok = abs(state.energy - 2.3448) <= 1e-3 and elapsed < 1.0
    return ok, f"e_g = {state.energy:.6f} vs 2.3448 +- 1e-3, solve {elapsed:.2f} s"


def _check_quartic_moments(cache: dict) -> tuple[bool, str]:
    state = cache["scaled_state"]
    m1 = moment(state, 1)
    m2 = moment(state, 2)
    ok1 = abs(m1 - 0.72737) <= 1e-3
    ok2 = abs(m2 - 0.6515) <= 1e-3
    return ok1 and ok2, (
        f"<x> = {m1:.6f} vs 0.72737 +- 1e-3 ({'ok' if ok1 else 'off by %.1e' % abs(m1 - 0.72737)}), "
        f"<x^2> = {m2:.6f} vs 0.6515 +- 1e-3 ({'ok' if ok2 else 'off'})"
    )


def _check_harmonic_limit(cache: dict) -> tuple[bool, str]:
    params = make_params(10.0, 0.0)
    state = refine_until(params, 1e-8)
    b = bloch(params, state)
    rep = tangle_report(b)
    ok = (
        abs(state.energy + 8.0) <= 1e-6
        and abs(b.b_z + 1.0) <= 1e-10
        and abs(b.b_phi) <= 1e-10
        and max(rep.tau_E_phiq, rep.tau_Ephi, rep.tau_q_Ephi, rep.residual) <= 1e-10
    )
    return ok, f"energy = {state.energy:.10f} vs -8, |b - (-1, 0)| <= 1e-10, tangles <= 1e-10"


def _check_two_path(cache: dict) -> tuple[bool, str]:
    t0 = time.perf_counter()
    samples = _random_bloch(200)
    cache["samples"] = samples
    cache["reports"] = [tangle_report(b) for b in samples]
    worst_pair = 0.0
    worst_zero = 0.0
    for b, rep in zip(samples, cache["reports"]):
        tau = generic_rank2_tangle(rank2_from_bloch(b), b)
        worst_pair = max(worst_pair, abs(tau - rep.tau_Ephi))
        worst_zero = max(worst_zero, abs(q_partition_tangle(b)))
    elapsed = time.perf_counter() - t0
    ok = worst_pair <= 1e-10 and worst_zero <= 1e-10 and elapsed < 10.0
    return ok, (
        f"max |generic - closed| = {worst_pair:.2e}, max |tau_q pair| = {worst_zero:.2e}, "
        f"{elapsed:.2f} s"
    )


def _check_residual_identity(cache: dict) -> tuple[bool, str]:
    worst = 0.0
    for rep in cache["reports"]:
        worst = max(worst, abs(residual_average(rep) - rep.residual))
    return worst <= 1e-12, f"max |average - closed form| = {worst:.2e} over 200 samples"


def _check_small_coupling(cache: dict) -> tuple[bool, str]:
    t0 = time.perf_counter()
    est = small_coupling(0.05, 100.0)
    params = make_params(100.0, 0.05)
    state = refine_until(params, 1e-8)
    rep = tangle_report(bloch(params, state))
    res = residual_average(rep)
    rels = (
        _rel(rep.tau_E_phiq, est.tau_E_phiq),
        _rel(rep.tau_Ephi, est.tau_Ephi),
        _rel(res, est.residual),
    )
    elapsed = time.perf_counter() - t0
    ok = max(rels) <= 0.05 and elapsed < 30.0
    return ok, f"pipeline vs 2a/D, pi a/2D, (2 - pi/2) a/D: rel errs {rels[0]:.3f}, {rels[1]:.3f}, {rels[2]:.3f}"


def _check_strong_coupling(cache: dict) -> tuple[bool, str]:
    est = strong_coupling(10.0, 100.0)
    params = make_params(100.0, 10.0)
    state = refine_until(params, 1e-8)
    rep = tangle_report(bloch(params, state))
    r1 = _rel(rep.tau_Ephi, est.tau_Ephi)
    r2 = _rel(rep.tau_q_Ephi, est.tau_q_Ephi)
    ok = r1 <= 0.01 and r2 <= 0.25
    return ok, f"tau_Ephi rel err {r1:.4f} (<= 0.01), tau_q_Ephi rel err {r2:.3f} (<= 0.25)"


def _check_scaling_law(cache: dict) -> tuple[bool, str]:
    t0 = time.perf_counter()
    fit = run_scaling([10.0, 30.0, 100.0, 300.0, 1000.0], at_alpha=1.0)
    slope = fit.exponents["tau_E_phiq"]
    prefactor = fit.prefactors["tau_E_phiq"]
    ref_pref = 4.0 ** (2.0 / 3.0) * 0.6515
    elapsed = time.perf_counter() - t0
    ok = abs(slope + 2.0 / 3.0) <= 0.02 and _rel(prefactor, ref_pref) <= 0.10 and elapsed < 300.0
    return ok, (
        f"slope {slope:.4f} vs -2/3 +- 0.02, prefactor {prefactor:.4f} vs {ref_pref:.4f} +- 10%"
    )


def _check_symanzik(cache: dict) -> tuple[bool, str]:
    worst = 0.0
    for alpha in (0.9, 1.0, 1.1):
        params = make_params(10.0, alpha)
        phys = refine_potential(
            lambda q: w_minus_quartic(params, q), default_grid(params), 1e-8
        ).energy
        scaled = refine_scaled(symanzik_zeta(alpha, 10.0), 1e-8).energy
        worst = max(worst, abs(phys - recombine_energy(alpha, 10.0, scaled)))
    return worst <= 1e-7, f"max |direct - recombined| = {worst:.2e} (<= 1e-7)"


def _check_monogamy(cache: dict) -> tuple[bool, str]:
    worst = math.inf
    count = 0
    for rep in cache["reports"]:
        worst = min(worst, rep.tau_E_phiq - rep.tau_Ephi - rep.tau_Eq)
        count += 1
    for rows in cache.get("sweeps", {}).values():
        for row in rows:
            if row.converged:
                worst = min(worst, row.tau_E_phiq - row.tau_Ephi)
                count += 1
    return worst >= -1e-12, f"min monogamy margin {worst:.2e} over {count} points"


def _check_figure_shape(cache: dict) -> tuple[bool, str]:
    t0 = time.perf_counter()
    sweeps = {}
    for D in (10.0, 20.0, 50.0):
        config = default_config(D_values=(D,), output_path="")
        sweeps[D] = run_sweep(config)
    cache["sweeps"] = sweeps
    peaks = {}
    problems = []
    for D, rows in sweeps.items():
        if any(not r.converged for r in rows):
            problems.append(f"D={D:g}: unconverged rows")
            continue
        res = np.array([r.residual for r in rows])
        alphas = np.array([r.alpha for r in rows])
        peaks[D] = float(alphas[int(np.argmax(res))])
        if not 0.8 < peaks[D] < 1.3:
            problems.append(f"D={D:g}: residual peak at alpha={peaks[D]:g} outside (0.8, 1.3)")
        bz = np.array([r.b_z for r in rows])
        if not (np.all(np.diff(bz) >= -1e-12) and abs(bz[0] + 1.0) < 1e-6):
            problems.append(f"D={D:g}: b_z not monotone from -1 toward 0")
        te = np.array([r.tau_E_phiq for r in rows])
        if not (np.all(np.diff(te) >= -1e-12) and te[-1] > 0.9):
            problems.append(f"D={D:g}: tau_E_phiq not saturating toward 1")
    ordered = [peaks[d] for d in (10.0, 20.0, 50.0) if d in peaks]
    if len(ordered) == 3 and not (ordered[0] >= ordered[1] >= ordered[2] >= 1.0):
        problems.append(f"peaks {ordered} not moving toward 1 with growing D")
    elapsed = time.perf_counter() - t0
    detail = f"peaks {', '.join('D=%g: %g' % (d, p) for d, p in sorted(peaks.items()))}; {elapsed:.0f} s"
    if problems:
        detail += "; " + "; ".join(problems)
    return not problems, detail


_CHECKS = (
    (1, "quartic ground energy", _check_quartic_energy),
    (2, "quartic moments", _check_quartic_moments),
    (3, "harmonic limit", _check_harmonic_limit),
    (4, "two-path tangle equivalence", _check_two_path),
    (5, "residual identity", _check_residual_identity),
    (6, "small-coupling asymptotics", _check_small_coupling),
    (7, "strong-coupling asymptotics", _check_strong_coupling),
    (8, "scaling law", _check_scaling_law),
    (9, "scaled-solve exactness", _check_symanzik),
    (11, "figure shape", _check_figure_shape),
    (10, "monogamy suite", _check_monogamy),
)


def run_validate(verbose: bool = True) -> int:
    """Run every acceptance check; returns 0 iff all pass.

    Check 11 runs before 10 so the monogamy suite can reuse its sweep rows;
    results are reported in numeric order.
    """
    results = []
    cache: dict = {}
    for number, name, fn in _CHECKS:
        t0 = time.perf_counter()
        try:
            passed, detail = fn(cache)
        except Exception as exc:  # a crashed check is a failed check
            passed, detail = False, f"raised {type(exc).__name__}: {exc}"
        results.append(
            CheckResult(number, name, passed, detail, time.perf_counter() - t0)
        )
    results.sort(key=lambda r: r.number)
    if verbose:
        for r in results:
            print(f"[{'PASS' if r.passed else 'FAIL'}] {r.number:2d} {r.name}: {r.detail}")
        failed = [r.number for r in results if not r.passed]
        if failed:
            print(f"{len(failed)} of {len(results)} checks failed: {failed}")
        else:
            print(f"all {len(results)} checks passed")
    return 0 if all(r.passed for r in results) else 1
