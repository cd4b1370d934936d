import math

import numpy as np
import pytest

from jtfield import (
    CutoffError,
    RadialGrid,
    default_grid,
    make_params,
    numerov_oracle,
    refine_potential,
    refine_scaled,
    refine_until,
    scaled_grid,
    solve_physical,
    solve_potential,
    solve_scaled,
    w_minus,
)


def test_grid_validation():
    with pytest.raises(ValueError):
        RadialGrid(q_max=0.0, n=1024)
    with pytest.raises(ValueError):
        RadialGrid(q_max=8.0, n=32)


def test_grid_geometry():
    g = RadialGrid(q_max=8.0, n=1024)
    assert g.h == pytest.approx(8.0 / 1024, abs=1e-15)
    nodes = g.nodes
    assert len(nodes) == 1024
    assert nodes[0] == pytest.approx(0.5 * g.h, abs=1e-15)
    assert nodes[-1] == pytest.approx(8.0 - 0.5 * g.h, abs=1e-12)


def test_default_grid_box_rule():
    assert default_grid(make_params(10.0, 1.0)).q_max == 8.0
    assert default_grid(make_params(10.0, 2.0)).q_max == pytest.approx(
        2.7386127875 + 8.0, abs=1e-9
    )
    assert scaled_grid(0.0).q_max == 6.0
    assert scaled_grid(-50.0).q_max == pytest.approx(11.0, abs=1e-12)


def test_planar_oscillator_ground_energy():
    # V = q^2 has exact ground energy 2 in these units
    state = solve_potential(lambda q: q * q, RadialGrid(q_max=8.0, n=2048))
    assert state.energy == pytest.approx(2.0, abs=1e-4)


def test_state_normalization_and_sign():
    p = make_params(10.0, 1.0)
    state = solve_physical(p)
    q = state.grid.nodes
    assert np.sum(q * state.phi**2) * state.grid.h == pytest.approx(1.0, abs=1e-12)
    assert np.all(state.phi >= 0.0)
    assert state.phi[-1] < 1e-6 * state.phi.max()


def test_scaled_ground_energy_frozen():
    state = solve_scaled(0.0)
    assert state.energy == pytest.approx(2.3448280115, abs=1e-6)


def test_scaled_high_zeta_frozen():
    state = refine_scaled(100.0, tol=1e-8)
    assert state.energy == pytest.approx(20.0199552951, abs=1e-6)


def test_decoupled_limit():
    p = make_params(10.0, 0.0)
    assert abs(solve_physical(p).energy + 8.0) < 2e-6
    assert abs(refine_until(p, 1e-10).energy + 8.0) < 2e-7


def test_refined_energy_frozen():
    state = refine_until(make_params(10.0, 2.0), 1e-8)
    assert state.energy == pytest.approx(-11.7198042710, abs=1e-6)


def test_shooting_oracle_agrees_with_matrix_route():
    p = make_params(10.0, 2.0)
    e_oracle = numerov_oracle(lambda q: w_minus(p, q), default_grid(p, 2048))
    e_matrix = refine_until(p, 1e-8).energy
    assert e_oracle == pytest.approx(-11.7198042801, abs=1e-6)
    assert abs(e_oracle - e_matrix) < 1e-6


def test_shooting_oracle_random_panel():
    # independent route stays within 1e-6 across the working parameter range
    rng = np.random.default_rng(11)
    worst = 0.0
    for _ in range(10):
        alpha = rng.uniform(0.0, 5.0)
        D = rng.uniform(5.0, 100.0)
        p = make_params(D, alpha)
        e_matrix = refine_until(p, 1e-8).energy
        e_oracle = numerov_oracle(lambda q: w_minus(p, q), default_grid(p, 2048))
        worst = max(worst, abs(e_matrix - e_oracle))
    assert worst < 1e-6


def test_richardson_order():
    p = make_params(10.0, 2.0)
    es = [
        solve_potential(lambda q: w_minus(p, q), RadialGrid(12.0, n)).energy
        for n in (1024, 2048, 4096)
    ]
    ratio = abs(es[1] - es[0]) / abs(es[2] - es[1])
    assert 3.5 < ratio < 4.5


def test_cutoff_error_on_tight_box():
    p = make_params(10.0, 2.0)
    with pytest.raises(CutoffError):
        solve_physical(p, RadialGrid(q_max=4.0, n=512))


def test_refine_extends_tight_box():
    p = make_params(10.0, 2.0)
    state = refine_potential(lambda q: w_minus(p, q), RadialGrid(4.0, 1024), 1e-6)
    assert state.grid.q_max == pytest.approx(9.0, abs=1e-12)
    assert state.energy == pytest.approx(-11.71980442, abs=1e-5)


def test_refine_rejects_unreachable_tolerance():
    with pytest.raises(ValueError):
        refine_until(make_params(10.0, 1.0), 1e-13)
