import math

import numpy as np
import pytest

from jtfield import (
    apes_eval,
    apes_minimum,
    dressing,
    lambda_components,
    make_params,
    params_from_physical,
    theta,
    w_minus,
    w_minus_quartic,
)


def test_make_params_basic():
    p = make_params(10.0, 1.0)
    assert p.D == 10.0
    assert p.alpha == pytest.approx(1.0, abs=1e-15)
    assert p.L == pytest.approx(math.sqrt(20.0), abs=1e-12)


def test_make_params_zero_coupling():
    p = make_params(10.0, 0.0)
    assert p.L == 0.0
    assert p.alpha == 0.0


def test_make_params_rejects_bad_inputs():
    with pytest.raises(ValueError):
        make_params(0.0, 1.0)
    with pytest.raises(ValueError):
        make_params(-5.0, 1.0)
    with pytest.raises(ValueError):
        make_params(10.0, -0.1)


def test_params_from_physical_matches_dimensionless():
    # omega = 2 makes D = delta and L = sqrt(2) * lambda_c
    p = params_from_physical(2.0, 10.0, math.sqrt(10.0))
    q = make_params(10.0, 1.0)
    assert p.D == pytest.approx(q.D, abs=1e-12)
    assert p.L == pytest.approx(q.L, abs=1e-12)
    assert p.alpha == pytest.approx(1.0, abs=1e-12)


def test_theta_and_surfaces():
    p = make_params(10.0, 1.0)
    assert theta(p, 0.0) == pytest.approx(10.0, abs=1e-14)
    assert theta(p, 1.0) == pytest.approx(math.sqrt(120.0), abs=1e-12)
    assert w_minus(p, 1.0) == pytest.approx(1.0 - math.sqrt(120.0), abs=1e-12)
    pt = apes_eval(p, 1.0)
    assert pt.w_plus == pytest.approx(1.0 + math.sqrt(120.0), abs=1e-12)
    assert pt.w_minus == pytest.approx(w_minus(p, 1.0), abs=1e-14)
    assert pt.theta == pytest.approx(theta(p, 1.0), abs=1e-14)


def test_apes_eval_rejects_negative_radius():
    p = make_params(10.0, 1.0)
    with pytest.raises(ValueError):
        apes_eval(p, -0.5)


def test_apes_minimum_below_crossover():
    q0, w0 = apes_minimum(make_params(10.0, 0.5))
    assert q0 == 0.0
    assert w0 == -10.0


def test_apes_minimum_above_crossover():
    q0, w0 = apes_minimum(make_params(10.0, 2.0))
    assert q0 == pytest.approx(2.7386127875, abs=1e-9)
    assert w0 == pytest.approx(-12.5, abs=1e-12)


def test_quartic_truncation_near_origin():
    # the quartic form tracks the exact surface to 1e-8 for
    # q <= 0.025 sqrt(D)/alpha
    for alpha in (1.0, 2.0):
        p = make_params(10.0, alpha)
        qs = np.linspace(0.0, 0.025 * math.sqrt(10.0) / alpha, 200)
        diff = np.abs(w_minus(p, qs) - w_minus_quartic(p, qs))
        assert diff.max() < 1e-8


def test_quartic_coefficients():
    p = make_params(10.0, 2.0)
    # -D + (1 - alpha) q^2 + (alpha^2 / 2D) q^4 at q = 1
    assert w_minus_quartic(p, 1.0) == pytest.approx(-10.0 - 1.0 + 0.2, abs=1e-12)


def test_dressing_amplitudes():
    p = make_params(10.0, 1.0)
    d0 = dressing(p, 0.0)
    assert d0.a == 0.0
    assert d0.b == 1.0
    d = dressing(p, 1.0)
    assert d.a**2 + d.b**2 == pytest.approx(1.0, abs=1e-14)
    assert 0.0 < d.a < d.b
    # 2ab = L q / theta
    assert 2.0 * d.a * d.b == pytest.approx(p.L / theta(p, 1.0), abs=1e-13)
    dfar = dressing(p, 5000.0)
    assert dfar.a == pytest.approx(math.sqrt(0.5), abs=1e-3)


def test_lambda_components_frozen():
    p = make_params(10.0, 1.0)
    lam0, lam_x, lam_y, lam_z = lambda_components(p, 1.0, -0.5)
    assert lam0 == pytest.approx(41.0 / 144.0, abs=1e-12)
    assert lam0 == pytest.approx(0.28472222, abs=1e-8)
    assert lam_x == pytest.approx(0.07989815, abs=1e-8)
    assert lam_y == pytest.approx(-0.37267800, abs=1e-8)
    assert lam_z == pytest.approx(-0.91287093, abs=1e-8)
