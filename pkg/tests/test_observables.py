import math

import numpy as np
import pytest

from jtfield import (
    BlochVector,
    RadialState,
    bloch,
    make_params,
    moment,
    overlaps,
    refine_until,
    theta,
)


def test_bloch_vector_validation():
    with pytest.raises(ValueError):
        BlochVector(b_z=0.5, b_phi=0.0)
    with pytest.raises(ValueError):
        BlochVector(b_z=-0.3, b_phi=1.2)
    with pytest.raises(ValueError):
        BlochVector(b_z=-0.8, b_phi=-0.7)  # norm exceeds 1


def test_bloch_vector_norm():
    b = BlochVector(b_z=-0.6, b_phi=-0.5)
    assert b.norm_sq == pytest.approx(0.61, abs=1e-15)


def test_bloch_decoupled_limit():
    p = make_params(10.0, 0.0)
    b = bloch(p, refine_until(p, 1e-8))
    assert b.b_z == pytest.approx(-1.0, abs=1e-12)
    assert b.b_phi == 0.0


def test_bloch_frozen_points():
    p = make_params(10.0, 1.0)
    b = bloch(p, refine_until(p, 1e-8))
    assert b.b_z == pytest.approx(-0.8593689, abs=1e-6)
    assert b.b_phi == pytest.approx(-0.4683378, abs=1e-6)
    p = make_params(100.0, 10.0)
    b = bloch(p, refine_until(p, 1e-8))
    assert b.b_z == pytest.approx(-0.1001009, abs=1e-6)
    assert b.b_phi == pytest.approx(-0.9949722, abs=1e-6)


def test_bloch_rejects_unnormalized_state():
    p = make_params(10.0, 1.0)
    state = refine_until(p, 1e-8)
    bad = RadialState(grid=state.grid, phi=1.1 * state.phi, energy=state.energy)
    with pytest.raises(ValueError):
        bloch(p, bad)


def test_overlaps_from_bloch():
    aa, bb, ab = overlaps(BlochVector(b_z=-0.6, b_phi=-0.5))
    assert aa == pytest.approx(0.2, abs=1e-15)
    assert bb == pytest.approx(0.8, abs=1e-15)
    assert ab == pytest.approx(0.5, abs=1e-15)


def test_overlaps_match_quadrature():
    # overlaps derived from (b_z, b_phi) equal the direct dressing integrals
    p = make_params(10.0, 1.0)
    state = refine_until(p, 1e-8)
    b = bloch(p, state)
    q = state.grid.nodes
    w = q * state.phi**2 * state.grid.h
    r = p.D / theta(p, q)
    a2 = 0.5 * (1.0 - r)
    b2 = 0.5 * (1.0 + r)
    aa, bb, ab = overlaps(b)
    assert np.sum(w * a2) == pytest.approx(aa, abs=1e-12)
    assert np.sum(w * b2) == pytest.approx(bb, abs=1e-12)
    assert np.sum(w * 2.0 * np.sqrt(a2 * b2)) == pytest.approx(ab, abs=1e-12)


def test_moment_normalization_and_range():
    p = make_params(100.0, 10.0)
    state = refine_until(p, 1e-8)
    assert moment(state, 0) == pytest.approx(1.0, abs=1e-12)
    m1 = moment(state, 1)
    assert m1 == pytest.approx(22.24823, abs=1e-3)
    # mean radius sits on the semiclassical circle for strong coupling
    assert abs(m1 - math.sqrt(495.0)) < 5e-4


def test_moment_rejects_bad_order():
    p = make_params(10.0, 1.0)
    state = refine_until(p, 1e-8)
    with pytest.raises(ValueError):
        moment(state, -1)
    with pytest.raises(ValueError):
        moment(state, 9)
