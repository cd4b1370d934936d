import math

import pytest

from jtfield import (
    bloch,
    critical,
    default_grid,
    make_params,
    recombine_energy,
    refine_potential,
    refine_scaled,
    refine_until,
    scaled_moments,
    small_coupling,
    strong_coupling,
    symanzik_zeta,
    tangle_report,
    w_minus_quartic,
)


def test_small_coupling_formulas():
    est = small_coupling(0.1, 100.0)
    assert est.tau_E_phiq == pytest.approx(2.0 * 0.1 / 100.0, rel=1e-12)
    assert est.tau_phi_Eq == est.tau_E_phiq
    assert est.tau_Ephi == pytest.approx(math.pi * 0.1 / 200.0, rel=1e-12)
    assert est.residual == pytest.approx((2.0 - math.pi / 2.0) * 0.1 / 100.0, rel=1e-12)
    assert est.regime == "small_coupling"


def test_small_coupling_gates():
    with pytest.raises(ValueError):
        small_coupling(0.3, 100.0)
    with pytest.raises(ValueError):
        small_coupling(0.1, 5.0)


def test_small_coupling_accuracy_grows_with_alpha():
    rels = []
    for alpha in (0.05, 0.1, 0.2):
        p = make_params(100.0, alpha)
        rep = tangle_report(bloch(p, refine_until(p, 1e-8)))
        est = small_coupling(alpha, 100.0)
        rels.append(abs(est.tau_E_phiq - rep.tau_E_phiq) / rep.tau_E_phiq)
    assert rels[0] == pytest.approx(0.02355, abs=2e-3)
    assert rels[1] == pytest.approx(0.04771, abs=2e-3)
    assert rels[2] == pytest.approx(0.09810, abs=2e-3)
    assert rels[0] < rels[1] < rels[2]


def test_strong_coupling_formulas():
    est = strong_coupling(10.0, 100.0)
    assert est.tau_Ephi == pytest.approx(0.99, rel=1e-12)
    assert est.tau_q_Ephi == pytest.approx(1e-5, rel=1e-12)
    assert est.residual == pytest.approx(2.0 / 3.0 * 1e-5, rel=1e-12)
    assert est.center == pytest.approx(math.sqrt(495.0), rel=1e-9)
    assert est.regime == "strong_coupling"


def test_strong_coupling_gates():
    with pytest.raises(ValueError):
        strong_coupling(3.0, 100.0)
    with pytest.raises(ValueError):
        strong_coupling(10.0, 5.0)


def test_scaled_moments_frozen():
    m1, m2, m3, m4 = scaled_moments(0.0)
    assert m1 == pytest.approx(0.7236944, abs=1e-6)
    assert m2 == pytest.approx(0.6514774, abs=1e-6)
    assert m3 == pytest.approx(0.6769087, abs=1e-6)
    assert m4 == pytest.approx(0.7816097, abs=1e-6)


def test_critical_frozen_point():
    est = critical(1.0, 10.0)
    assert est.zeta == 0.0
    assert est.tau_E_phiq == pytest.approx(0.35367655, abs=1e-7)
    assert est.tau_Ephi == pytest.approx(0.28432656, abs=1e-7)
    assert est.tau_q_Ephi == pytest.approx(0.06934999, abs=1e-7)
    assert est.bloch.b_z == pytest.approx(-0.9095460, abs=1e-6)
    assert est.bloch.b_phi == pytest.approx(-0.3978411, abs=1e-6)


def test_critical_with_supplied_moments():
    est = critical(1.0, 10.0, moments=(0.72737, 0.6515, 0.6769087078, 0.7816096909))
    assert est.tau_E_phiq == pytest.approx(0.35368862, abs=1e-7)
    assert est.tau_Ephi == pytest.approx(0.28722182, abs=1e-7)
    assert est.tau_q_Ephi == pytest.approx(0.06646679, abs=1e-7)


def test_critical_gate():
    with pytest.raises(ValueError):
        critical(0.5, 10.0)


def test_symanzik_zeta_values():
    assert symanzik_zeta(1.0, 10.0) == 0.0
    assert symanzik_zeta(0.9, 10.0) == pytest.approx(0.8479365, abs=1e-6)
    assert symanzik_zeta(1.1, 10.0) == pytest.approx(-0.6488781, abs=1e-6)


def test_recombine_energy():
    e = recombine_energy(1.0, 10.0, 2.3448280115)
    assert e == pytest.approx(-10.0 + (0.05) ** (1.0 / 3.0) * 2.3448280115, abs=1e-12)
    assert e == pytest.approx(-9.1361580, abs=1e-6)


def test_rescaling_identity_on_quartic_potential():
    # direct solve of the quartic surface equals the scaled solve mapped back
    for alpha in (1.0, 2.0):
        p = make_params(10.0, alpha)
        direct = refine_potential(
            lambda q: w_minus_quartic(p, q), default_grid(p), 1e-10
        ).energy
        scaled = refine_scaled(symanzik_zeta(alpha, 10.0), 1e-10).energy
        mapped = recombine_energy(alpha, 10.0, scaled)
        assert abs(direct - mapped) / abs(mapped) < 1e-6
