import json
import math

import numpy as np
import pytest

from jtfield import ConfigError, default_config, run_scaling, run_sweep, run_wavefunctions
from jtfield.sweep import SweepConfig, build_config, load_config, parse_config

HEADER = (
    "D,alpha,energy,b_z,b_phi,tau_E_phiq,tau_Ephi,tau_q_Ephi,"
    "lambda_min,residual,n_grid,converged"
)


def test_parse_config():
    raw = parse_config(
        """
        # comment line
        D_values = 10, 20   # trailing comment
        solver.tol = 1e-7
        solver.tol = 1e-6
        """
    )
    assert raw == {"D_values": "10, 20", "solver.tol": "1e-6"}


def test_parse_config_rejects_bare_words():
    with pytest.raises(ConfigError):
        parse_config("D_values 10, 20")


def test_build_config_conversions():
    cfg = build_config(
        {
            "D_values": "10, 20",
            "alpha_grid.min": "0.5",
            "alpha_grid.max": "2.0",
            "alpha_grid.count": "4",
            "alpha_grid.spacing": "log",
            "outputs": "bloch, residual",
            "output_path": "out.csv",
        }
    )
    assert cfg.D_values == (10.0, 20.0)
    assert cfg.alpha_count == 4
    assert cfg.alpha_spacing == "log"
    assert cfg.outputs == ("bloch", "residual")


def test_build_config_rejects_unknown_key():
    with pytest.raises(ConfigError):
        build_config({"alpha_gird.min": "0.5"})


def test_config_validation():
    with pytest.raises(ConfigError):
        SweepConfig(D_values=())
    with pytest.raises(ConfigError):
        SweepConfig(D_values=(10.0, -1.0))
    with pytest.raises(ConfigError):
        SweepConfig(alpha_count=1)
    with pytest.raises(ConfigError):
        SweepConfig(alpha_spacing="cubic")
    with pytest.raises(ConfigError):
        SweepConfig(tol=1e-14)
    with pytest.raises(ConfigError):
        SweepConfig(outputs=("bloch", "spectra"))
    with pytest.raises(ConfigError):
        SweepConfig(q_max_policy="wide")


def test_alpha_grids():
    cfg = default_config()
    grid = cfg.alphas()
    assert len(grid) == 81
    assert grid[0] == 0.0
    assert grid[-1] == 4.0
    assert grid[1] == pytest.approx(0.05, abs=1e-12)
    explicit = default_config(alpha_values=(1.0, 0.5)).alphas()
    assert explicit == (1.0, 0.5)
    logs = default_config(alpha_min=0.1, alpha_max=10.0, alpha_count=3, alpha_spacing="log").alphas()
    assert logs[1] == pytest.approx(1.0, abs=1e-12)


def test_load_config_overrides(tmp_path):
    path = tmp_path / "sweep.cfg"
    path.write_text("D_values = 10\nsolver.tol = 1e-6\n")
    cfg = load_config(str(path), {"solver.tol": "1e-7"})
    assert cfg.D_values == (10.0,)
    assert cfg.tol == 1e-7


def test_sweep_csv_output(tmp_path):
    out = tmp_path / "s.csv"
    cfg = default_config(
        D_values=(10.0,),
        alpha_values=(0.0, 0.5, 1.0, 1.5, 2.0),
        output_path=str(out),
    )
    rows = run_sweep(cfg)
    assert len(rows) == 5
    assert all(r.converged for r in rows)
    # b_phi grows in magnitude with the coupling
    mags = [abs(r.b_phi) for r in rows]
    assert mags[0] == 0.0
    assert mags == sorted(mags)
    assert rows[1].b_phi == pytest.approx(-0.29879, abs=1e-4)
    assert rows[4].b_phi == pytest.approx(-0.82329, abs=1e-4)

    text = out.read_text()
    lines = text.strip().split("\n")
    assert lines[0] == HEADER
    assert len(lines) == 6
    assert "-0," not in text and ",-0\n" not in text
    first = lines[1].split(",")
    assert first[0] == "10"
    assert first[-1] == "true"

    meta = json.loads((tmp_path / "s.csv.meta.json").read_text())
    assert meta["rows"] == 5
    assert meta["failed"] == 0
    assert meta["config"]["tol"] == 1e-6


def test_sweep_is_deterministic(tmp_path):
    paths = []
    for name in ("a.csv", "b.csv"):
        out = tmp_path / name
        cfg = default_config(
            D_values=(10.0,), alpha_values=(0.5, 1.5), output_path=str(out)
        )
        run_sweep(cfg)
        paths.append(out)
    assert paths[0].read_bytes() == paths[1].read_bytes()


def test_sweep_parallel_matches_serial(monkeypatch):
    cfg = default_config(
        D_values=(10.0,), alpha_values=(0.5, 1.0, 1.5, 2.0), output_path=""
    )
    serial = run_sweep(cfg)
    monkeypatch.setenv("JTFIELD_WORKERS", "2")
    parallel = run_sweep(cfg)
    assert parallel == serial


def test_scaling_fit_frozen(tmp_path):
    out = tmp_path / "fit.csv"
    fit = run_scaling([10.0, 30.0, 100.0, 320.0], at_alpha=1.0, output_path=str(out))
    assert fit.D_values == (10.0, 30.0, 100.0, 320.0)
    assert fit.exponents["tau_E_phiq"] == pytest.approx(-0.5908, abs=2e-3)
    assert fit.exponents["tau_Ephi"] == pytest.approx(-0.6051, abs=2e-3)
    assert fit.exponents["residual"] == pytest.approx(-0.5278, abs=2e-3)
    assert fit.prefactors["tau_E_phiq"] == pytest.approx(1.0492, abs=5e-3)
    assert all(r.converged for r in fit.rows)
    meta = json.loads((tmp_path / "fit.csv.meta.json").read_text())
    assert meta["exponents"]["tau_E_phiq"] == pytest.approx(-0.5908, abs=2e-3)


def test_scaling_guards():
    with pytest.raises(ConfigError):
        run_scaling([10.0, 100.0, 1000.0])
    with pytest.raises(ConfigError):
        run_scaling([10.0, 20.0, 30.0, 100.0])


def test_scaling_output_token(tmp_path):
    out = tmp_path / "s.csv"
    cfg = default_config(
        D_values=(10.0, 30.0, 100.0, 320.0),
        alpha_values=(1.0,),
        outputs=("tangles", "scaling"),
        output_path=str(out),
    )
    run_sweep(cfg)
    meta = json.loads((tmp_path / "s.csv.meta.json").read_text())
    assert meta["scaling"]["exponents"]["tau_E_phiq"] == pytest.approx(-0.5908, abs=2e-2)


def test_scaling_token_needs_single_alpha():
    cfg = default_config(
        D_values=(10.0, 30.0, 100.0, 320.0),
        alpha_values=(0.5, 1.0),
        outputs=("scaling",),
        output_path="",
    )
    with pytest.raises(ConfigError):
        run_sweep(cfg)


def test_wavefunction_columns(tmp_path):
    out = tmp_path / "wf.csv"
    q, cols = run_wavefunctions(10.0, [0.0, 2.0], str(out))
    assert q.shape == (4096,)
    assert set(cols) == {0.0, 2.0}
    h = q[1] - q[0]
    for col in cols.values():
        assert np.sum(q * col**2) * h == pytest.approx(1.0, abs=1e-10)
    assert int(np.argmax(cols[0.0])) == 0
    assert q[int(np.argmax(cols[2.0]))] == pytest.approx(2.36611, abs=0.01)
    header = out.read_text().split("\n", 1)[0]
    assert header == "q,phi_alpha=0,phi_alpha=2"


def test_wavefunction_rejects_empty_list():
    with pytest.raises(ConfigError):
        run_wavefunctions(10.0, [])


def test_wavefunction_output_token(tmp_path):
    out = tmp_path / "w.csv"
    cfg = default_config(
        D_values=(10.0,),
        alpha_values=(0.0, 2.0),
        outputs=("bloch", "wavefunction"),
        output_path=str(out),
    )
    run_sweep(cfg)
    assert (tmp_path / "w_wf_D10.csv").exists()
