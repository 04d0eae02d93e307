import json
import math
import os
import subprocess

import numpy as np
import pytest

import csgauge


def test_p2_thresholds():
    t = csgauge.thresholds(2.0)
    assert t["m"] == pytest.approx(6.0, abs=1e-8)
    assert t["omega0"] == pytest.approx(2 / (5 * math.sqrt(15)), abs=1e-9)
    assert t["omega1"] == pytest.approx(2 / (9 * math.sqrt(3)), abs=1e-9)
    assert t["omega_bar"] == pytest.approx(1 / 3, abs=1e-12)


def test_roots_and_psi():
    roots = csgauge.solve_eq_k(2.0, csgauge.omega0(2.0))
    assert roots["count"] == 2
    assert roots["k2"] == pytest.approx(1 / math.sqrt(15), abs=1e-10)
    assert csgauge.psi_curve(roots["k2"], 2.0, csgauge.omega0(2.0)) == pytest.approx(0.0, abs=1e-12)
    none = csgauge.solve_eq_k(2.0, 0.2)
    assert none["count"] == 0 and none["k1"] is None and none["k2"] is None


def test_out_of_band_raises():
    with pytest.raises(ValueError):
        csgauge.omega0(3.5)


def test_soliton_and_limit_energy():
    k2 = csgauge.solve_eq_k(2.0, csgauge.omega0(2.0))["k2"]
    r = np.linspace(-60.0, 60.0, 24001)
    w = csgauge.soliton_wk(2.0, k2, r)
    assert w[12000] == pytest.approx(3 / (2 * math.sqrt(15)), rel=1e-12)
    e = csgauge.energy_J(w, -60.0, 60.0, 2.0, csgauge.omega0(2.0))
    assert e["total"] == pytest.approx(0.0, abs=1e-5)


def test_radial_energy_and_inequality():
    r = np.linspace(0.0, 12.0, 10001)
    u = np.exp(-r * r)
    a = csgauge.energy_I(u, 12.0, 2.0, 0.1)
    b = csgauge.energy_I(u, 12.0, 2.0, 0.2)
    assert b["mass"] == pytest.approx(2 * a["mass"], rel=1e-14)
    assert a["nonlocal"] > 0
    assert csgauge.cs_inequality_gap(u, 12.0) > 0


def test_minimize_nonexistence():
    res = csgauge.minimize_on_ball(2.0, 0.5, 20.0)
    assert res["energy"]["total"] >= -1e-8
    assert res["u"][-1] == 0.0
    assert res["r"][-1] == 20.0
    assert np.max(np.abs(res["u"])) <= 1e-3


def test_sweep_shape():
    rows = csgauge.sweep(1.1, 2.9, 180)
    assert rows.shape == (181, 5)
    assert np.all(rows[:, 2] < rows[:, 3])
    assert np.all(rows[:, 3] < rows[:, 4])


def test_verify_fast():
    results = csgauge.verify()
    assert results and all(r["passed"] for r in results)


@pytest.mark.skipif("CSGAUGE_CLI" not in os.environ, reason="command-line tool path not provided")
def test_cli_threshold_json():
    out = subprocess.run([os.environ["CSGAUGE_CLI"], "threshold", "--p", "2", "--json"],
                         check=True, capture_output=True, text=True).stdout
    data = json.loads(out)
    assert data["omega1"] == pytest.approx(csgauge.omega1(2.0), abs=1e-15)
    bad = subprocess.run([os.environ["CSGAUGE_CLI"], "threshold", "--p", "3.5"], capture_output=True)
    assert bad.returncode == 2
