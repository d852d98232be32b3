import math

import numpy as np
import pytest

import dirsinr


def test_patterns():
    tx = dirsinr.AntennaPattern.sector_transmit()
    assert tx.gain_db(0.0) == 0.0
    assert tx.gain_db(35.0) == pytest.approx(-3.0, abs=1e-12)
    assert tx.gain_db(180.0) == -25.0
    assert dirsinr.AntennaPattern.omni().gain_linear(123.0) == 1.0
    rx = dirsinr.AntennaPattern.receiver("dir_17_5", with_directivity=False)
    assert rx.gain_db(90.0) == -21.0
    with pytest.raises(ValueError):
        dirsinr.AntennaPattern.parabolic(0.0, 20.0)


def test_layout():
    assert [dirsinr.hex_site_count(r) for r in (0, 1, 4)] == [1, 7, 61]
    sites = dirsinr.site_positions(2000.0, 1)
    assert len(sites) == 7
    assert sites[0] == (0.0, 0.0)


def test_simulate_is_paired_and_deterministic():
    a = dirsinr.simulate(2000.0, ["omni", "dir_17_5"], ue_count=2000, seed=3, rings=2)
    b = dirsinr.simulate(2000.0, ["omni", "dir_17_5"], ue_count=2000, seed=3, rings=2, threads=3)
    assert set(a) == {"omni", "dir_17_5"}
    assert np.array_equal(a["omni"], b["omni"])
    assert np.all(a["dir_17_5"] >= a["omni"])
    assert dirsinr.quantile(a["dir_17_5"], 0.1) > dirsinr.quantile(a["omni"], 0.1)


def test_stats():
    assert dirsinr.quantile(np.arange(1, 101, dtype=float), 0.1) == 10.0
    assert dirsinr.cdf([3.0, 1.0, 2.0], 2.5) == pytest.approx(2 / 3)
    assert dirsinr.shannon_throughput(10e6, 3.0) == 20e6
    with pytest.raises(ValueError):
        dirsinr.quantile([1.0], 0.0)


def test_fluid():
    v = dirsinr.fluid_sinr_db(5000.0, 1250.0, 0.0, "dir_17_5")
    assert math.isfinite(v)
    with pytest.raises(dirsinr.OutOfDomain):
        dirsinr.fluid_sinr_db(5000.0, 5000.0, 0.0)
    rows = dirsinr.compare_fluid(5000.0, 6, [(1250.0, 0.0), (6000.0, 0.0)])
    assert not rows[0]["skipped"] and abs(rows[0]["diff_db"]) < 2.0
    assert rows[1]["skipped"]


def test_run_config(tmp_path):
    cfg = tmp_path / "c.yaml"
    cfg.write_text("defaults: {seed: 1, ue_count: 300, rings: 1}\nscenarios: [{name: p, isd: 2000}]\n")
    artifacts = dirsinr.run(str(cfg), out=str(tmp_path / "o"))
    assert "manifest.json" in artifacts
    assert (tmp_path / "o" / "p_isd2000_omni_noshadow.cdf.csv").exists()
    bad = tmp_path / "bad.yaml"
    bad.write_text("scenarios: [{name: p, isd: 2000, seed: 1, nope: 2}]\n")
    with pytest.raises(dirsinr.ConfigError, match="^1:"):
        dirsinr.run(str(bad))
