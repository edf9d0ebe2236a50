import json
import os
import subprocess

import pytest

import blwave


def test_build_and_verify():
    d = blwave.build("gamma", 3)
    desc = json.loads(d)
    assert desc["schema"] == 1
    assert desc["family"] == "gamma"
    assert desc["skeleton"] == 3
    rep = blwave.verify_dict(d)
    assert rep["verdict"] is True
    assert rep["norm_sq"] == "1"
    assert rep["numeric_assisted"] is False
    assert rep["thm32"]["all"] is True


def test_dimension_matches_closed_form():
    got = blwave.dimension_dict(blwave.build("gamma", 3))
    want = json.loads(blwave.closed_form_dimension(3))
    assert got == want
    assert got["max"] == 2
    assert got["attained"] == [0, 1, 2]
    assert got["is_mra"] is False


def test_classification_labels():
    assert blwave.classify_dict(blwave.build("msf-a", 4))["class"] == "M_inf"
    assert blwave.classify_dict(blwave.build("w-sixtwo", 3))["class"] == "M_0"
    psi = blwave.classify_dict(blwave.build("psi-sixone", 4))
    assert psi["class"] == "M_2"


def test_wavelet_set_checks():
    ws = json.loads(blwave.wavelet_set_check("journe"))
    assert ws["is_wavelet_set"] is True
    assert ws["measure"] == "2"
    sn = json.loads(blwave.wavelet_set_check("S_n", 3))
    assert sn["is_wavelet_set"] is False
    assert sn["measure"] == "24/7"


def test_broken_candidate_round_trip():
    cand = json.loads(blwave.random_candidate(3, 7, "broken-v"))
    assert cand["notes"] == "broken-v"
    assert "marked_cell" in cand
    rep = blwave.verify_dict(json.dumps(cand))
    assert rep["verdict"] is False
    assert rep["eq2"]["ok"] is False


def test_time_bridge():
    xs, values, hermitian = blwave.sample_time(blwave.build("shannon"), -1.0, 1.0, 21)
    assert len(xs) == 21
    assert hermitian is True
    assert abs(values[10].real - 1.0) < 1e-9
    g = blwave.gram_entry(blwave.build("gamma", 3), 0, 0, 0, 0)
    assert abs(g - 1) < 1e-10
    assert abs(blwave.gram_entry(blwave.build("gamma", 3), 0, 0, 0, 3)) < 1e-10


def test_cli_round_trip(tmp_path):
    cli = os.environ.get("BLWAVE_CLI")
    if not cli:
        pytest.skip("BLWAVE_CLI not set")
    out = tmp_path / "gamma3.json"
    r = subprocess.run(
        [cli, "construct", "--family", "gamma", "--n", "3", "-o", str(out)],
        capture_output=True,
        text=True,
    )
    assert r.returncode == 0, r.stderr
    assert "support measure = 2 pi" in r.stdout
    r = subprocess.run([cli, "verify", str(out)], capture_output=True, text=True)
    assert r.returncode == 0, r.stderr
    assert json.loads(out.read_text())["verified"] is True
