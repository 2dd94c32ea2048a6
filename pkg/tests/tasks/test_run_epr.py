import json
import math
import sys

sys.path.append(".")

import pytest

from qcatalog.version import __version__
from run import main

TRIALS = 45000
ANGLES = ["0", "1.0471975511965976", "1.5707963267948966"]


def run_epr(tmp_path, *extra):
    path = str(tmp_path / "epr.json")
    argv = ["epr", "--format=json", f"--trials={TRIALS}", f"--out={path}", "--alice_angles", *ANGLES, "--bob_angles",
            *ANGLES, *extra]
    assert main(argv) == 0, "epr command fails"
    with open(path, "r") as f:
        return json.load(f)


def rows_as_dicts(doc, name):
    table = doc["tables"][name]
    return [dict(zip(table["columns"], row)) for row in table["rows"]]


def test_epr_settings_table(tmp_path):
    rows = rows_as_dicts(run_epr(tmp_path, "--seed=42"), "settings")
    assert len(rows) == 9
    assert sum(r["trials"] for r in rows) == TRIALS
    for r in rows:
        angle = abs(r["alice_theta"] - r["bob_theta"])
        assert r["correlation_exact"] == pytest.approx(-math.cos(angle), abs=1e-9)
        assert r["p_same_exact"] == pytest.approx(math.sin(angle / 2) ** 2, abs=1e-9)
        assert abs(r["z"]) < 4.5
        if angle == 0:
            # aligned detectors never agree
            assert r["same_outcome"] == 0
            assert r["n_mm"] == r["n_pp"] == 0
            assert r["correlation"] == -1


def test_epr_marginals_and_no_signaling(tmp_path):
    doc = run_epr(tmp_path, "--seed=43")
    marginals = rows_as_dicts(doc, "marginals")
    assert len(marginals) == 2 * 9
    assert all(r["p_plus_exact"] == 0.5 for r in marginals)
    assert all(abs(r["z"]) < 4.5 for r in marginals)
    no_signaling = rows_as_dicts(doc, "no_signaling")
    assert len(no_signaling) == 2 * 3 * 3
    assert all(abs(r["z"]) < 4.5 for r in no_signaling)
    assert doc["tables"]["no_signaling"]["columns"][3:7] == ["other_theta_1", "other_phi_1", "other_theta_2",
                                                              "other_phi_2"]


def test_no_signaling_rows_tell_mirrored_settings_apart(tmp_path):
    # planar 4.0 and 2 pi - 4.0 share theta and differ in phi
    path = str(tmp_path / "mirrored.json")
    argv = ["epr", "--format=json", "--trials=20000", "--seed=44", f"--out={path}", "--alice_angles", "0",
            "--bob_angles", "4.0", str(2 * math.pi - 4.0)]
    assert main(argv) == 0
    with open(path, "r") as f:
        rows = rows_as_dicts(json.load(f), "no_signaling")
    alice_rows = [r for r in rows if r["wing"] == "alice"]
    assert len(alice_rows) == 1
    row = alice_rows[0]
    assert row["other_theta_1"] == pytest.approx(row["other_theta_2"])
    assert sorted([row["other_phi_1"], row["other_phi_2"]]) == pytest.approx([0.0, math.pi])


def test_epr_postselection(tmp_path):
    rows = rows_as_dicts(run_epr(tmp_path, "--seed=44"), "postselection")
    assert len(rows) == 3 * 2 * 3
    for r in rows:
        angle = abs(r["alice_theta"] - r["bob_theta"])
        expected = math.sin(angle / 2) ** 2 if r["alice_outcome"] == 1 else math.cos(angle / 2) ** 2
        assert r["bob_plus_predicted"] == pytest.approx(expected, abs=1e-9)
        assert abs(r["bob_plus"] - r["bob_plus_predicted"]) <= 4.5 * r["sigma"] + 1e-12


def test_epr_trial_log(tmp_path):
    path = str(tmp_path / "trials.csv")
    run_epr(tmp_path, "--seed=5", f"--trial_log={path}")
    with open(path, "r") as f:
        lines = f.read().splitlines()
    assert lines[0] == "trial_index,alice_theta,alice_phi,alice_out,bob_theta,bob_phi,bob_out"
    assert len(lines) == 1 + TRIALS + 4
    assert lines[-3:-1] == [f"# version={__version__}", "# seed=5"]


def test_epr_workers_do_not_change_report(capsys):
    base = ["epr", "--trials=30000", "--block_size=7000", "--seed=9"]
    assert main(base + ["--num_workers=1"]) == 0
    serial = capsys.readouterr().out
    assert main(base + ["--num_workers=3"]) == 0
    assert capsys.readouterr().out == serial


def test_epr_rejects_duplicate_settings():
    assert main(["epr", "--alice_angles", "0", "6.283185307179586"]) == 1
