import json
import math
import sys

sys.path.append(".")

import pytest

from run import main


def run_bell(tmp_path, *extra):
    path = str(tmp_path / "bell.json")
    assert main(["bell", "--format=json", "--trials=100000", f"--out={path}", *extra]) == 0, "bell command fails"
    with open(path, "r") as f:
        doc = json.load(f)
    return {quantity: value for quantity, value in doc["tables"]["chsh"]["rows"]}, doc


def test_bell_optimal_settings(tmp_path):
    chsh, doc = run_bell(tmp_path, "--config=configs/bell/bell_optimal.yaml")
    assert abs(chsh["S_exact"]) == pytest.approx(2 * math.sqrt(2), abs=1e-9)
    assert chsh["lhv_bound"] == 2
    assert chsh["lhv_brute_force"] == 2
    assert chsh["tsirelson_bound"] == pytest.approx(2 * math.sqrt(2))
    assert chsh["verdict"] == "violated"
    assert abs(chsh["z"]) < 4
    assert len(doc["tables"]["correlations"]["rows"]) == 4


def test_bell_equal_settings_do_not_violate(tmp_path):
    chsh, _ = run_bell(tmp_path, "--chsh_angles", "0", "0", "0", "0")
    assert abs(chsh["S_exact"]) == pytest.approx(2.0, abs=1e-9)
    assert chsh["verdict"] == "not violated"


def test_bell_self_check_failure(monkeypatch):
    monkeypatch.setattr("qcatalog.cli.commands.lhv_chsh_bound", lambda: 3.0)
    assert main(["bell", "--trials=100"]) == 2
