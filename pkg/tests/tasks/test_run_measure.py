import json
import sys

sys.path.append(".")

import pytest

from run import main


def run_measure(tmp_path, *extra):
    path = str(tmp_path / "measure.json")
    assert main(["measure", "--format=json", "--trials=50000", f"--out={path}", *extra]) == 0, "measure fails"
    with open(path, "r") as f:
        doc = json.load(f)
    checks = {r[0]: dict(zip(doc["tables"]["checks"]["columns"], r)) for r in doc["tables"]["checks"]["rows"]}
    return doc, checks


def test_measure_equal_superposition(tmp_path):
    doc, checks = run_measure(tmp_path)
    dist = doc["tables"]["distribution"]["rows"]
    assert [r[0] for r in dist] == [-1, 1]
    assert [r[2] for r in dist] == pytest.approx([0.5, 0.5])
    for _, _, p, freq, sd in dist:
        assert abs(freq - p) <= 4 * sd
    mixture = {(r, c): (re, im) for r, c, re, im in doc["tables"]["mixture"]["rows"]}
    assert mixture[(0, 0)] == pytest.approx((0.5, 0.0))
    assert mixture[(0, 1)] == pytest.approx((0.0, 0.0))
    assert checks["interference_before"]["value"] == pytest.approx(0.5)
    assert checks["interference_after"]["value"] <= 1e-12
    assert checks["mixture_purity"]["value"] == pytest.approx(0.5)
    assert checks["single_shot_eigenvalue"]["value"] in (-1, 1)
    assert all(c["passed"] for c in checks.values() if c["passed"] is not None)


def test_measure_degenerate_qutrit(tmp_path):
    doc, checks = run_measure(tmp_path, "--config=configs/measure/measure_qutrit_degenerate.yaml")
    dist = doc["tables"]["distribution"]["rows"]
    assert [(r[0], r[1]) for r in dist] == [(-1, 1), (1, 2)]
    assert [r[2] for r in dist] == pytest.approx([0.5, 0.5])
    assert checks["agreement_residual"]["passed"] is True
    # coherence inside the degenerate eigenspace survives the mixture
    mixture = {(r, c): complex(re, im) for r, c, re, im in doc["tables"]["mixture"]["rows"]}
    assert abs(mixture[(0, 1)]) == pytest.approx(0.25)
    assert abs(mixture[(0, 2)]) <= 1e-12


@pytest.mark.parametrize(
    "extra",
    [
        ["--state={not json"],
        ["--state=[1, 1]"],
        ['--state={"basis": 0, "dim": 3}'],
        ['--observable={"name": "no_such_observable"}'],
        ["--apparatus_dim=1"],
    ],
)
def test_measure_bad_input(extra):
    assert main(["measure", "--trials=10", *extra]) == 1
