import json
import math
from pathlib import Path

import pytest

import swalg

CONFIGS = Path(__file__).resolve().parents[1] / "configs"


def test_version():
    assert swalg.__version__ == "0.1.0"


def test_polynomial_bases():
    assert swalg.laguerre(0, 0.3, 1.7) == 1.0
    assert swalg.laguerre(2, 1.0, 2.0) == pytest.approx(-1.0)
    assert swalg.jacobi(1, 0.5, 0.25, 0.0) == pytest.approx(0.125)


def test_degeneracy():
    assert swalg.degeneracy(3, 2) == 6
    assert all(swalg.degeneracy(1, k) == 1 for k in range(8))


def test_racah_matches_cartesian():
    a, b = [1.0, 0.5, 2.0], 0.7
    left = sorted(swalg.cartesian_energies(a, b, 5))
    right = sorted(swalg.racah_energies(a, b, 5))
    assert len(left) == len(right) == 56
    for x, y in zip(left, right):
        assert math.isclose(x, y, rel_tol=1e-12)


def test_fd_eigen_levels():
    values = swalg.fd_eigen_1d(1.0, 0.5, 5)
    for q, v in enumerate(values):
        assert v == pytest.approx(2 * (2 * q + 2.5), rel=1e-3)


def test_relations_n3():
    checks = swalg.verify_relations(3)
    assert checks
    assert all(c["passed"] or c["informational"] for c in checks)


def test_run_derive_report():
    code, text, _ = swalg.run("derive", str(CONFIGS / "n3_default.toml"), exact=True)
    assert code == 0
    report = json.loads(text)
    assert report["schema_version"] == "1.0"
    assert report["mode"] == "exact"
    assert report["summary"]["failed"] == 0


def test_run_config_error():
    code, _, message = swalg.run("verify", str(CONFIGS / "n1_relations.toml"))
    assert code == 2
    assert "N >= 2" in message


@pytest.mark.parametrize("command,config", [
    ("verify", "n3_relations.toml"),
    ("derive", "n3_default.toml"),
    ("numcheck", "numcheck_coarse.toml"),
])
def test_report_matches_schema(command, config):
    jsonschema = pytest.importorskip("jsonschema")
    schema = json.loads((CONFIGS.parents[1] / "docs" / "report_schema.json").read_text())
    code, text, _ = swalg.run(command, str(CONFIGS / config))
    assert code == 0
    jsonschema.validate(json.loads(text), schema)
