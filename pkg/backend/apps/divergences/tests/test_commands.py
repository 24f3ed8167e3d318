# Standard library imports
import json
from io import StringIO

# Third-party imports
import pytest
from django.core.management import CommandError, call_command

# Local application imports
from apps.common.management import EXIT_CONFIG_ERROR
from apps.measures.types import GaussianMeasure, ParticleMeasure
from apps.measures.utils import save_measure


def run_distance(*args):
    stdout = StringIO()
    call_command("distance", *args, stdout=stdout)
    return json.loads(stdout.getvalue())


def test_w2_between_particle_files(tmp_path):
    mu = save_measure(ParticleMeasure([[0.0]], [1.0]), tmp_path / "mu.csv")
    nu = save_measure(ParticleMeasure([[3.0]], [1.0]), tmp_path / "nu.csv")
    record = run_distance("--metric", "w2", "--mu", str(mu), "--nu", str(nu))
    assert record == {"metric": "w2", "value": pytest.approx(3.0)}


def test_kl_between_gaussian_files(tmp_path):
    mu = save_measure(GaussianMeasure([1.0], [[1.0]]), tmp_path / "mu.json")
    nu = save_measure(GaussianMeasure([0.0], [[1.0]]), tmp_path / "nu.json")
    record = run_distance("--metric", "kl", "--mu", str(mu), "--nu", str(nu), "--out", str(tmp_path / "r.json"))
    assert record["value"] == pytest.approx(0.5)
    assert json.loads((tmp_path / "r.json").read_text())["metric"] == "kl"


def test_sinkhorn_record_reports_iterations(tmp_path):
    mu = save_measure(ParticleMeasure.uniform([[0.0], [1.0]]), tmp_path / "mu.csv")
    nu = save_measure(ParticleMeasure.uniform([[2.0], [3.0]]), tmp_path / "nu.csv")
    record = run_distance("--mu", str(mu), "--nu", str(nu), "--sinkhorn-eps", "0.05")
    assert record["iterations"] >= 1
    assert record["value"] == pytest.approx(2.0, rel=1e-3)


def test_missing_file_is_a_config_error(tmp_path):
    with pytest.raises(CommandError) as excinfo:
        run_distance("--mu", str(tmp_path / "absent.json"), "--nu", str(tmp_path / "absent.json"))
    assert excinfo.value.returncode == EXIT_CONFIG_ERROR
