# Standard library imports
import json
from io import StringIO

# Third-party imports
import numpy as np
import pandas as pd
import pytest
from django.core.management import CommandError, call_command

# Local application imports
from apps.common.management import EXIT_CONFIG_ERROR
from apps.common.utils import read_json
from apps.maps.types import LinearForwardMap
from apps.maps.utils import save_map
from apps.measures.services import discretize_gaussian
from apps.measures.types import GaussianMeasure
from apps.measures.utils import load_measure, save_measure


@pytest.fixture
def scalar_files(tmp_path):
    return {
        "map": save_map(LinearForwardMap([[2.0]]), tmp_path / "map.csv"),
        "truth": save_measure(GaussianMeasure([0.0], [[4.0]]), tmp_path / "truth.json"),
        "data": save_measure(GaussianMeasure([0.2], [[4.0]]), tmp_path / "data.json"),
    }


def test_w2_pair_writes_solution_and_report(tmp_path, scalar_files):
    out = tmp_path / "run"
    call_command(
        "regularize",
        "--pair", "w2",
        "--map", str(scalar_files["map"]),
        "--data", str(scalar_files["data"]),
        "--truth", str(scalar_files["truth"]),
        "--alpha", "1.0",
        "--out", str(out),
        "--quiet",
    )
    report = read_json(out / "report.json")
    assert report["pair"] == "w2"
    assert report["satisfied"] is True
    np.testing.assert_allclose(report["operator"], [[0.4]])
    np.testing.assert_allclose(load_measure(out / "solution.json").mean, [0.08])


def test_kl_pair_reports_the_identity(tmp_path):
    grid = {"lower": [-8.0], "upper": [8.0], "shape": (512,)}
    data = save_measure(discretize_gaussian(GaussianMeasure([0.0], [[1.0]]), **grid), tmp_path / "data.json")
    prior = save_measure(discretize_gaussian(GaussianMeasure([0.0], [[4.0]]), **grid), tmp_path / "prior.json")
    truth = save_measure(discretize_gaussian(GaussianMeasure([0.3], [[1.0]]), **grid), tmp_path / "truth.json")
    forward_map = save_map(LinearForwardMap([[1.0]]), tmp_path / "map.json")
    stdout = StringIO()
    call_command(
        "regularize",
        "--pair", "kl",
        "--map", str(forward_map),
        "--data", str(data),
        "--prior", str(prior),
        "--truth", str(truth),
        "--alpha", "1.0",
        stdout=stdout,
    )
    record = json.loads(stdout.getvalue())
    assert record["identity"]["residual"] <= 1e-4
    assert record["normalization_c"] >= 1.0


def test_kl_pair_needs_a_prior(scalar_files):
    with pytest.raises(CommandError) as excinfo:
        call_command(
            "regularize", "--pair", "kl", "--map", str(scalar_files["map"]), "--data", str(scalar_files["data"]),
        )
    assert excinfo.value.returncode == EXIT_CONFIG_ERROR


def test_sweep_prints_twelve_rows(scalar_files):
    stdout = StringIO()
    call_command(
        "regularize_sweep",
        "--map", str(scalar_files["map"]),
        "--truth", str(scalar_files["truth"]),
        "--data", str(scalar_files["data"]),
        "--quiet",
        stdout=stdout,
    )
    frame = pd.read_csv(StringIO(stdout.getvalue()))
    assert list(frame.columns) == ["alpha", "error_w2", "noise_term", "reg_term", "bound"]
    assert len(frame) == 12


def test_sweep_rejects_bad_weights(tmp_path, scalar_files):
    with pytest.raises(CommandError) as excinfo:
        call_command(
            "regularize_sweep",
            "--map", str(scalar_files["map"]),
            "--truth", str(scalar_files["truth"]),
            "--data", str(scalar_files["data"]),
            "--alphas", "0.1,-1",
            "--out", str(tmp_path / "sweep.csv"),
        )
    assert excinfo.value.returncode == EXIT_CONFIG_ERROR
