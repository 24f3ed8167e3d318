# Standard library imports
from io import StringIO

# Third-party imports
import numpy as np
import pandas as pd
import pytest
from django.core.management import CommandError, call_command

# Local application imports
from apps.common.management import EXIT_CONFIG_ERROR
from apps.maps.types import LinearForwardMap
from apps.maps.utils import save_map
from apps.measures.types import GaussianMeasure, ParticleMeasure
from apps.measures.utils import load_measure, save_measure


@pytest.fixture
def weak_map(tmp_path):
    return save_map(LinearForwardMap(np.diag([1.0, 0.1])), tmp_path / "map.json")


def test_invert_writes_the_reconstruction(tmp_path, weak_map):
    data = save_measure(ParticleMeasure([[1.0, 1.0]], [1.0]), tmp_path / "data.csv")
    call_command("invert", "--map", str(weak_map), "--data", str(data), "--out", str(tmp_path / "u.csv"), "--quiet")
    np.testing.assert_allclose(load_measure(tmp_path / "u.csv").points, [[1.0, 10.0]])


def test_stability_writes_the_report_columns(tmp_path, weak_map):
    data = save_measure(GaussianMeasure(np.zeros(2), np.eye(2)), tmp_path / "data.json")
    out = tmp_path / "report.csv"
    call_command(
        "stability", "--map", str(weak_map), "--data", str(data), "--perturb", "0.1,0.2,0.4", "--out", str(out),
    )
    frame = pd.read_csv(out)
    assert list(frame.columns) == ["perturbation", "input_distance", "output_distance", "bound", "satisfied"]
    np.testing.assert_allclose(frame["output_distance"] / frame["input_distance"], 10.0, rtol=1e-6)
    assert frame["satisfied"].all()


def test_stability_prints_csv_without_an_output(tmp_path, weak_map):
    data = save_measure(GaussianMeasure(np.zeros(2), np.eye(2)), tmp_path / "data.json")
    stdout = StringIO()
    call_command("stability", "--map", str(weak_map), "--data", str(data), "--metric", "kl", stdout=stdout)
    assert stdout.getvalue().splitlines()[0].startswith("perturbation,")


def test_stability_rejects_non_gaussian_data(tmp_path, weak_map):
    data = save_measure(ParticleMeasure([[0.0, 0.0]], [1.0]), tmp_path / "data.csv")
    with pytest.raises(CommandError) as excinfo:
        call_command("stability", "--map", str(weak_map), "--data", str(data))
    assert excinfo.value.returncode == EXIT_CONFIG_ERROR


def test_bad_levels_are_a_config_error(tmp_path, weak_map):
    data = save_measure(GaussianMeasure(np.zeros(2), np.eye(2)), tmp_path / "data.json")
    with pytest.raises(CommandError) as excinfo:
        call_command("stability", "--map", str(weak_map), "--data", str(data), "--perturb", "0.1,x")
    assert excinfo.value.returncode == EXIT_CONFIG_ERROR
