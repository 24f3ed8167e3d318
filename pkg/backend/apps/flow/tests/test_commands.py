# Standard library imports
import json
from io import StringIO

# Third-party imports
import pandas as pd
import pytest
from django.core.management import CommandError, call_command

# Local application imports
from apps.common.management import EXIT_CONFIG_ERROR
from apps.common.utils import read_json, write_json
from apps.flow.serializers import FlowConfigSerializer
from apps.flow.types import FlowScheme
from apps.measures.types import GaussianMeasure, GridMeasure, ParticleMeasure
from apps.measures.utils import load_measure, save_measure

GAUSSIAN_RUN = {
    "map": {"matrix": [[1.0]]},
    "target": {"type": "gaussian", "mean": [0.0], "cov": [[1.0]]},
    "init": {"type": "gaussian", "mean": [2.0], "cov": [[1.0]]},
    "scheme": "gaussian_ode",
    "dt": 0.01,
    "t_max": 1.0,
    "record_every": 10,
    "snapshot_times": [0.0, 1.0],
}


def write_config(tmp_path, payload):
    return write_json(tmp_path / "flow.json", payload)


def test_gaussian_run_writes_trace_snapshots_and_report(tmp_path):
    out = tmp_path / "run"
    call_command("flow", "--config", str(write_config(tmp_path, GAUSSIAN_RUN)), "--out", str(out), "--quiet")

    trace = pd.read_csv(out / "trace.csv")
    assert list(trace.columns) == ["t", "kl", "w2"]
    assert len(trace) == 11
    assert trace["kl"].iloc[0] == pytest.approx(2.0)

    report = read_json(out / "report.json")
    assert report["certificate"]["satisfied"] is True
    assert report["rate_bound"] == pytest.approx(2.0)
    assert report["decay_fit"]["rate"] == pytest.approx(-2.0, rel=1e-4)

    first, last = load_measure(out / "snapshot_0000.json"), load_measure(out / "snapshot_0010.json")
    assert isinstance(first, GaussianMeasure)
    assert abs(last.mean[0]) < abs(first.mean[0])


def test_report_is_printed_without_out(tmp_path):
    stdout = StringIO()
    call_command("flow", "--config", str(write_config(tmp_path, GAUSSIAN_RUN)), stdout=stdout)
    record = json.loads(stdout.getvalue())
    assert record["scheme"] == "gaussian_ode"
    assert record["valid"] is True


def test_particle_run_saves_csv_snapshots(tmp_path):
    payload = {
        **GAUSSIAN_RUN,
        "scheme": "particle_euler",
        "state_density": "gaussian_fit",
        "init_samples": 64,
        "t_max": 0.1,
        "snapshot_times": [0.1],
    }
    out = tmp_path / "run"
    call_command("flow", "--config", str(write_config(tmp_path, payload)), "--out", str(out), "--quiet")
    snapshot = load_measure(out / "snapshot_0001.csv")
    assert isinstance(snapshot, ParticleMeasure)
    assert snapshot.size == 64


def test_measure_files_resolve_against_the_config(tmp_path):
    save_measure(GaussianMeasure([0.0], [[1.0]]), tmp_path / "target.json")
    payload = {**GAUSSIAN_RUN, "target": {"file": "target.json"}}
    stdout = StringIO()
    call_command("flow", "--config", str(write_config(tmp_path, payload)), stdout=stdout)
    assert json.loads(stdout.getvalue())["final_kl"] < 2.0


@pytest.mark.parametrize(
    "changes",
    [
        {"dt": -0.1},
        {"t_max": 0.001},
        {"scheme": "leapfrog"},
        {"target": {"type": "gaussian", "mean": [0.0], "cov": [[-1.0]]}},
        {"map": {"matrix": "identity"}},
        {"scheme": "grid_fokker_planck"},
        {"scheme": "grid_fokker_planck", "grid": {"lower": [-8.0], "upper": [8.0], "shape": [512]}, "dt": 0.01},
        {"init": {"type": "particles", "points": [[0.0], [1.0]], "weights": [0.5, 0.5]}},
        {"divergence": "tv"},
        {"scheme": "particle_euler"},
        {"scheme": "particle_euler", "bandwidth": -0.5},
        {"scheme": "particle_euler", "objective": "wasserstein", "init_samples": 2000, "target_samples": 1000},
    ],
)
def test_invalid_configs_exit_with_config_errors(tmp_path, changes):
    with pytest.raises(CommandError) as excinfo:
        call_command("flow", "--config", str(write_config(tmp_path, {**GAUSSIAN_RUN, **changes})), "--quiet")
    assert excinfo.value.returncode == EXIT_CONFIG_ERROR


def test_missing_config_file(tmp_path):
    with pytest.raises(CommandError) as excinfo:
        call_command("flow", "--config", str(tmp_path / "absent.json"), "--quiet")
    assert excinfo.value.returncode == EXIT_CONFIG_ERROR


def test_grid_runs_discretize_gaussians():
    payload = {
        **GAUSSIAN_RUN,
        "scheme": "grid_fokker_planck",
        "grid": {"lower": [-8.0], "upper": [8.0], "shape": [128]},
        "dt": 0.002,
    }
    serializer = FlowConfigSerializer(data=payload, context={"seed": 0})
    assert serializer.is_valid(), serializer.errors
    cfg = serializer.validated_data["config"]
    assert cfg.scheme is FlowScheme.GRID_FOKKER_PLANCK
    assert isinstance(cfg.target, GridMeasure)
    assert isinstance(serializer.validated_data["init"], GridMeasure)
    assert isinstance(serializer.validated_data["target"], GaussianMeasure)


def test_rank_dimension_grids_are_reduced():
    payload = {
        **GAUSSIAN_RUN,
        "map": {"matrix": [[1.0], [0.0]]},
        "target": {"type": "gaussian", "mean": [1.0, 2.0], "cov": [[1.0, 0.5], [0.5, 1.0]]},
        "init": {"type": "gaussian", "mean": [2.0, 0.0], "cov": [[1.0, 0.0], [0.0, 1.0]]},
        "scheme": "grid_fokker_planck",
        "grid": {"lower": [-6.0], "upper": [6.0], "shape": [96]},
        "dt": 0.002,
    }
    serializer = FlowConfigSerializer(data=payload, context={"seed": 0})
    assert serializer.is_valid(), serializer.errors
    assert serializer.validated_data["config"].target.dim == 1
