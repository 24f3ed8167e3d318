# Standard library imports
import json
from io import StringIO

# Third-party imports
import pytest
from django.core.management import CommandError, call_command

# Local application imports
from apps.common.management import EXIT_CONFIG_ERROR, EXIT_VERDICT_FAILURE
from apps.common.utils import read_json, write_json
from apps.experiments.tasks import run_experiment_file

CLOUD = {"type": "particles", "points": [[0.0], [1.0], [3.0]], "weights": [0.2, 0.3, 0.5]}

DISTANCE_RUN = {
    "name": "same-cloud",
    "kind": "distance",
    "parameters": {"mu": CLOUD, "nu": CLOUD, "expected": 0.0},
}

STABILITY_RUN = {
    "name": "scalar-stability",
    "kind": "stability",
    "parameters": {
        "map": {"matrix": [[2.0]]},
        "data": {"type": "gaussian", "mean": [0.0], "cov": [[1.0]]},
        "perturbations": [0.1, 0.2],
    },
}


@pytest.fixture
def batch_dir(tmp_path):
    directory = tmp_path / "configs"
    directory.mkdir()
    write_json(directory / "distance.json", DISTANCE_RUN)
    write_json(directory / "stability.json", STABILITY_RUN)
    return directory


def test_run_prints_the_manifest(tmp_path):
    config = write_json(tmp_path / "distance.json", {**DISTANCE_RUN, "seed": 5})
    out = tmp_path / "run"
    stdout = StringIO()
    call_command("experiment", "run", str(config), "--out", str(out), "--quiet", stdout=stdout)
    record = json.loads(stdout.getvalue())
    assert record["output_dir"] == str(out)
    assert record["seed"] == 5
    assert record["artifacts"] == ["distance.json", "manifest.json"]
    assert read_json(out / "manifest.json")["config_hash"] == record["config_hash"]


def test_seed_option_fills_missing_seeds(tmp_path):
    config = write_json(tmp_path / "distance.json", DISTANCE_RUN)
    out = tmp_path / "run"
    call_command("experiment", "run", str(config), "--seed", "9", "--out", str(out), "--quiet", stdout=StringIO())
    assert read_json(out / "manifest.json")["seed"] == 9


def test_invalid_config_exits_with_a_config_error(tmp_path):
    config = write_json(tmp_path / "bad.json", {**DISTANCE_RUN, "kind": "unknown"})
    with pytest.raises(CommandError) as excinfo:
        call_command("experiment", "run", str(config), "--out", str(tmp_path / "run"), "--quiet")
    assert excinfo.value.returncode == EXIT_CONFIG_ERROR
    assert not (tmp_path / "run").exists()


def test_failed_verdict_exits_with_one(tmp_path):
    payload = {**DISTANCE_RUN, "parameters": {**DISTANCE_RUN["parameters"], "expected": 1.0}}
    config = write_json(tmp_path / "distance.json", payload)
    out = tmp_path / "run"
    with pytest.raises(CommandError) as excinfo:
        call_command("experiment", "run", str(config), "--out", str(out), "--quiet", stdout=StringIO())
    assert excinfo.value.returncode == EXIT_VERDICT_FAILURE
    assert (out / "manifest.json").is_file()


def test_batch_runs_every_file(tmp_path, batch_dir):
    out = tmp_path / "runs"
    stdout = StringIO()
    call_command("experiment", "batch", str(batch_dir), "--jobs", "2", "--out", str(out), "--quiet", stdout=stdout)
    summary = json.loads(stdout.getvalue())
    assert [item["passed"] for item in summary] == [True, True]
    assert (out / "distance" / "manifest.json").is_file()
    assert (out / "stability" / "stability.csv").is_file()


def test_batch_dispatches_through_celery(tmp_path, batch_dir):
    out = tmp_path / "runs"
    stdout = StringIO()
    call_command("experiment", "batch", str(batch_dir), "--dispatch", "--out", str(out), "--quiet", stdout=stdout)
    assert all(item["passed"] for item in json.loads(stdout.getvalue()))


def test_batch_reports_invalid_files(tmp_path, batch_dir):
    (batch_dir / "broken.json").write_text("{", encoding="utf-8")
    out = tmp_path / "runs"
    stdout = StringIO()
    with pytest.raises(CommandError) as excinfo:
        call_command("experiment", "batch", str(batch_dir), "--out", str(out), "--quiet", stdout=stdout)
    assert excinfo.value.returncode == EXIT_CONFIG_ERROR
    summary = {item["config"].rsplit("/", 1)[-1]: item for item in json.loads(stdout.getvalue())}
    assert summary["broken.json"]["errors"] is not None
    assert summary["distance.json"]["passed"] is True
    assert (out / "distance" / "manifest.json").is_file()


def test_batch_rejects_colliding_outputs(tmp_path):
    directory = tmp_path / "configs"
    directory.mkdir()
    write_json(directory / "first.json", {**DISTANCE_RUN, "output_dir": "shared"})
    write_json(directory / "second.json", {**DISTANCE_RUN, "output_dir": "shared"})
    with pytest.raises(CommandError) as excinfo:
        call_command("experiment", "batch", str(directory), "--quiet")
    assert excinfo.value.returncode == EXIT_CONFIG_ERROR
    assert not (directory / "shared").exists()


def test_batch_needs_configurations(tmp_path):
    with pytest.raises(CommandError) as excinfo:
        call_command("experiment", "batch", str(tmp_path), "--quiet")
    assert excinfo.value.returncode == EXIT_CONFIG_ERROR


def test_task_returns_a_json_result(tmp_path):
    config = write_json(tmp_path / "distance.json", DISTANCE_RUN)
    result = run_experiment_file.apply(args=(str(config), 3, str(tmp_path / "run"))).get()
    assert result["errors"] is None
    assert result["manifest"]["seed"] == 3
    json.dumps(result)


def test_task_reports_invalid_files(tmp_path):
    result = run_experiment_file.apply(args=(str(tmp_path / "absent.json"),)).get()
    assert result["manifest"] is None
    assert "config" in result["errors"]
