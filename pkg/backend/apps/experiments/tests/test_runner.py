# Standard library imports
import copy

# Third-party imports
import pandas as pd
import pytest

# Local application imports
from apps.common.exceptions import ConfigError
from apps.common.utils import read_json
from apps.experiments.services import run_experiment, validate_experiment
from apps.measures.types import GaussianMeasure
from apps.measures.utils import load_measure

CLOUD = {"type": "particles", "points": [[0.0], [1.0], [3.0]], "weights": [0.2, 0.3, 0.5]}
STANDARD = {"type": "gaussian", "mean": [0.0], "cov": [[1.0]]}

DISTANCE_RUN = {
    "name": "same-cloud",
    "kind": "distance",
    "seed": 7,
    "parameters": {"mu": CLOUD, "nu": CLOUD, "expected": 0.0},
}

# Canonical weight sweep, the two bound terms balance at alpha = 0.2
SWEEP_RUN = {
    "name": "canonical-sweep",
    "kind": "regularizeSweep",
    "parameters": {
        "map": {"matrix": [[2.0]]},
        "truth": {"type": "gaussian", "mean": [0.0], "cov": [[4.0]]},
        "data": {"type": "gaussian", "mean": [0.2], "cov": [[4.0]]},
    },
}

# Gaussian flow from N(2, 1) towards N(0, 1)
FLOW_RUN = {
    "name": "ou-decay",
    "kind": "flowConvergence",
    "parameters": {
        "map": {"matrix": [[1.0]]},
        "target": STANDARD,
        "init": {"type": "gaussian", "mean": [2.0], "cov": [[1.0]]},
        "scheme": "gaussian_ode",
        "dt": 0.01,
        "t_max": 1.0,
        "record_every": 10,
        "snapshot_times": [0.0, 1.0],
    },
}


def run(payload, out):
    return run_experiment(validate_experiment(payload, output_dir=out))


def verdicts_by_name(manifest):
    return {verdict.criterion: verdict for verdict in manifest.verdicts}


def test_distance_between_identical_clouds(tmp_path):
    out = tmp_path / "run"
    manifest = run(DISTANCE_RUN, out)
    assert manifest.passed
    assert [verdict.criterion for verdict in manifest.verdicts] == ["execution", "distance"]
    assert read_json(out / "distance.json")["value"] == pytest.approx(0.0, abs=1e-9)
    assert manifest.artifacts == ["distance.json", "manifest.json"]
    assert sorted(path.name for path in out.iterdir()) == manifest.artifacts


def test_manifest_file_matches_the_result(tmp_path):
    out = tmp_path / "run"
    manifest = run(DISTANCE_RUN, out)
    written = read_json(out / "manifest.json")
    assert written["name"] == "same-cloud"
    assert written["kind"] == "distance"
    assert written["seed"] == 7
    assert written["config_hash"] == manifest.config_hash
    assert "numpy" in written["versions"]
    assert written["wall_clock_seconds"] >= 0.0
    assert all(verdict["passed"] for verdict in written["verdicts"])


def test_invert_reconstructs_the_truth(tmp_path):
    payload = {
        "name": "scalar-invert",
        "kind": "invert",
        "parameters": {
            "map": {"matrix": [[2.0]]},
            "data": {"type": "gaussian", "mean": [2.0], "cov": [[4.0]]},
            "truth": {"type": "gaussian", "mean": [1.0], "cov": [[1.0]]},
        },
    }
    out = tmp_path / "run"
    manifest = run(payload, out)
    assert verdicts_by_name(manifest)["solution_error"].passed
    solution = load_measure(out / "solution.json")
    assert isinstance(solution, GaussianMeasure)
    assert solution.mean[0] == pytest.approx(1.0)


def test_stability_checks_every_level(tmp_path):
    payload = {
        "name": "scalar-stability",
        "kind": "stability",
        "parameters": {"map": {"matrix": [[2.0]]}, "data": STANDARD, "perturbations": [0.1, 0.4]},
    }
    out = tmp_path / "run"
    manifest = run(payload, out)
    assert manifest.passed
    assert set(verdicts_by_name(manifest)) == {"execution", "stability_bound@0.1", "stability_bound@0.4"}
    assert len(pd.read_csv(out / "stability.csv")) == 2
    assert (out / "stability_ratio.svg").is_file()


def test_sweep_minimum_is_near_the_balanced_alpha(tmp_path):
    out = tmp_path / "run"
    manifest = run(SWEEP_RUN, out)
    assert manifest.passed
    assert len(pd.read_csv(out / "sweep.csv")) == 12
    balance = read_json(out / "balance.json")
    assert balance["noise"] == pytest.approx(0.2)
    assert balance["second_moment"] == pytest.approx(4.0)
    assert "balanced_alpha" in verdicts_by_name(manifest)
    assert manifest.artifacts == ["balance.json", "l_curve.svg", "manifest.json", "sweep.csv"]


def test_reruns_write_identical_tables(tmp_path):
    run(SWEEP_RUN, tmp_path / "first")
    run(SWEEP_RUN, tmp_path / "second")
    assert (tmp_path / "first" / "sweep.csv").read_bytes() == (tmp_path / "second" / "sweep.csv").read_bytes()
    assert (tmp_path / "first" / "l_curve.svg").read_bytes() == (tmp_path / "second" / "l_curve.svg").read_bytes()


def test_gaussian_flow_meets_its_certificate(tmp_path):
    out = tmp_path / "run"
    manifest = run(FLOW_RUN, out)
    assert manifest.passed
    assert set(verdicts_by_name(manifest)) == {"execution", "trace_valid", "decay_certificate"}
    assert {"trace.csv", "report.json", "decay_curve.svg", "snapshot_0000.json"} <= set(manifest.artifacts)


def test_grid_flow_draws_the_final_density(tmp_path):
    payload = copy.deepcopy(FLOW_RUN)
    payload["parameters"].update(
        {
            "scheme": "grid_fokker_planck",
            "grid": {"lower": [-8.0], "upper": [8.0], "shape": [128]},
            "dt": 0.002,
            "t_max": 0.2,
            "snapshot_times": [],
        },
    )
    out = tmp_path / "run"
    manifest = run(payload, out)
    assert verdicts_by_name(manifest)["trace_valid"].passed
    assert len(pd.read_csv(out / "final_density.csv")) == 128
    assert (out / "final_density.svg").is_file()


@pytest.mark.slow
def test_kl_and_w2_flows_settle_apart(tmp_path):
    payload = {
        "name": "contrast",
        "kind": "equilibriumContrast",
        "parameters": {
            "map": {"matrix": [[1.0], [0.0]]},
            "target": {"type": "gaussian", "mean": [1.0, 2.0], "cov": [[1.0, 0.5], [0.5, 1.0]]},
            "init": {"type": "gaussian", "mean": [2.0], "cov": [[1.0]]},
            "particles": 1024,
            "dt": 0.05,
            "t_max": 8.0,
        },
    }
    out = tmp_path / "run"
    manifest = run(payload, out)
    assert manifest.passed
    assert {"kl_conditional", "w2_marginal"} <= set(verdicts_by_name(manifest))
    contrast = pd.read_csv(out / "contrast.csv")
    assert list(contrast["label"]) == ["conditional", "marginal"]
    assert (out / "kl" / "final.csv").is_file()


def test_numerical_failures_become_a_verdict(tmp_path):
    payload = copy.deepcopy(DISTANCE_RUN)
    payload["parameters"]["mu"] = STANDARD
    out = tmp_path / "run"
    manifest = run(payload, out)
    assert not manifest.passed
    execution = manifest.verdicts[0]
    assert execution.criterion == "execution"
    assert execution.detail.startswith("UnsupportedCarrierError")
    assert manifest.artifacts == ["manifest.json"]


def test_unrelated_directories_are_not_replaced(tmp_path):
    out = tmp_path / "run"
    out.mkdir()
    (out / "notes.txt").write_text("keep", encoding="utf-8")
    with pytest.raises(ConfigError):
        run(DISTANCE_RUN, out)
    assert (out / "notes.txt").read_text(encoding="utf-8") == "keep"


def test_reruns_replace_previous_outputs(tmp_path):
    out = tmp_path / "run"
    run(DISTANCE_RUN, out)
    (out / "stale.txt").write_text("old", encoding="utf-8")
    manifest = run(DISTANCE_RUN, out)
    assert not (out / "stale.txt").exists()
    assert sorted(path.name for path in out.iterdir()) == manifest.artifacts
    assert [path.name for path in tmp_path.iterdir()] == ["run"]


def test_config_hash_depends_on_the_seed(tmp_path):
    first = run(DISTANCE_RUN, tmp_path / "first")
    second = run({**DISTANCE_RUN, "seed": 8}, tmp_path / "second")
    again = run(DISTANCE_RUN, tmp_path / "again")
    assert first.config_hash != second.config_hash
    assert first.config_hash == again.config_hash
