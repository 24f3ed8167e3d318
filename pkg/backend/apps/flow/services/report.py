# Standard library imports
from dataclasses import asdict
from pathlib import Path
from typing import Any

# Third-party imports
import numpy as np
from numpy.typing import ArrayLike

# Local application imports
from apps.common.utils import write_csv, write_json
from apps.divergences.types import FDivergenceName
from apps.flow.services.diagnostics import certify_decay, classify_equilibrium, decay_rate_bound
from apps.flow.types import FlowConfig, FlowObjective, FlowScheme, FlowTrace
from apps.maps.types import LinearForwardMap
from apps.measures.types import GaussianMeasure, Measure, ParticleMeasure
from apps.measures.utils import save_measure


# Recorded indices closest to requested times
def snapshot_indices(trace: FlowTrace, times: ArrayLike) -> list[int]:
    """Return the index of the recorded time nearest to each requested time.

    Args:
        trace (FlowTrace): The trace.
        times (ArrayLike): Requested times.

    Returns:
        list[int]: Distinct indices in increasing order.
    """

    requested = np.asarray(times, dtype=float).reshape(-1)
    nearest = {int(np.argmin(np.abs(trace.times - time))) for time in requested}
    return sorted(nearest)


# JSON report of a finished run
def summarize_flow(trace: FlowTrace, cfg: FlowConfig, target_law: Measure) -> tuple[dict[str, Any], bool]:
    """Build the report of a run and its overall verdict.

    The equilibrium is classified for linear maps with a Gaussian target law.
    The decay certificate applies in addition to KL runs of the f-divergence
    objective on the grid and Gaussian schemes.

    Args:
        trace (FlowTrace): The trace.
        cfg (FlowConfig): Settings of the run.
        target_law (Measure): Target as configured, before any discretization.

    Returns:
        tuple[dict[str, Any], bool]: The report and whether every verdict passed.
    """

    report: dict[str, Any] = {
        "scheme": str(cfg.scheme),
        "objective": str(cfg.objective),
        "divergence": str(cfg.divergence.name),
        "reduced": trace.reduced,
        "valid": trace.valid,
        "clamped_mass": trace.clamped_mass,
        "final_time": float(trace.times[-1]),
        "final_kl": float(trace.kl_to_target[-1]),
        "final_w2": float(trace.w2_to_target[-1]),
        "decay_fit": {**asdict(trace.decay_fit), "defined": trace.decay_fit.defined},
        "classification": None,
        "rate_bound": None,
        "certificate": None,
    }
    passed = trace.valid
    linear_gaussian = isinstance(cfg.forward_map, LinearForwardMap) and isinstance(target_law, GaussianMeasure)

    # Conditional or marginal equilibrium
    if linear_gaussian:
        classification = classify_equilibrium(trace, cfg.forward_map, target_law)
        report["classification"] = {
            "label": str(classification.label),
            "conditional_distance": classification.conditional_distance,
            "marginal_distance": classification.marginal_distance,
        }

    # Certified exponential decay
    certifiable = (
        linear_gaussian
        and cfg.objective is FlowObjective.F_DIVERGENCE
        and cfg.divergence.name is FDivergenceName.KL
        and cfg.scheme in (FlowScheme.GRID_FOKKER_PLANCK, FlowScheme.GAUSSIAN_ODE)
    )
    if certifiable:
        rate = decay_rate_bound(cfg.forward_map, target_law)
        certificate = certify_decay(trace, rate)
        report["rate_bound"] = rate
        report["certificate"] = asdict(certificate)
        passed = passed and certificate.satisfied
    return report, passed


# Files of a finished run
def write_flow_outputs(
    out: Path,
    trace: FlowTrace,
    report: dict[str, Any],
    snapshot_times: ArrayLike,
) -> list[Path]:
    """Write ``trace.csv``, the snapshots nearest to ``snapshot_times`` and ``report.json``.

    Particle snapshots are written as CSV, the other carriers as JSON.

    Args:
        out (Path): Output directory.
        trace (FlowTrace): The trace.
        report (dict[str, Any]): Report from ``summarize_flow``.
        snapshot_times (ArrayLike): Requested snapshot times.

    Returns:
        list[Path]: The written files.
    """

    written = [write_csv(out / "trace.csv", trace.as_frame())]
    for index in snapshot_indices(trace, snapshot_times):
        snapshot = trace.snapshots[index]
        suffix = "csv" if isinstance(snapshot, ParticleMeasure) else "json"
        written.append(save_measure(snapshot, out / f"snapshot_{index:04d}.{suffix}"))
    written.append(write_json(out / "report.json", report))
    return written
