# Standard library imports
import math
from collections.abc import Callable
from pathlib import Path

# Third-party imports
import numpy as np
import pandas as pd

# Local application imports
from apps.common.utils import derive_seed, get_setting, write_csv, write_json
from apps.divergences.services import measure_distance, wasserstein_distance
from apps.divergences.types import FDivergenceSpec
from apps.experiments.services.plots import density_frame, emit_plot
from apps.experiments.types import ExperimentConfig, ExperimentKind, PlotKind, Verdict
from apps.flow.services import classify_equilibrium, run_flow, summarize_flow, write_flow_outputs
from apps.flow.types import MARGIN_FACTOR, EquilibriumLabel, FlowConfig, FlowObjective, FlowScheme, StateDensity
from apps.inversion.services import direct_invert, stability_sweep
from apps.inversion.types import STABILITY_COLUMNS
from apps.measures.services import second_moment
from apps.measures.types import GridMeasure, Measure, ParticleMeasure
from apps.measures.utils import save_measure
from apps.variational.services import balanced_alpha, tikhonov_sweep

# Columns of the equilibrium contrast table
CONTRAST_COLUMNS = ["objective", "label", "conditional_distance", "marginal_distance"]

# Equilibrium each objective is expected to reach
EXPECTED_EQUILIBRIA = {"kl": EquilibriumLabel.CONDITIONAL, "w2": EquilibriumLabel.MARGINAL}

# Signature of a kind runner
KindRunner = Callable[[ExperimentConfig, Path], list[Verdict]]


# File name of a measure artifact
def measure_filename(stem: str, measure: Measure) -> str:
    """Return ``stem.csv`` for particle clouds and ``stem.json`` otherwise.

    Args:
        stem (str): File stem.
        measure (Measure): The measure.

    Returns:
        str: The file name.
    """

    return f"{stem}.csv" if isinstance(measure, ParticleMeasure) else f"{stem}.json"


# Distance between two measures
def run_distance(cfg: ExperimentConfig, out: Path) -> list[Verdict]:
    """Write ``distance.json``; check the value when an expected one is configured."""

    params = cfg.parameters
    record = measure_distance(params["metric"], params["mu"], params["nu"], epsilon=params["sinkhorn_eps"])
    write_json(out / "distance.json", record)

    # Optional acceptance check
    if params["expected"] is None:
        return []
    value = float(record["value"])
    passed = abs(value - params["expected"]) <= params["tolerance"]
    return [Verdict("distance", passed, value, params["expected"])]


# Direct inversion
def run_invert(cfg: ExperimentConfig, out: Path) -> list[Verdict]:
    """Write the reconstruction; compare it with the truth when one is configured."""

    params = cfg.parameters
    solution = direct_invert(params["map"], params["data"], sample_count=params["samples"], seed=cfg.seed)
    save_measure(solution, out / measure_filename("solution", solution))

    # Optional acceptance check
    if params["truth"] is None:
        return []
    error = float(wasserstein_distance(solution, params["truth"])["value"])
    return [Verdict("solution_error", error <= params["tolerance"], error, params["tolerance"])]


# Stability sweep
def run_stability(cfg: ExperimentConfig, out: Path) -> list[Verdict]:
    """Write ``stability.csv`` and its ratio plot; one bound check per level."""

    params = cfg.parameters
    reports = stability_sweep(
        params["map"],
        params["data"],
        params["perturbations"],
        metric=params["metric"],
        family=params["family"],
        workers=params["workers"],
    )
    frame = pd.DataFrame([report.as_row() for report in reports], columns=STABILITY_COLUMNS)
    table = write_csv(out / "stability.csv", frame)
    emit_plot(table, PlotKind.STABILITY_RATIO, out / "stability_ratio.svg")
    return [
        Verdict(f"stability_bound@{report.level:g}", report.satisfied, report.output_distance, report.bound)
        for report in reports
    ]


# Tikhonov weight sweep
def run_regularize_sweep(cfg: ExperimentConfig, out: Path) -> list[Verdict]:
    """Write ``sweep.csv``, ``balance.json`` and the L-curve.

    With two or more weights, checks that the weight of least error lies within
    one grid step (in log10) of the balancing weight.
    """

    params = cfg.parameters
    forward_map, truth, data = params["map"], params["truth"], params["data"]
    alphas = np.sort(np.asarray(params["alphas"], dtype=float))

    # Sweep and plot
    frame = tikhonov_sweep(forward_map, truth, data, alphas)
    table = write_csv(out / "sweep.csv", frame)
    emit_plot(table, PlotKind.L_CURVE, out / "l_curve.svg")

    # Balancing weight of the two bound terms
    noise = float(wasserstein_distance(truth, data)["value"])
    moment = float(second_moment(truth))
    balance = balanced_alpha(forward_map, noise, moment) if moment > 0 else 0.0
    best = float(frame.loc[frame["error_w2"].idxmin(), "alpha"])
    write_json(
        out / "balance.json",
        {"noise": noise, "second_moment": moment, "balanced_alpha": balance, "best_alpha": best},
    )

    # Within one grid step of the balance
    if alphas.shape[0] < 2 or balance <= 0:  # noqa: PLR2004
        return []
    step = float(np.max(np.diff(np.log10(alphas))))
    gap = abs(math.log10(best / balance))
    detail = f"best alpha {best:.6g}, balanced alpha {balance:.6g}"
    return [Verdict("balanced_alpha", gap <= step * (1.0 + 1e-9), gap, step, detail)]


# One flow run
def run_flow_convergence(cfg: ExperimentConfig, out: Path) -> list[Verdict]:
    """Write the flow outputs and the decay curve; check validity and the certificate."""

    params = cfg.parameters
    flow_cfg = params["config"]
    trace = run_flow(params["init"], flow_cfg)
    report, _ = summarize_flow(trace, flow_cfg, params["target"])
    write_flow_outputs(out, trace, report, params["snapshot_times"])
    emit_plot(out / "trace.csv", PlotKind.DECAY_CURVE, out / "decay_curve.svg")

    # Final density of grid runs
    final = trace.final_state
    if isinstance(final, GridMeasure) and final.dim <= 2:  # noqa: PLR2004
        table = write_csv(out / "final_density.csv", density_frame(final))
        emit_plot(table, PlotKind.DENSITY_HEATMAP, out / "final_density.svg")

    # No mass lost to clamping, then the certificate when it applies
    limit = float(get_setting("STOCHINVERSE_CLAMP_MASS_LIMIT", 1e-6))
    verdicts = [Verdict("trace_valid", trace.valid, trace.clamped_mass, limit)]
    certificate = report["certificate"]
    if certificate is not None:
        verdicts.append(Verdict("decay_certificate", certificate["satisfied"], certificate["worst_ratio"], 1.0))
    return verdicts


# KL and W2 flows side by side
def run_equilibrium_contrast(cfg: ExperimentConfig, out: Path) -> list[Verdict]:
    """Run the KL and W2 particle flows and classify where each one settles.

    Writes ``<objective>/trace.csv``, ``<objective>/final.csv`` and ``contrast.csv``.
    The KL flow must settle at the conditional, the W2 flow at the marginal.
    """

    params = cfg.parameters
    forward_map, target = params["map"], params["target"]
    init_seed = derive_seed(cfg.seed, "experiments.init")
    init = ParticleMeasure.uniform(params["init"].quasi_sample(params["particles"], init_seed))
    common = {
        "divergence": FDivergenceSpec.kl(),
        "forward_map": forward_map,
        "target": target,
        "dt": params["dt"],
        "t_max": params["t_max"],
        "scheme": FlowScheme.PARTICLE_EULER,
        "record_every": params["record_every"],
        "seed": cfg.seed,
    }
    runs = {
        "kl": FlowConfig(**common, state_density=StateDensity.GAUSSIAN_FIT),
        "w2": FlowConfig(**common, objective=FlowObjective.WASSERSTEIN, target_samples=params["target_samples"]),
    }

    # Both flows from the same atoms
    rows, verdicts = [], []
    for name, flow_cfg in runs.items():
        trace = run_flow(init, flow_cfg)
        write_csv(out / name / "trace.csv", trace.as_frame())
        save_measure(trace.final_state, out / name / measure_filename("final", trace.final_state))

        # Nearer candidate against the margin
        classification = classify_equilibrium(trace, forward_map, target)
        rows.append(
            {
                "objective": name,
                "label": str(classification.label),
                "conditional_distance": classification.conditional_distance,
                "marginal_distance": classification.marginal_distance,
            },
        )
        expected = EXPECTED_EQUILIBRIA[name]
        if expected is EquilibriumLabel.CONDITIONAL:
            value, other = classification.conditional_distance, classification.marginal_distance
        else:
            value, other = classification.marginal_distance, classification.conditional_distance
        verdicts.append(Verdict(f"{name}_{expected}", classification.label is expected, value, MARGIN_FACTOR * other))

    write_csv(out / "contrast.csv", pd.DataFrame(rows, columns=CONTRAST_COLUMNS))
    return verdicts


# Runner per kind
KIND_RUNNERS: dict[ExperimentKind, KindRunner] = {
    ExperimentKind.DISTANCE: run_distance,
    ExperimentKind.INVERT: run_invert,
    ExperimentKind.STABILITY: run_stability,
    ExperimentKind.REGULARIZE_SWEEP: run_regularize_sweep,
    ExperimentKind.FLOW_CONVERGENCE: run_flow_convergence,
    ExperimentKind.EQUILIBRIUM_CONTRAST: run_equilibrium_contrast,
}
