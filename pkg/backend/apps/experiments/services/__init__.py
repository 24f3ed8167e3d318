# Local application imports
from apps.experiments.services.batch import BatchItem, discover_configs, plan_outputs, run_batch
from apps.experiments.services.kinds import (
    CONTRAST_COLUMNS,
    EXPECTED_EQUILIBRIA,
    KIND_RUNNERS,
    measure_filename,
    run_distance,
    run_equilibrium_contrast,
    run_flow_convergence,
    run_invert,
    run_regularize_sweep,
    run_stability,
)
from apps.experiments.services.plots import build_figure, density_frame, emit_plot, read_plot_table, save_svg
from apps.experiments.services.runner import MANIFEST_NAME, load_experiment, run_experiment, validate_experiment

# Exports
__all__ = [
    "CONTRAST_COLUMNS",
    "EXPECTED_EQUILIBRIA",
    "KIND_RUNNERS",
    "MANIFEST_NAME",
    "BatchItem",
    "build_figure",
    "density_frame",
    "discover_configs",
    "emit_plot",
    "load_experiment",
    "measure_filename",
    "plan_outputs",
    "read_plot_table",
    "run_batch",
    "run_distance",
    "run_equilibrium_contrast",
    "run_experiment",
    "run_flow_convergence",
    "run_invert",
    "run_regularize_sweep",
    "run_stability",
    "save_svg",
    "validate_experiment",
]
