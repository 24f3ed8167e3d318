# Local application imports
from apps.experiments.types.config import ExperimentConfig, ExperimentKind
from apps.experiments.types.manifest import RunManifest, Verdict
from apps.experiments.types.plot import PLOT_COLUMNS, PlotKind

# Exports
__all__ = ["PLOT_COLUMNS", "ExperimentConfig", "ExperimentKind", "PlotKind", "RunManifest", "Verdict"]
