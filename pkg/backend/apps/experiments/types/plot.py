# Standard library imports
from enum import StrEnum


# Figures the plot emitter draws
class PlotKind(StrEnum):
    """Plot kinds and the table each one reads."""

    DECAY_CURVE = "decayCurve"
    L_CURVE = "lCurve"
    STABILITY_RATIO = "stabilityRatio"
    DENSITY_HEATMAP = "densityHeatmap"

    @property
    def columns(self) -> list[str]:
        """Columns the input table must have."""
        return PLOT_COLUMNS[self]


# Required columns per plot kind
PLOT_COLUMNS = {
    PlotKind.DECAY_CURVE: ["t", "kl"],
    PlotKind.L_CURVE: ["alpha", "error_w2"],
    PlotKind.STABILITY_RATIO: ["perturbation", "output_distance", "bound"],
    PlotKind.DENSITY_HEATMAP: ["x", "y", "density"],
}
