# Standard library imports
import io
import logging
from pathlib import Path

# Third-party imports
import matplotlib as mpl
import numpy as np
import pandas as pd
from matplotlib.figure import Figure

# Local application imports
from apps.common.exceptions import SchemaError, UnsupportedCarrierError
from apps.common.utils import write_atomic
from apps.experiments.types import PlotKind
from apps.measures.types import GridMeasure

# Non-interactive backend, figures are only written to files
mpl.use("Agg")

# Stable element ids and plain text so repeated plots are byte identical
mpl.rcParams.update({"svg.hashsalt": "stochinverse", "svg.fonttype": "none"})

# Get the logger
logger = logging.getLogger(__name__)


# Read and check a plot table
def read_plot_table(csv: str | Path, kind: PlotKind | str) -> pd.DataFrame:
    """Read a CSV and check it has data rows and the columns of ``kind``.

    Args:
        csv (str | Path): Input table.
        kind (PlotKind | str): Plot kind.

    Returns:
        pd.DataFrame: The table with numeric required columns.

    Raises:
        SchemaError: If the file cannot be parsed, misses columns or has no rows.
    """

    kind = PlotKind(kind)
    try:
        frame = pd.read_csv(csv)
    except pd.errors.EmptyDataError:
        raise SchemaError(kind.columns, message="Input table is empty.") from None
    except (OSError, ValueError) as exc:
        raise SchemaError(message=f"Cannot read {csv}: {exc}") from None

    # Required columns, then at least one row
    missing = [column for column in kind.columns if column not in frame.columns]
    if missing:
        raise SchemaError(missing)
    if frame.empty:
        raise SchemaError(message="Input table has no data rows.")

    # Required columns must be numeric
    try:
        for column in kind.columns:
            frame[column] = pd.to_numeric(frame[column])
    except (TypeError, ValueError):
        raise SchemaError(message=f"Column {column!r} must be numeric.") from None
    return frame


# Decay of the divergence to the target
def _decay_curve(figure: Figure, frame: pd.DataFrame) -> None:
    axes = figure.add_subplot()
    axes.semilogy(frame["t"], frame["kl"], marker=".", label="KL")
    if "w2" in frame.columns:
        axes.semilogy(frame["t"], frame["w2"], linestyle="--", label="W2")
    axes.set_xlabel("t")
    axes.set_ylabel("distance to target")
    axes.legend()


# Error and bound terms against the weight
def _l_curve(figure: Figure, frame: pd.DataFrame) -> None:
    axes = figure.add_subplot()
    axes.loglog(frame["alpha"], frame["error_w2"], marker="o", label="error")
    for column in ("noise_term", "reg_term", "bound"):
        if column in frame.columns:
            axes.loglog(frame["alpha"], frame[column], linestyle="--", label=column.replace("_", " "))
    axes.set_xlabel("alpha")
    axes.set_ylabel("W2")
    axes.legend()


# Output distance relative to its bound
def _stability_ratio(figure: Figure, frame: pd.DataFrame) -> None:
    axes = figure.add_subplot()
    bound = frame["bound"].to_numpy(dtype=float)
    ratio = np.divide(
        frame["output_distance"].to_numpy(dtype=float),
        bound,
        out=np.full(bound.shape, np.nan),
        where=bound > 0,
    )
    axes.plot(frame["perturbation"], ratio, marker="o")
    axes.axhline(1.0, color="grey", linestyle="--")
    axes.set_xlabel("perturbation")
    axes.set_ylabel("output distance / bound")


# Density on a rectangular grid
def _density_heatmap(figure: Figure, frame: pd.DataFrame) -> None:
    try:
        table = frame.pivot(index="y", columns="x", values="density")
    except ValueError:
        raise SchemaError(message="Heatmap tables need one row per (x, y) cell.") from None
    values = table.to_numpy(dtype=float)

    # Colour bounds are the data range
    axes = figure.add_subplot()
    mesh = axes.pcolormesh(
        table.columns.to_numpy(dtype=float),
        table.index.to_numpy(dtype=float),
        values,
        shading="nearest",
        vmin=float(np.nanmin(values)),
        vmax=float(np.nanmax(values)),
    )
    figure.colorbar(mesh, ax=axes, label="density")
    axes.set_xlabel("x")
    axes.set_ylabel("y")


# Drawing function per kind
PLOTTERS = {
    PlotKind.DECAY_CURVE: _decay_curve,
    PlotKind.L_CURVE: _l_curve,
    PlotKind.STABILITY_RATIO: _stability_ratio,
    PlotKind.DENSITY_HEATMAP: _density_heatmap,
}


# Draw a checked table
def build_figure(frame: pd.DataFrame, kind: PlotKind | str) -> Figure:
    """Draw a table returned by ``read_plot_table``.

    Args:
        frame (pd.DataFrame): The table.
        kind (PlotKind | str): Plot kind.

    Returns:
        Figure: The figure, not attached to any GUI.
    """

    figure = Figure(figsize=(6.0, 4.0), layout="constrained")
    PLOTTERS[PlotKind(kind)](figure, frame)
    return figure


# Write a figure as SVG
def save_svg(figure: Figure, out: str | Path) -> Path:
    """Render ``figure`` as SVG and write it atomically.

    Args:
        figure (Figure): The figure.
        out (str | Path): Destination file.

    Returns:
        Path: The destination path.
    """

    buffer = io.BytesIO()
    figure.savefig(buffer, format="svg", metadata={"Date": None})
    return write_atomic(out, buffer.getvalue())


# Plot a CSV table
def emit_plot(csv: str | Path, kind: PlotKind | str, out: str | Path) -> Path:
    """Draw the figure of ``kind`` from a CSV table into an SVG file.

    Decay curves use a logarithmic y axis, L-curves logarithmic axes and
    heatmaps colour bounds equal to the data range.

    Args:
        csv (str | Path): Input table.
        kind (PlotKind | str): Plot kind.
        out (str | Path): Destination SVG file.

    Returns:
        Path: The destination path.

    Raises:
        SchemaError: If the table is empty or misses columns.
    """

    frame = read_plot_table(csv, kind)
    path = save_svg(build_figure(frame, kind), out)
    logger.info("Wrote %s plot %s", kind, path)
    return path


# Heatmap table of a grid measure
def density_frame(grid: GridMeasure) -> pd.DataFrame:
    """Return the ``x,y,density`` table of a 1D or 2D grid measure.

    One dimensional grids get ``y = 0``.

    Args:
        grid (GridMeasure): The measure.

    Returns:
        pd.DataFrame: One row per cell.

    Raises:
        UnsupportedCarrierError: For grids with more than two axes.
    """

    if grid.dim > 2:  # noqa: PLR2004
        raise UnsupportedCarrierError("Heatmaps show one or two dimensional grids.")
    points = grid.points
    y = points[:, 1] if grid.dim == 2 else np.zeros(points.shape[0])  # noqa: PLR2004
    return pd.DataFrame({"x": points[:, 0], "y": y, "density": grid.density.reshape(-1)})
