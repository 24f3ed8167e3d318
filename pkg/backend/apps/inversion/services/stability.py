# Standard library imports
import logging
import math
from collections.abc import Sequence
from concurrent.futures import ThreadPoolExecutor
from typing import Literal

# Third-party imports
import numpy as np
from numpy.typing import ArrayLike

# Local application imports
from apps.divergences.services import bures_distance, f_divergence, wasserstein_distance
from apps.divergences.types import FDivergenceSpec
from apps.inversion.types import StabilityMetric, StabilityReport
from apps.maps.services import pseudo_inverse
from apps.maps.types import LinearForwardMap
from apps.measures.types import GaussianMeasure, GridMeasure, Measure, ParticleMeasure

# Get the logger
logger = logging.getLogger(__name__)

# Perturbation families of a sweep
PerturbationFamily = Literal["mean_shift", "covariance_inflation"]


# Distance between the canonical elements A^+ # data
def _canonical_distance(selector: np.ndarray, data1: Measure, data2: Measure) -> float:
    # Gaussian images may be singular, use their moments
    if isinstance(data1, GaussianMeasure) and isinstance(data2, GaussianMeasure):
        return bures_distance(
            selector @ data1.mean,
            selector @ data1.cov @ selector.T,
            selector @ data2.mean,
            selector @ data2.cov @ selector.T,
        )

    # Grids and clouds as mapped weighted atoms
    def mapped(measure: Measure) -> ParticleMeasure:
        if isinstance(measure, GridMeasure):
            keep = measure.masses > 0
            return ParticleMeasure(measure.points[keep] @ selector.T, measure.masses[keep] / measure.masses[keep].sum())
        return ParticleMeasure(measure.points @ selector.T, measure.weights)

    return float(wasserstein_distance(mapped(data1), mapped(data2))["value"])


# W2 stability of the solution sets
def solution_set_distance_w2(forward_map: LinearForwardMap, data1: Measure, data2: Measure) -> StabilityReport:
    """Compare ``W2(A^+ # data1, A^+ # data2)`` with ``W2(data1, data2) / sigma_min``.

    Args:
        forward_map (LinearForwardMap): Full-rank linear map.
        data1 (Measure): First data measure.
        data2 (Measure): Second data measure, same carrier.

    Returns:
        StabilityReport: W2 report.
    """

    # Canonical elements
    selector = pseudo_inverse(forward_map)
    output = _canonical_distance(selector, data1, data2)

    # Data distance and its amplification
    data_distance = float(wasserstein_distance(data1, data2)["value"])
    return StabilityReport(
        input_perturbation=data_distance,
        output_distance=output,
        bound=data_distance / forward_map.sigma_min,
        metric=StabilityMetric.W2,
    )


# f-divergence stability of the solution sets
def solution_set_distance_f(spec: FDivergenceSpec, data1: Measure, data2: Measure) -> StabilityReport:
    """Report ``D_f(data1 || data2)`` as input, output and bound.

    The f-divergence between the solution sets equals the data divergence,
    so the report is satisfied by construction. Infinite values appear on
    both sides.

    Args:
        spec (FDivergenceSpec): The generator.
        data1 (GridMeasure | GaussianMeasure): First data measure.
        data2 (GridMeasure | GaussianMeasure): Reference data measure.

    Returns:
        StabilityReport: f-divergence report.
    """

    value = f_divergence(spec, data1, data2)
    return StabilityReport(value, value, value, StabilityMetric.F_DIVERGENCE)


# Euclidean baseline for point data
def deterministic_stability(forward_map: LinearForwardMap, y1: ArrayLike, y2: ArrayLike) -> StabilityReport:
    """Compare ``|A^+ y1 - A^+ y2|`` with ``|y1 - y2| / sigma_min``.

    Args:
        forward_map (LinearForwardMap): Full-rank linear map.
        y1 (ArrayLike): First data point.
        y2 (ArrayLike): Second data point.

    Returns:
        StabilityReport: Euclidean report.
    """

    gap = np.asarray(y1, dtype=float) - np.asarray(y2, dtype=float)
    data_distance = float(np.linalg.norm(gap))
    return StabilityReport(
        input_perturbation=data_distance,
        output_distance=float(np.linalg.norm(pseudo_inverse(forward_map) @ gap)),
        bound=data_distance / forward_map.sigma_min,
        metric=StabilityMetric.EUCLIDEAN,
    )


# Perturbed copy of a Gaussian
def perturb_gaussian(
    base: GaussianMeasure,
    level: float,
    family: PerturbationFamily,
    direction: np.ndarray,
) -> GaussianMeasure:
    """Return a mean shift along ``direction`` or a covariance inflation by ``1 + level``.

    Args:
        base (GaussianMeasure): Unperturbed data.
        level (float): Perturbation size.
        family (PerturbationFamily): Perturbation family.
        direction (np.ndarray): Unit shift direction.

    Returns:
        GaussianMeasure: The perturbed Gaussian.
    """

    if family == "mean_shift":
        return GaussianMeasure(base.mean + level * direction, base.cov)
    return GaussianMeasure(base.mean, (1.0 + level) * base.cov)


# Sweep over perturbation levels
def stability_sweep(
    forward_map: LinearForwardMap,
    base: GaussianMeasure,
    perturbations: Sequence[float],
    metric: str = "w2",
    family: PerturbationFamily = "mean_shift",
    direction: ArrayLike | None = None,
    workers: int = 1,
) -> list[StabilityReport]:
    """Return one stability report per perturbation level, in input order.

    The perturbed Gaussian is the first data measure and ``base`` the second.
    Mean shifts default to the weakest left singular direction of the map,
    where W2 amplification is largest.

    Args:
        forward_map (LinearForwardMap): Full-rank linear map.
        base (GaussianMeasure): Unperturbed data.
        perturbations (Sequence[float]): Finite perturbation levels.
        metric (str): ``w2`` or an f-divergence name such as ``kl``.
        family (PerturbationFamily): ``mean_shift`` or ``covariance_inflation``.
        direction (ArrayLike | None): Shift direction, normalized before use.
        workers (int): Threads evaluating levels concurrently.

    Returns:
        list[StabilityReport]: Reports carrying their level.

    Raises:
        ValueError: If a level is not finite or the family is unknown.
    """

    # Argument checks
    levels = [float(level) for level in perturbations]
    if not all(math.isfinite(level) for level in levels):
        raise ValueError("perturbation levels must be finite")
    if family not in ("mean_shift", "covariance_inflation"):
        raise ValueError(f"unknown perturbation family {family!r}")

    # Shift direction
    shift = forward_map.left[:, -1] if direction is None else np.asarray(direction, dtype=float).reshape(-1)
    shift = shift / np.linalg.norm(shift)

    # Divergence generator for f metrics
    spec = None if metric == "w2" else FDivergenceSpec.from_name(metric)

    # One report per level
    def evaluate(level: float) -> StabilityReport:
        perturbed = perturb_gaussian(base, level, family, shift)
        if spec is None:
            report = solution_set_distance_w2(forward_map, perturbed, base)
        else:
            report = solution_set_distance_f(spec, perturbed, base)
        return StabilityReport(report.input_perturbation, report.output_distance, report.bound, report.metric, level)

    # Ordered evaluation, concurrent when asked
    logger.info("Stability sweep over %d levels with metric %s", len(levels), metric)
    if workers <= 1:
        return [evaluate(level) for level in levels]
    with ThreadPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(evaluate, levels))
