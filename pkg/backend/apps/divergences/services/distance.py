# Standard library imports
from typing import Any

# Local application imports
from apps.common.exceptions import UnsupportedCarrierError
from apps.divergences.services.exact import wasserstein_exact
from apps.divergences.services.f_divergence import f_divergence
from apps.divergences.services.gaussian import wasserstein_gaussian
from apps.divergences.services.one_dimensional import wasserstein_1d
from apps.divergences.services.sinkhorn import sinkhorn
from apps.divergences.types import FDivergenceSpec
from apps.measures.types import GaussianMeasure, GridMeasure, Measure, ParticleMeasure

# Metric names accepted by the distance helpers
METRICS = ("w2", "w1", "kl", "chi2", "tv")


# Grid as a weighted cloud of cell centres
def _as_particles(measure: ParticleMeasure | GridMeasure) -> ParticleMeasure:
    if isinstance(measure, ParticleMeasure):
        return measure
    keep = measure.masses > 0
    return ParticleMeasure(measure.points[keep], measure.masses[keep] / measure.masses[keep].sum())


# W_p for any supported carrier pair
def wasserstein_distance(mu: Measure, nu: Measure, p: float = 2.0, epsilon: float | None = None) -> dict[str, Any]:
    """Return ``W_p`` with the cheapest exact method for the carriers.

    Gaussian pairs use the closed form (``p = 2``), 1D particle and grid
    measures the monotone coupling, everything else the network simplex on
    atoms or cell centres. ``epsilon`` switches to Sinkhorn.

    Args:
        mu (Measure): First measure.
        nu (Measure): Second measure.
        p (float): Order.
        epsilon (float | None): Entropic regularization, exact when None.

    Returns:
        dict[str, Any]: ``value`` and, for Sinkhorn, ``iterations`` and ``converged``.

    Raises:
        UnsupportedCarrierError: For Gaussians mixed with other carriers or ``p != 2``.
    """

    # Closed form for Gaussian pairs
    gaussians = isinstance(mu, GaussianMeasure), isinstance(nu, GaussianMeasure)
    if all(gaussians) and p == 2 and epsilon is None:  # noqa: PLR2004
        return {"value": wasserstein_gaussian(mu, nu)}
    if any(gaussians):
        raise UnsupportedCarrierError("Gaussians are only compared with Gaussians, in W2.")

    # Entropic approximation
    if epsilon is not None:
        result = sinkhorn(_as_particles(mu), _as_particles(nu), p=p, epsilon=epsilon)
        return {"value": result.value, "iterations": result.iterations, "converged": result.converged}

    # Monotone coupling in 1D
    if mu.dim == 1 and nu.dim == 1:
        return {"value": wasserstein_1d(mu, nu, p)}

    # Network simplex
    value, _ = wasserstein_exact(_as_particles(mu), _as_particles(nu), p)
    return {"value": value}


# Distance record for a named metric
def measure_distance(metric: str, mu: Measure, nu: Measure, epsilon: float | None = None) -> dict[str, Any]:
    """Return ``{"metric", "value"}`` plus solver details for a named metric.

    Args:
        metric (str): One of ``w2``, ``w1``, ``kl``, ``chi2`` and ``tv``.
        mu (Measure): First measure.
        nu (Measure): Second measure.
        epsilon (float | None): Sinkhorn regularization for the Wasserstein metrics.

    Returns:
        dict[str, Any]: The record.
    """

    if metric not in METRICS:
        raise ValueError(f"Unknown metric {metric!r}.")

    # Wasserstein metrics
    if metric in ("w1", "w2"):
        return {"metric": metric, **wasserstein_distance(mu, nu, p=float(metric[1]), epsilon=epsilon)}

    # f-divergences
    return {"metric": metric, "value": f_divergence(FDivergenceSpec.from_name(metric), mu, nu)}
