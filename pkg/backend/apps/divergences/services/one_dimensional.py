# Standard library imports
from collections.abc import Callable

# Third-party imports
import numpy as np
import ot
from numpy.typing import NDArray
from scipy import stats

# Local application imports
from apps.common.exceptions import DimensionMismatchError, UnsupportedCarrierError
from apps.measures.types import GaussianMeasure, GridMeasure, ParticleMeasure

# Gauss-Legendre rule used between quantile breakpoints
_NODES, _WEIGHTS = np.polynomial.legendre.leggauss(8)

# Quantile function with its breakpoints
Quantile = tuple[NDArray[np.float64], Callable[[NDArray[np.float64]], NDArray[np.float64]]]


# Quantile function of a 1D measure
def _quantile(measure: ParticleMeasure | GridMeasure | GaussianMeasure) -> Quantile:
    # Only one dimensional measures have quantile functions
    if measure.dim != 1:
        raise DimensionMismatchError("Quantile couplings need one dimensional measures.", expected=1, got=measure.dim)

    # Step quantile of sorted atoms
    if isinstance(measure, ParticleMeasure):
        order = np.argsort(measure.points[:, 0], kind="stable")
        atoms = measure.points[order, 0]
        levels = np.cumsum(measure.weights[order])
        last = atoms.shape[0] - 1
        return levels, lambda t: atoms[np.minimum(np.searchsorted(levels, t, side="left"), last)]

    # Piecewise linear quantile of a cellwise constant density
    if isinstance(measure, GridMeasure):
        edges = np.linspace(measure.lower[0], measure.upper[0], measure.shape[0] + 1)
        cdf = np.concatenate([[0.0], np.cumsum(measure.masses)])
        cdf /= cdf[-1]
        return cdf[1:], lambda t: np.interp(t, cdf, edges)

    # Gaussian quantile
    if isinstance(measure, GaussianMeasure):
        law = stats.norm(loc=float(measure.mean[0]), scale=float(np.sqrt(measure.cov[0, 0])))
        return np.array([1.0]), law.ppf

    raise UnsupportedCarrierError(carrier=type(measure).__name__)


# p-th power of W_p by quadrature over merged breakpoints
def _quantile_cost(first: Quantile, second: Quantile, p: float) -> float:
    # Breakpoints of both quantile functions
    breaks = np.unique(np.clip(np.concatenate([[0.0], first[0], second[0], [1.0]]), 0.0, 1.0))
    lower, upper = breaks[:-1], breaks[1:]
    keep = upper > lower
    lower, upper = lower[keep], upper[keep]

    # Gauss-Legendre nodes inside every interval
    half = 0.5 * (upper - lower)
    nodes = (0.5 * (upper + lower))[:, None] + half[:, None] * _NODES[None, :]
    weights = half[:, None] * _WEIGHTS[None, :]

    # Integrate |Q1 - Q2|^p
    gap = np.abs(first[1](nodes.ravel()) - second[1](nodes.ravel())).reshape(nodes.shape)
    return float(np.sum(weights * gap**p))


# Exact 1D Wasserstein distance
def wasserstein_1d(mu: ParticleMeasure | GridMeasure, nu: ParticleMeasure | GridMeasure, p: float = 2.0) -> float:
    """Return ``W_p`` between two 1D measures through the monotone coupling.

    Particle pairs use the merged quantile sum, grids use quadrature of the
    piecewise linear quantile functions between merged breakpoints.

    Args:
        mu (ParticleMeasure | GridMeasure): First measure.
        nu (ParticleMeasure | GridMeasure): Second measure.
        p (float): Order, at least one.

    Returns:
        float: The distance.

    Raises:
        DimensionMismatchError: If either measure is not one dimensional.
    """

    if p < 1:
        raise ValueError("p must be at least one")

    # Merged quantile sum for two clouds
    if isinstance(mu, ParticleMeasure) and isinstance(nu, ParticleMeasure):
        if mu.dim != 1 or nu.dim != 1:
            raise DimensionMismatchError(expected=1, got=max(mu.dim, nu.dim))
        cost = ot.wasserstein_1d(mu.points[:, 0], nu.points[:, 0], mu.weights, nu.weights, p=p)
        return float(max(float(cost), 0.0) ** (1.0 / p))

    # Quadrature otherwise
    return _quantile_cost(_quantile(mu), _quantile(nu), p) ** (1.0 / p)


# W_p between a 1D measure and a Gaussian
def wasserstein_to_gaussian_1d(
    measure: ParticleMeasure | GridMeasure | GaussianMeasure,
    gaussian: GaussianMeasure,
    p: float = 2.0,
) -> float:
    """Return ``W_p`` between a 1D measure and a 1D Gaussian.

    Args:
        measure (ParticleMeasure | GridMeasure | GaussianMeasure): First measure.
        gaussian (GaussianMeasure): The Gaussian.
        p (float): Order, at least one.

    Returns:
        float: The distance.
    """

    return _quantile_cost(_quantile(measure), _quantile(gaussian), p) ** (1.0 / p)
