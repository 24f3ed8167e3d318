# Third-party imports
import numpy as np
from numpy.typing import NDArray

# Local application imports
from apps.common.exceptions import InvalidMeasureError
from apps.measures.types import GaussianMeasure, GridMeasure, Measure, ParticleMeasure


# Atoms and masses of a discrete or gridded measure
def support_and_masses(measure: ParticleMeasure | GridMeasure) -> tuple[NDArray[np.float64], NDArray[np.float64]]:
    """Return quadrature nodes and masses of a particle or grid measure.

    Args:
        measure (ParticleMeasure | GridMeasure): The measure.

    Returns:
        tuple[NDArray[np.float64], NDArray[np.float64]]: Nodes (N, d) and masses (N,).
    """

    # Particles are their own quadrature
    if isinstance(measure, ParticleMeasure):
        return measure.points, measure.weights

    # Grids use cell centres and cell masses
    return measure.points, measure.masses


# Second moment
def second_moment(measure: Measure) -> float:
    """Return the second moment ``integral |x|^2 dm``.

    Args:
        measure (Measure): Any carrier.

    Returns:
        float: The second moment.
    """

    # Closed form for Gaussians
    if isinstance(measure, GaussianMeasure):
        return float(measure.mean @ measure.mean + np.trace(measure.cov))

    # Quadrature for particles and grids
    nodes, masses = support_and_masses(measure)
    return float(masses @ np.sum(nodes**2, axis=1))


# Mean and covariance
def mean_and_cov(measure: Measure) -> tuple[NDArray[np.float64], NDArray[np.float64]]:
    """Return the mean vector and covariance matrix of a measure.

    Args:
        measure (Measure): Any carrier.

    Returns:
        tuple[NDArray[np.float64], NDArray[np.float64]]: Mean (d,) and covariance (d, d).
    """

    # Gaussians carry their moments
    if isinstance(measure, GaussianMeasure):
        return np.array(measure.mean), np.array(measure.cov)

    # Weighted moments of the quadrature nodes
    nodes, masses = support_and_masses(measure)
    mean = masses @ nodes
    centred = nodes - mean
    cov = (centred * masses[:, None]).T @ centred
    return mean, cov


# Moment-matched Gaussian
def fit_gaussian(measure: Measure) -> GaussianMeasure:
    """Return the Gaussian with the same mean and covariance.

    Args:
        measure (Measure): Any carrier with a nondegenerate covariance.

    Returns:
        GaussianMeasure: The moment-matched Gaussian.

    Raises:
        InvalidMeasureError: If the covariance is singular, e.g. a single atom.
    """

    # Moments, symmetrized against roundoff
    mean, cov = mean_and_cov(measure)
    cov = 0.5 * (cov + cov.T)

    # Singular covariances have no Gaussian fit
    if np.linalg.eigvalsh(cov)[0] <= 0:
        raise InvalidMeasureError("Cannot fit a Gaussian to a measure with singular covariance.")

    # Return the fit
    return GaussianMeasure(mean, cov)
