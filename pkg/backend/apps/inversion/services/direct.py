# Standard library imports
import logging

# Third-party imports
import numpy as np

# Local application imports
from apps.common.exceptions import MissingInverseError, UnsupportedCarrierError
from apps.common.utils import make_generator
from apps.inversion.types import SolutionSetHandle
from apps.maps.services import pseudo_inverse, pullback_grid, pushforward_gaussian
from apps.maps.types import ForwardMap, LinearForwardMap
from apps.measures.types import GaussianMeasure, GridMeasure, Measure, ParticleMeasure

# Get the logger
logger = logging.getLogger(__name__)

# Samples drawn when an image has no density
DEFAULT_SAMPLE_COUNT = 4096


# Inversion through a linear map
def _invert_linear(forward_map: LinearForwardMap, data: Measure, sample_count: int, seed: int) -> Measure:
    # Canonical pre-image selector
    selector = pseudo_inverse(forward_map)

    # Atoms map pointwise
    if isinstance(data, ParticleMeasure):
        return ParticleMeasure(data.points @ selector.T, data.weights)

    # Grids only through an invertible change of variables
    if isinstance(data, GridMeasure):
        if not forward_map.is_invertible:
            raise UnsupportedCarrierError("Grid data needs a square invertible map for direct inversion.")
        return pullback_grid(forward_map, data)

    # Gaussians stay Gaussian unless the image lives on a subspace
    if forward_map.n_inputs <= forward_map.n_outputs:
        return pushforward_gaussian(selector, None, data)
    logger.info("Pre-image is supported on a subspace, sampling %d points", sample_count)
    samples = data.sample(sample_count, make_generator(seed, "direct_invert.samples"))
    return ParticleMeasure.uniform(samples @ selector.T)


# Direct inversion G^{-1} # data
def direct_invert(
    forward_map: ForwardMap,
    data: Measure,
    sample_count: int = DEFAULT_SAMPLE_COUNT,
    seed: int = 0,
) -> Measure:
    """Return ``G^{-1} # data``, or ``A^+ # data`` for non-square linear maps.

    Particles are mapped atom by atom and grids by change of variables. A
    Gaussian pushed through a linear map stays Gaussian; when the pre-image
    is supported on a proper subspace it is returned as a uniform cloud of
    mapped samples instead. Gaussians under smooth maps are sampled too.

    Args:
        forward_map (ForwardMap): Full-rank linear map, or smooth map with an inverse.
        data (Measure): Data measure.
        sample_count (int): Sample size when the result has no density.
        seed (int): Seed of the sampling stream.

    Returns:
        Measure: The reconstruction.

    Raises:
        RankDeficientError: If a linear map is rank deficient.
        MissingInverseError: If a smooth map has no inverse.
        UnsupportedCarrierError: For grid data under non-square linear maps.
    """

    # Linear maps use the pseudoinverse
    if isinstance(forward_map, LinearForwardMap):
        return _invert_linear(forward_map, data, sample_count, seed)

    # Smooth maps need their inverse
    if not forward_map.is_invertible:
        raise MissingInverseError()
    if isinstance(data, ParticleMeasure):
        return ParticleMeasure(forward_map.invert(data.points), data.weights)
    if isinstance(data, GridMeasure):
        return pullback_grid(forward_map, data)
    if isinstance(data, GaussianMeasure):
        samples = data.sample(sample_count, make_generator(seed, "direct_invert.samples"))
        return ParticleMeasure.uniform(forward_map.invert(samples))
    raise UnsupportedCarrierError(carrier=type(data).__name__)


# Solution set handle
def solution_set(forward_map: LinearForwardMap, data: Measure, **options: int) -> SolutionSetHandle:
    """Return the solution set of ``A # u = data`` through its canonical element.

    Args:
        forward_map (LinearForwardMap): Full-rank linear map.
        data (Measure): Data measure.
        **options: ``sample_count`` and ``seed`` for ``direct_invert``.

    Returns:
        SolutionSetHandle: The handle.
    """

    return SolutionSetHandle(forward_map, data, direct_invert(forward_map, data, **options))


# Deterministic solution of a Dirac datum
def deterministic_solution(forward_map: LinearForwardMap, y: np.ndarray) -> np.ndarray:
    """Return the minimal-norm solution ``A^+ y``.

    Args:
        forward_map (LinearForwardMap): Full-rank linear map.
        y (np.ndarray): Data point.

    Returns:
        np.ndarray: The solution.
    """

    return pseudo_inverse(forward_map) @ np.asarray(y, dtype=float)
