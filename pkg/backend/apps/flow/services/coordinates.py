# Third-party imports
import numpy as np
from numpy.typing import NDArray

# Local application imports
from apps.common.exceptions import DimensionMismatchError
from apps.maps.types import ForwardMap, LinearForwardMap
from apps.measures.services import gaussian_conditional_on_subspace, gaussian_marginal_on_subspace
from apps.measures.types import GaussianMeasure


# Basis of the coordinates flows are recorded in
def flow_basis(forward_map: ForwardMap) -> NDArray[np.float64]:
    """Return the columns U of ``z = U^T y``.

    Linear maps use the left singular vectors spanning ``Col(A)``. Smooth maps
    are square and use the identity.

    Args:
        forward_map (ForwardMap): The forward map.

    Returns:
        NDArray[np.float64]: Orthonormal columns (n_outputs, k).
    """

    if isinstance(forward_map, LinearForwardMap):
        return np.array(forward_map.column_basis)
    return np.eye(forward_map.n_outputs)


# Gaussian law in Col(A) coordinates
def reduced_gaussian(forward_map: ForwardMap, gaussian: GaussianMeasure, *, conditional: bool) -> GaussianMeasure:
    """Express a data-space Gaussian in ``Col(A)`` coordinates.

    Targets are restricted to ``Col(A)`` and renormalized, the law the
    f-divergence flows settle at. Initial laws are images ``A # rho_u`` and are
    projected. Gaussians already of the rank dimension are returned as given.

    Args:
        forward_map (ForwardMap): The forward map.
        gaussian (GaussianMeasure): Gaussian in data or reduced coordinates.
        conditional (bool): Restrict instead of project.

    Returns:
        GaussianMeasure: The law of z.

    Raises:
        DimensionMismatchError: If the dimension fits neither coordinate system.
        DegenerateRestrictionError: If the restriction is not positive definite.
    """

    basis = flow_basis(forward_map)

    # Data coordinates
    if gaussian.dim == basis.shape[0]:
        if conditional:
            return gaussian_conditional_on_subspace(gaussian, basis)
        return gaussian_marginal_on_subspace(gaussian, basis)

    # Already reduced
    if gaussian.dim == basis.shape[1]:
        return gaussian
    raise DimensionMismatchError(expected=basis.shape[0], got=gaussian.dim)


# Mobility in Col(A) coordinates
def reduced_mobility(forward_map: LinearForwardMap) -> NDArray[np.float64]:
    """Return ``Sigma^2``, the mobility of the reduced flow.

    Args:
        forward_map (LinearForwardMap): The linear map.

    Returns:
        NDArray[np.float64]: Diagonal matrix (k, k) of squared nonzero singular values.
    """

    return np.diag(forward_map.sigma[: forward_map.rank] ** 2)
