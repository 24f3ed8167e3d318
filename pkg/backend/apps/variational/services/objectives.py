# Third-party imports
import numpy as np

# Local application imports
from apps.divergences.services import wasserstein_distance, wasserstein_exact
from apps.maps.services import augmented_map, pushforward, pushforward_gaussian
from apps.maps.types import LinearForwardMap
from apps.measures.services import second_moment
from apps.measures.types import GaussianMeasure, Measure, ParticleMeasure
from apps.variational.types import ErrorIdentity


# Value of the W2-W2 objective
def tikhonov_objective(
    forward_map: LinearForwardMap,
    data: Measure,
    alpha: float,
    candidate: ParticleMeasure | GaussianMeasure,
) -> float:
    """Return ``W2^2(A # candidate, data) + alpha^2 M2(candidate)``.

    Args:
        forward_map (LinearForwardMap): The forward map.
        data (Measure): Data measure, same carrier as the candidate image.
        alpha (float): Regularization weight.
        candidate (ParticleMeasure | GaussianMeasure): Parameter measure.

    Returns:
        float: The objective.
    """

    # Image of the candidate
    if isinstance(candidate, GaussianMeasure):
        image = pushforward_gaussian(forward_map.matrix, None, candidate)
    else:
        image = pushforward(forward_map, candidate)

    misfit = float(wasserstein_distance(image, data)["value"]) ** 2
    return misfit + alpha**2 * second_moment(candidate)


# Objective against its augmented map form
def augmented_objective_check(
    forward_map: LinearForwardMap,
    data: ParticleMeasure,
    alpha: float,
    candidate: ParticleMeasure,
) -> ErrorIdentity:
    """Compare the W2-W2 objective with ``W2^2([A; alpha I] # candidate, data x delta_0)``.

    Both sides are computed with the exact transport solver.

    Args:
        forward_map (LinearForwardMap): The forward map.
        data (ParticleMeasure): Data cloud.
        alpha (float): Nonnegative regularization weight.
        candidate (ParticleMeasure): Parameter cloud.

    Returns:
        ErrorIdentity: ``lhs`` is the objective, ``rhs`` its augmented form.

    Raises:
        SizeCapError: If a cost matrix exceeds the configured cap.
    """

    # Objective with the regularizer added to the transport cost
    misfit, _ = wasserstein_exact(pushforward(forward_map, candidate), data)
    lhs = misfit**2 + alpha**2 * second_moment(candidate)

    # Augmented map against the data padded with zeros
    padded = ParticleMeasure(np.hstack([data.points, np.zeros((data.size, forward_map.n_inputs))]), data.weights)
    augmented, _ = wasserstein_exact(pushforward(augmented_map(forward_map, alpha), candidate), padded)
    rhs = augmented**2

    return ErrorIdentity(lhs, rhs, abs(lhs - rhs))
