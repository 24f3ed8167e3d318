# Standard library imports
import math

# Local application imports
from apps.common.exceptions import ZeroMassError
from apps.measures.types import GridMeasure, ParticleMeasure


# Rescale a measure to unit mass
def normalize[M: (ParticleMeasure, GridMeasure)](measure: M) -> M:
    """Rescale weights or densities so the measure has unit mass.

    Args:
        measure (ParticleMeasure | GridMeasure): Measure with positive finite mass.

    Returns:
        ParticleMeasure | GridMeasure: Measure of the same type with mass one.

    Raises:
        ZeroMassError: If the total mass is not positive or not finite.
    """

    # Total mass of the input
    total = measure.total_mass

    # Reject empty or overflowing measures
    if not math.isfinite(total) or total <= 0:
        raise ZeroMassError(total=total)

    # Rescale particle weights
    if isinstance(measure, ParticleMeasure):
        return ParticleMeasure(measure.points, measure.weights / total)

    # Rescale grid densities
    return measure.with_density(measure.density / total)
