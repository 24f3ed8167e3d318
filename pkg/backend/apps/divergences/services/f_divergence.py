# Standard library imports
import math

# Third-party imports
import numpy as np

# Local application imports
from apps.common.exceptions import UnsupportedCarrierError
from apps.divergences.services.gaussian import kl_gaussian
from apps.divergences.types import FDivergenceName, FDivergenceSpec
from apps.measures.types import GaussianMeasure, GridMeasure, Measure

# Densities at or below this value count as zero
DENSITY_FLOOR = 1e-300


# f-divergence by midpoint quadrature
def f_divergence_grid(spec: FDivergenceSpec, mu: GridMeasure, nu: GridMeasure) -> float:
    """Return ``D_f(mu || nu) = integral f(dmu/dnu) dnu`` on a shared grid.

    Cells where ``nu`` vanishes and ``mu`` does not are charged
    ``spec.recession`` per unit mass of ``mu``, which is infinite for KL and
    chi-squared. Cells where both vanish contribute nothing.

    Args:
        spec (FDivergenceSpec): The generator.
        mu (GridMeasure): First measure.
        nu (GridMeasure): Reference measure.

    Returns:
        float: The divergence, possibly ``inf``.

    Raises:
        GridMismatchError: If the grids differ.
    """

    # Grids must agree exactly
    mu.require_same_grid(nu)

    # Clamp negligible densities to zero
    p = np.where(mu.density > DENSITY_FLOOR, mu.density, 0.0).reshape(-1)
    q = np.where(nu.density > DENSITY_FLOOR, nu.density, 0.0).reshape(-1)

    # Mass of mu where nu vanishes
    singular = (q == 0) & (p > 0)
    singular_mass = float(p[singular].sum() * mu.cell_volume)
    if singular_mass > 0 and math.isinf(spec.recession):
        return math.inf

    # Absolutely continuous part
    support = q > 0
    ratio = p[support] / q[support]
    regular = float(np.sum(spec.f(ratio) * q[support]) * mu.cell_volume)

    # Total, clipped at zero against rounding
    return max(regular + spec.recession * singular_mass, 0.0)


# f-divergence for any supported carrier pair
def f_divergence(spec: FDivergenceSpec, mu: Measure, nu: Measure) -> float:
    """Return ``D_f(mu || nu)`` for grid pairs, or KL between Gaussians.

    Args:
        spec (FDivergenceSpec): The generator.
        mu (Measure): First measure.
        nu (Measure): Reference measure.

    Returns:
        float: The divergence.

    Raises:
        UnsupportedCarrierError: For other carrier pairs.
    """

    # Grid quadrature
    if isinstance(mu, GridMeasure) and isinstance(nu, GridMeasure):
        return f_divergence_grid(spec, mu, nu)

    # Closed form KL between Gaussians
    if isinstance(mu, GaussianMeasure) and isinstance(nu, GaussianMeasure) and spec.name == FDivergenceName.KL:
        return kl_gaussian(mu, nu)

    raise UnsupportedCarrierError(
        f"No {spec.name} divergence between {type(mu).__name__} and {type(nu).__name__}.",
    )
