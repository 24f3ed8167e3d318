# Local application imports
from apps.divergences.services.distance import METRICS, measure_distance, wasserstein_distance
from apps.divergences.services.exact import cost_matrix, wasserstein_exact
from apps.divergences.services.f_divergence import DENSITY_FLOOR, f_divergence, f_divergence_grid
from apps.divergences.services.gaussian import bures_distance, kl_gaussian, wasserstein_gaussian
from apps.divergences.services.one_dimensional import wasserstein_1d, wasserstein_to_gaussian_1d
from apps.divergences.services.sinkhorn import sinkhorn

# Exports
__all__ = [
    "DENSITY_FLOOR",
    "METRICS",
    "bures_distance",
    "cost_matrix",
    "f_divergence",
    "f_divergence_grid",
    "kl_gaussian",
    "measure_distance",
    "sinkhorn",
    "wasserstein_1d",
    "wasserstein_distance",
    "wasserstein_exact",
    "wasserstein_gaussian",
    "wasserstein_to_gaussian_1d",
]
