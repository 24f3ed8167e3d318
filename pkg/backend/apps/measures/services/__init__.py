# Local application imports
from apps.measures.services.discretize import discretize_gaussian, grid_from_log_density
from apps.measures.services.kde import kde_density, kde_log_density, kde_score, silverman_bandwidth
from apps.measures.services.moments import fit_gaussian, mean_and_cov, second_moment, support_and_masses
from apps.measures.services.normalize import normalize
from apps.measures.services.subspace import (
    gaussian_conditional_on_subspace,
    gaussian_marginal_on_subspace,
    orthonormal_basis,
)

# Exports
__all__ = [
    "discretize_gaussian",
    "fit_gaussian",
    "gaussian_conditional_on_subspace",
    "gaussian_marginal_on_subspace",
    "grid_from_log_density",
    "kde_density",
    "kde_log_density",
    "kde_score",
    "mean_and_cov",
    "normalize",
    "orthonormal_basis",
    "second_moment",
    "silverman_bandwidth",
    "support_and_masses",
]
