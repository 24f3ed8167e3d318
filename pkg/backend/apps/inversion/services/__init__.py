# Local application imports
from apps.inversion.services.direct import DEFAULT_SAMPLE_COUNT, deterministic_solution, direct_invert, solution_set
from apps.inversion.services.stability import (
    deterministic_stability,
    perturb_gaussian,
    solution_set_distance_f,
    solution_set_distance_w2,
    stability_sweep,
)

# Exports
__all__ = [
    "DEFAULT_SAMPLE_COUNT",
    "deterministic_solution",
    "deterministic_stability",
    "direct_invert",
    "perturb_gaussian",
    "solution_set",
    "solution_set_distance_f",
    "solution_set_distance_w2",
    "stability_sweep",
]
