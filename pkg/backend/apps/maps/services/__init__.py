# Local application imports
from apps.maps.services.augmented import augmented_map
from apps.maps.services.catalog import SMOOTH_MAPS, cubic_map, sinh_map
from apps.maps.services.mobility import mobility_lower_bound, mobility_matrix
from apps.maps.services.newton import newton_inverse, with_newton_inverse
from apps.maps.services.pseudo_inverse import projectors, pseudo_inverse
from apps.maps.services.pullback import pullback_grid
from apps.maps.services.pushforward import pushforward, pushforward_gaussian

# Exports
__all__ = [
    "SMOOTH_MAPS",
    "augmented_map",
    "cubic_map",
    "mobility_lower_bound",
    "mobility_matrix",
    "newton_inverse",
    "projectors",
    "pseudo_inverse",
    "pullback_grid",
    "pushforward",
    "pushforward_gaussian",
    "sinh_map",
    "with_newton_inverse",
]
