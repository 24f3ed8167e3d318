# Local application imports
from apps.maps.types.linear import RANK_TOLERANCE, LinearForwardMap
from apps.maps.types.smooth import SmoothForwardMap

# Any forward map
ForwardMap = LinearForwardMap | SmoothForwardMap

# Exports
__all__ = ["RANK_TOLERANCE", "ForwardMap", "LinearForwardMap", "SmoothForwardMap"]
