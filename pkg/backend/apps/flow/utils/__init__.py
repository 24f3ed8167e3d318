# Local application imports
from apps.flow.utils.mobility import cfl_limit, grid_mobility

# Exports
__all__ = ["cfl_limit", "grid_mobility"]
