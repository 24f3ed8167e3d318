# Local application imports
from apps.inversion.types.solution_set import SolutionSetHandle
from apps.inversion.types.stability import BOUND_SLACK, STABILITY_COLUMNS, StabilityMetric, StabilityReport

# Exports
__all__ = ["BOUND_SLACK", "STABILITY_COLUMNS", "SolutionSetHandle", "StabilityMetric", "StabilityReport"]
