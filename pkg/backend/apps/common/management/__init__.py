# Local application imports
from apps.common.management.base import (
    EXIT_CONFIG_ERROR,
    EXIT_NUMERICAL_ERROR,
    EXIT_OK,
    EXIT_VERDICT_FAILURE,
    StochInverseCommand,
)

# Exports
__all__ = [
    "EXIT_CONFIG_ERROR",
    "EXIT_NUMERICAL_ERROR",
    "EXIT_OK",
    "EXIT_VERDICT_FAILURE",
    "StochInverseCommand",
]
