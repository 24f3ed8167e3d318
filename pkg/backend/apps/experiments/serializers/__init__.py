# Local application imports
from apps.experiments.serializers.config import MAX_SEED, PARAMETER_SERIALIZERS, ExperimentConfigSerializer
from apps.experiments.serializers.parameters import (
    DEFAULT_SWEEP_ALPHAS,
    DistanceParametersSerializer,
    EquilibriumContrastParametersSerializer,
    FlowConvergenceParametersSerializer,
    InvertParametersSerializer,
    RegularizeSweepParametersSerializer,
    StabilityParametersSerializer,
    check_dimensions,
)

# Exports
__all__ = [
    "DEFAULT_SWEEP_ALPHAS",
    "MAX_SEED",
    "PARAMETER_SERIALIZERS",
    "DistanceParametersSerializer",
    "EquilibriumContrastParametersSerializer",
    "ExperimentConfigSerializer",
    "FlowConvergenceParametersSerializer",
    "InvertParametersSerializer",
    "RegularizeSweepParametersSerializer",
    "StabilityParametersSerializer",
    "check_dimensions",
]
