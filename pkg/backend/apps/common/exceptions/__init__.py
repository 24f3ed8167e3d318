# Local application imports
from apps.common.exceptions.base import StochInverseError
from apps.common.exceptions.config import ConfigError, SchemaError
from apps.common.exceptions.numerical import (
    BandwidthRequiredError,
    CFLViolationError,
    DegenerateImageError,
    DegenerateRestrictionError,
    DimensionMismatchError,
    GridMismatchError,
    InvalidMeasureError,
    MissingInverseError,
    NonConvexGeneratorError,
    NonFiniteVelocityError,
    NonInvertibleMapError,
    NotOrthonormalError,
    NumericalError,
    RankDeficientError,
    ShapeError,
    SizeCapError,
    SupportMismatchError,
    UnsupportedCarrierError,
    ZeroMassError,
)
from apps.common.exceptions.warnings import NotConvergedWarning, StiffnessWarning

# Exports
__all__ = [
    "BandwidthRequiredError",
    "CFLViolationError",
    "ConfigError",
    "DegenerateImageError",
    "DegenerateRestrictionError",
    "DimensionMismatchError",
    "GridMismatchError",
    "InvalidMeasureError",
    "MissingInverseError",
    "NonConvexGeneratorError",
    "NonFiniteVelocityError",
    "NonInvertibleMapError",
    "NotConvergedWarning",
    "NotOrthonormalError",
    "NumericalError",
    "RankDeficientError",
    "SchemaError",
    "ShapeError",
    "SizeCapError",
    "StiffnessWarning",
    "StochInverseError",
    "SupportMismatchError",
    "UnsupportedCarrierError",
    "ZeroMassError",
]
