# Local application imports
from apps.common.serializers.fields import FiniteFloatField, MatrixField, VectorField

# Exports
__all__ = ["FiniteFloatField", "MatrixField", "VectorField"]
