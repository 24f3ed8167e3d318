# Local application imports
from apps.measures.serializers.gaussian import GaussianMeasureSerializer
from apps.measures.serializers.grid import GridMeasureSerializer
from apps.measures.serializers.measure_field import MeasureField
from apps.measures.serializers.particles import ParticleMeasureSerializer

# Exports
__all__ = [
    "GaussianMeasureSerializer",
    "GridMeasureSerializer",
    "MeasureField",
    "ParticleMeasureSerializer",
]
