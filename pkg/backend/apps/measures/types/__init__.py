# Local application imports
from apps.measures.types.certificate import LogConcavityCertificate
from apps.measures.types.gaussian import GaussianMeasure
from apps.measures.types.grid import GridMeasure
from apps.measures.types.particle import ParticleMeasure

# Any carrier of a probability measure
Measure = ParticleMeasure | GridMeasure | GaussianMeasure

# Exports
__all__ = [
    "GaussianMeasure",
    "GridMeasure",
    "LogConcavityCertificate",
    "Measure",
    "ParticleMeasure",
]
