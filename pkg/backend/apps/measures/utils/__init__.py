# Local application imports
from apps.measures.utils.measure_files import (
    load_measure,
    measure_from_payload,
    measure_to_payload,
    read_particles_csv,
    save_measure,
)

# Exports
__all__ = [
    "load_measure",
    "measure_from_payload",
    "measure_to_payload",
    "read_particles_csv",
    "save_measure",
]
