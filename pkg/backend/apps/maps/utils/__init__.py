# Local application imports
from apps.maps.utils.map_files import load_map, map_from_payload, map_to_payload, save_map

# Exports
__all__ = ["load_map", "map_from_payload", "map_to_payload", "save_map"]
