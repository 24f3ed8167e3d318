# Local application imports
from apps.maps.serializers.linear import LinearMapSerializer
from apps.maps.serializers.map_field import MapField

# Exports
__all__ = ["LinearMapSerializer", "MapField"]
