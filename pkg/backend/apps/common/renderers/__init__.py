# Local application imports
from apps.common.renderers.artifact_json import ArtifactJSONRenderer, to_json_value

# Exports
__all__ = ["ArtifactJSONRenderer", "to_json_value"]
