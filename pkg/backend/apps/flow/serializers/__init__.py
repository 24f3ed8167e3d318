# Local application imports
from apps.flow.serializers.config import FlowConfigSerializer, GridBoxSerializer

# Exports
__all__ = ["FlowConfigSerializer", "GridBoxSerializer"]
