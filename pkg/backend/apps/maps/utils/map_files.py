# Standard library imports
import json
from pathlib import Path
from typing import Any

# Third-party imports
import pandas as pd

# Local application imports
from apps.common.exceptions import ConfigError
from apps.common.utils import read_json, write_csv, write_json
from apps.maps.serializers.linear import LinearMapSerializer
from apps.maps.services import SMOOTH_MAPS
from apps.maps.types import ForwardMap, LinearForwardMap


# Build a map from a JSON payload
def map_from_payload(payload: Any) -> ForwardMap:
    """Validate a map payload and build the map.

    Accepts ``{"matrix": [[...]]}``, a bare nested list, or
    ``{"name": "cubic", "dim": 1}`` for the smooth map catalog.

    Args:
        payload (Any): Decoded JSON value.

    Returns:
        ForwardMap: The map.

    Raises:
        ConfigError: With field-level messages when the payload is invalid.
    """

    # Bare nested lists are matrices
    if isinstance(payload, list):
        payload = {"matrix": payload}
    if not isinstance(payload, dict):
        raise ConfigError({"map": ["Expected a JSON object or a nested list."]})

    # Named smooth maps
    if "name" in payload:
        factory = SMOOTH_MAPS.get(payload["name"]) if isinstance(payload["name"], str) else None
        if factory is None:
            raise ConfigError({"name": [f"Expected one of {sorted(SMOOTH_MAPS)}."]})
        dim = payload.get("dim", 1)
        if isinstance(dim, bool) or not isinstance(dim, int) or dim < 1:
            raise ConfigError({"dim": ["Expected a positive integer."]})
        if payload["name"] == "cubic":
            if dim != 1:
                raise ConfigError({"dim": ["The cubic map is one dimensional."]})
            return factory()
        return factory(dim)

    # Linear maps
    serializer = LinearMapSerializer(data=payload)
    if not serializer.is_valid():
        raise ConfigError(serializer.errors)
    return serializer.validated_data["map"]


# Load a map file
def load_map(path: str | Path) -> ForwardMap:
    """Load a map from JSON or from a headerless numeric CSV.

    Args:
        path (str | Path): Map file.

    Returns:
        ForwardMap: The map.

    Raises:
        ConfigError: If the file is missing or invalid.
    """

    target = Path(path)
    try:
        # One CSV row per matrix row
        if target.suffix.lower() == ".csv":
            frame = pd.read_csv(target, header=None)
            return map_from_payload(frame.to_numpy(dtype=float).tolist())

        # JSON payload
        return map_from_payload(read_json(target))
    except (OSError, ValueError, json.JSONDecodeError, pd.errors.ParserError) as exc:
        raise ConfigError({"file": [str(exc)]}) from None


# Payload of a map
def map_to_payload(forward_map: ForwardMap) -> dict[str, Any]:
    """Return the JSON payload of a map.

    Args:
        forward_map (ForwardMap): The map.

    Returns:
        dict[str, Any]: Matrix payload, or the dimensions of a smooth map.
    """

    if isinstance(forward_map, LinearForwardMap):
        return LinearMapSerializer(forward_map).data
    return {"input_dim": forward_map.input_dim, "output_dim": forward_map.output_dim}


# Save a linear map
def save_map(forward_map: LinearForwardMap, path: str | Path) -> Path:
    """Write a linear map as JSON, or as a headerless CSV for ``.csv`` paths.

    Args:
        forward_map (LinearForwardMap): The map.
        path (str | Path): Destination.

    Returns:
        Path: The destination path.
    """

    target = Path(path)
    if target.suffix.lower() == ".csv":
        return write_csv(target, pd.DataFrame(forward_map.matrix), header=False)
    return write_json(target, map_to_payload(forward_map))
