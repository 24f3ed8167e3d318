# Standard library imports
import dataclasses
import enum
import math
from pathlib import PurePath
from typing import Any

# Third-party imports
import numpy as np
from rest_framework.renderers import JSONRenderer


# JSON renderer for run artifacts
class ArtifactJSONRenderer(JSONRenderer):
    """JSON renderer for reports, manifests and measure files.

    Extends DRF's JSONRenderer so that numerical results can be written as strict
    JSON. Non-finite floats become the strings ``"inf"``, ``"-inf"`` and ``"nan"``,
    numpy values become plain lists and numbers, dataclasses become objects and
    enums are written by value.

    Attributes:
        charset (str): Character encoding for output.
        indent (int): Indentation used when the caller gives none.
    """

    # Character encoding for output
    charset = "utf-8"

    # Default indentation for files meant to be read by people
    indent = 2

    # Override render method to sanitize numerical content
    def render(
        self,
        data: Any,
        accepted_media_type: str | None = None,
        renderer_context: dict[str, Any] | None = None,
    ) -> bytes:
        """Render data into strict JSON bytes.

        Args:
            data (Any): The value to render.
            accepted_media_type (str | None): Media type, unused for files.
            renderer_context (dict[str, Any] | None): May carry an ``indent`` key.

        Returns:
            bytes: UTF-8 encoded JSON document.
        """

        # Default indentation unless the caller asks otherwise
        renderer_context = {"indent": self.indent, **(renderer_context or {})}

        # Render the sanitized value
        return super().render(to_json_value(data), accepted_media_type, renderer_context)


# Convert a value into something strict JSON can hold
def to_json_value(value: Any) -> Any:  # noqa: PLR0911
    """Convert numerical and structured values into plain JSON values.

    Args:
        value (Any): Value to convert.

    Returns:
        Any: Plain dicts, lists, strings, numbers, booleans or None.
    """

    # Dataclass instances become dicts
    if dataclasses.is_dataclass(value) and not isinstance(value, type):
        return {field.name: to_json_value(getattr(value, field.name)) for field in dataclasses.fields(value)}

    # Mappings keep their order
    if isinstance(value, dict):
        return {str(key): to_json_value(item) for key, item in value.items()}

    # Arrays and sequences become lists
    if isinstance(value, np.ndarray):
        return [to_json_value(item) for item in value.tolist()]
    if isinstance(value, (list, tuple)):
        return [to_json_value(item) for item in value]

    # Enums are written by value
    if isinstance(value, enum.Enum):
        return to_json_value(value.value)

    # Paths are written as strings
    if isinstance(value, PurePath):
        return str(value)

    # Booleans before numbers, bool is an int
    if isinstance(value, (bool, np.bool_)):
        return bool(value)

    # Integers
    if isinstance(value, (int, np.integer)):
        return int(value)

    # Floats, non-finite values as strings
    if isinstance(value, (float, np.floating)):
        number = float(value)
        if math.isnan(number):
            return "nan"
        if math.isinf(number):
            return "inf" if number > 0 else "-inf"
        return number

    # Anything else is returned as is
    return value
