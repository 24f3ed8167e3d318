# Standard library imports
import math
from typing import Any

# Third-party imports
import numpy as np
from django.utils.translation import gettext_lazy as _
from rest_framework import serializers


# Float field rejecting nan and infinity
class FiniteFloatField(serializers.FloatField):
    """Float field that only accepts finite numbers and rejects booleans.

    Attributes:
        default_error_messages (dict[str, str]): Error messages of the field.
    """

    # Error messages
    default_error_messages = {
        **serializers.FloatField.default_error_messages,
        "non_finite": _("A finite number is required."),
        "boolean": _("A number is required, not a boolean."),
    }

    # Convert the incoming value
    def to_internal_value(self, data: Any) -> float:
        """Convert to float and reject non-finite values.

        Args:
            data (Any): Incoming value.

        Returns:
            float: The finite value.
        """

        # Booleans are ints in Python, reject them explicitly
        if isinstance(data, bool):
            self.fail("boolean")

        # Let DRF parse the number
        value = super().to_internal_value(data)

        # Reject nan and infinity
        if not math.isfinite(value):
            self.fail("non_finite")

        # Return the value
        return value


# Non-empty vector of finite floats
class VectorField(serializers.ListField):
    """List of finite floats returned as a 1D numpy array."""

    # Initialize the field
    def __init__(self, **kwargs: Any) -> None:
        """Initialize the field with a finite float child.

        Args:
            **kwargs: Keyword arguments for ``ListField``.
        """

        # Finite float children, at least one entry
        kwargs.setdefault("child", FiniteFloatField())
        kwargs.setdefault("min_length", 1)
        super().__init__(**kwargs)

    # Convert the incoming value
    def to_internal_value(self, data: Any) -> np.ndarray:
        """Validate entries and return an array.

        Args:
            data (Any): Incoming list.

        Returns:
            np.ndarray: Float vector.
        """

        # Validate the list and convert
        return np.asarray(super().to_internal_value(data), dtype=float)


# Rectangular matrix of finite floats
class MatrixField(serializers.ListField):
    """Nested list of finite floats returned as a 2D numpy array.

    Attributes:
        default_error_messages (dict[str, str]): Error messages of the field.
    """

    # Error messages
    default_error_messages = {
        **serializers.ListField.default_error_messages,
        "ragged": _("All rows must have the same length."),
    }

    # Initialize the field
    def __init__(self, **kwargs: Any) -> None:
        """Initialize the field with vector rows.

        Args:
            **kwargs: Keyword arguments for ``ListField``.
        """

        # Vector rows, at least one row
        kwargs.setdefault("child", VectorField())
        kwargs.setdefault("min_length", 1)
        super().__init__(**kwargs)

    # Convert the incoming value
    def to_internal_value(self, data: Any) -> np.ndarray:
        """Validate rows and return a matrix.

        Args:
            data (Any): Incoming nested list.

        Returns:
            np.ndarray: Float matrix.
        """

        # Validate each row
        rows = super().to_internal_value(data)

        # Reject ragged input
        if len({len(row) for row in rows}) != 1:
            self.fail("ragged")

        # Return the matrix
        return np.vstack(rows)
