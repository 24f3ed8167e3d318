# Standard library imports
from pathlib import Path
from typing import Any

# Third-party imports
import numpy as np
import pandas as pd
from rest_framework import serializers

# Local application imports
from apps.common.exceptions import ConfigError, UnsupportedCarrierError
from apps.common.utils import read_json, write_csv, write_json
from apps.measures.serializers.gaussian import GaussianMeasureSerializer
from apps.measures.serializers.grid import GridMeasureSerializer
from apps.measures.serializers.particles import ParticleMeasureSerializer
from apps.measures.types import GaussianMeasure, GridMeasure, Measure, ParticleMeasure

# Serializer per carrier name
CARRIER_SERIALIZERS: dict[str, type[serializers.Serializer]] = {
    "gaussian": GaussianMeasureSerializer,
    "grid": GridMeasureSerializer,
    "particles": ParticleMeasureSerializer,
}


# Infer the carrier of an untyped payload
def payload_carrier(payload: dict[str, Any]) -> str | None:
    """Return the carrier named or implied by a JSON payload.

    Args:
        payload (dict[str, Any]): Measure payload.

    Returns:
        str | None: ``"gaussian"``, ``"grid"``, ``"particles"`` or None.
    """

    # Explicit type wins
    if "type" in payload:
        return payload["type"] if payload["type"] in CARRIER_SERIALIZERS else None

    # Otherwise infer from the keys
    if "mean" in payload:
        return "gaussian"
    if "density" in payload:
        return "grid"
    if "points" in payload:
        return "particles"
    return None


# Build a measure from a JSON payload
def measure_from_payload(payload: Any) -> Measure:
    """Validate an inline payload and build the measure.

    Args:
        payload (Any): Decoded JSON object.

    Returns:
        Measure: The measure.

    Raises:
        ConfigError: With field-level messages when the payload is invalid.
    """

    # Payload must be an object naming a known carrier
    if not isinstance(payload, dict):
        raise ConfigError({"measure": ["Expected a JSON object."]})
    carrier = payload_carrier(payload)
    if carrier is None:
        raise ConfigError({"type": [f"Expected one of {sorted(CARRIER_SERIALIZERS)}."]})

    # Validate with the carrier serializer
    serializer = CARRIER_SERIALIZERS[carrier](data={k: v for k, v in payload.items() if k != "type"})
    if not serializer.is_valid():
        raise ConfigError(serializer.errors)
    return serializer.validated_data["measure"]


# Read a particle CSV
def read_particles_csv(path: str | Path) -> ParticleMeasure:
    """Read a particle cloud from a CSV with header ``x1,...,xd,weight``.

    Args:
        path (str | Path): CSV file.

    Returns:
        ParticleMeasure: The normalized cloud.

    Raises:
        ConfigError: If the header or values are invalid.
    """

    try:
        # Parse the table
        frame = pd.read_csv(path)
    except (OSError, ValueError, pd.errors.ParserError) as exc:
        raise ConfigError({"file": [str(exc)]}) from None

    # Coordinate columns x1..xd followed by weight
    coordinates = [f"x{index}" for index in range(1, frame.shape[1])]
    if list(frame.columns) != [*coordinates, "weight"] or not coordinates:
        raise ConfigError({"file": [f"Expected header {','.join([*coordinates or ['x1'], 'weight'])}."]})

    # Values must be numeric
    try:
        values = frame.to_numpy(dtype=float)
    except ValueError:
        raise ConfigError({"file": ["Particle values must be numeric."]}) from None

    # Validate through the particle serializer
    return measure_from_payload(
        {"type": "particles", "points": values[:, :-1].tolist(), "weights": values[:, -1].tolist()},
    )


# Load any measure file
def load_measure(path: str | Path) -> Measure:
    """Load a measure from CSV (particles) or JSON (Gaussian, grid, particles).

    Args:
        path (str | Path): Measure file.

    Returns:
        Measure: The measure.

    Raises:
        ConfigError: If the file is missing or invalid.
    """

    # Particles come as CSV
    target = Path(path)
    if target.suffix.lower() == ".csv":
        return read_particles_csv(target)

    try:
        # Everything else is JSON
        payload = read_json(target)
    except (OSError, ValueError) as exc:
        raise ConfigError({"file": [str(exc)]}) from None

    # Validate the payload
    return measure_from_payload(payload)


# Payload of a measure
def measure_to_payload(measure: Measure) -> dict[str, Any]:
    """Return the JSON payload of a measure.

    Args:
        measure (Measure): Any carrier.

    Returns:
        dict[str, Any]: Payload accepted by ``measure_from_payload``.
    """

    # Pick the serializer for the carrier
    if isinstance(measure, GaussianMeasure):
        return GaussianMeasureSerializer(measure).data
    if isinstance(measure, GridMeasure):
        return GridMeasureSerializer(measure).data
    return ParticleMeasureSerializer(measure).data


# Save a measure
def save_measure(measure: Measure, path: str | Path) -> Path:
    """Write a measure atomically in its documented file format.

    Args:
        measure (Measure): Any carrier.
        path (str | Path): Destination, ``.csv`` for particles, JSON otherwise.

    Returns:
        Path: The destination path.

    Raises:
        UnsupportedCarrierError: If a Gaussian or grid is written to CSV.
    """

    # Particle clouds as CSV
    target = Path(path)
    if target.suffix.lower() == ".csv":
        if not isinstance(measure, ParticleMeasure):
            raise UnsupportedCarrierError("Only particle measures are written as CSV.")
        columns = {f"x{axis + 1}": measure.points[:, axis] for axis in range(measure.dim)}
        frame = pd.DataFrame({**columns, "weight": np.asarray(measure.weights)})
        return write_csv(target, frame)

    # Everything else as JSON
    return write_json(target, measure_to_payload(measure))
