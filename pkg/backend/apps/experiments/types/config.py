# Standard library imports
from dataclasses import dataclass, field
from enum import StrEnum
from pathlib import Path
from typing import Any


# Kinds of experiment the runner knows
class ExperimentKind(StrEnum):
    """Experiment kinds, written in configs by value."""

    STABILITY = "stability"
    REGULARIZE_SWEEP = "regularizeSweep"
    FLOW_CONVERGENCE = "flowConvergence"
    EQUILIBRIUM_CONTRAST = "equilibriumContrast"
    DISTANCE = "distance"
    INVERT = "invert"


# Validated experiment configuration
@dataclass(frozen=True, eq=False)
class ExperimentConfig:
    """One experiment, as validated from its JSON file.

    Attributes:
        name (str): Non-blank experiment name.
        kind (ExperimentKind): What the experiment runs.
        seed (int): Seed of every random stream, 0 <= seed < 2**64.
        parameters (dict[str, Any]): Kind specific values with measures and maps built.
        output_dir (Path): Directory receiving the artifacts.
        payload (dict[str, Any]): The configuration as written, with the seed resolved.
    """

    name: str
    kind: ExperimentKind
    seed: int
    parameters: dict[str, Any]
    output_dir: Path
    payload: dict[str, Any] = field(default_factory=dict)
