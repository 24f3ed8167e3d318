# Standard library imports
from dataclasses import dataclass, field
from typing import Any


# Outcome of one acceptance check
@dataclass(frozen=True)
class Verdict:
    """A named pass or fail check with the compared numbers.

    Attributes:
        criterion (str): Name of the check.
        passed (bool): Whether the check passed.
        value (float | None): Measured value.
        bound (float | None): Value it was compared against.
        detail (str): Optional message, e.g. the error of a failed run.
    """

    criterion: str
    passed: bool
    value: float | None = None
    bound: float | None = None
    detail: str = ""


# Record of one experiment run
@dataclass
class RunManifest:
    """What a run produced, persisted as ``manifest.json`` in its output directory.

    Attributes:
        name (str): Experiment name.
        kind (str): Experiment kind.
        seed (int): Seed of the run.
        config_hash (str): SHA-256 of the canonical configuration JSON.
        versions (dict[str, str]): Versions of the numerical packages.
        wall_clock_seconds (float): Duration of the run.
        artifacts (list[str]): Every file of the output directory, relative to it.
        verdicts (list[Verdict]): Acceptance checks of the run.
    """

    name: str
    kind: str
    seed: int
    config_hash: str
    versions: dict[str, str]
    wall_clock_seconds: float = 0.0
    artifacts: list[str] = field(default_factory=list)
    verdicts: list[Verdict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        """Whether every verdict passed."""
        return all(verdict.passed for verdict in self.verdicts)

    # Build from a decoded manifest file
    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "RunManifest":
        """Rebuild a manifest from its JSON form.

        Args:
            data (dict[str, Any]): Decoded ``manifest.json``, or a task result.

        Returns:
            RunManifest: The manifest.
        """

        verdicts = [
            Verdict(**{**verdict, "value": _number(verdict.get("value")), "bound": _number(verdict.get("bound"))})
            for verdict in data.get("verdicts", [])
        ]
        return cls(**{**data, "verdicts": verdicts})


# Undo the string encoding of non-finite floats
def _number(value: Any) -> float | None:
    return None if value is None else float(value)
