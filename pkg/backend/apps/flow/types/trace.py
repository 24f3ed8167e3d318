# Standard library imports
import math
from dataclasses import dataclass

# Third-party imports
import numpy as np
import pandas as pd
from numpy.typing import NDArray

# Local application imports
from apps.measures.types import Measure

# Columns of a trace table
TRACE_COLUMNS = ["t", "kl", "w2"]


# Least-squares slope of log KL
@dataclass(frozen=True)
class DecayFit:
    """Exponential decay fitted to the tail of a trace.

    Attributes:
        rate (float): Slope of ``log KL`` against time, negative for decay, nan if undefined.
        r2 (float): Coefficient of determination of the fit.
        samples (int): Number of points in the fit.
    """

    rate: float
    r2: float
    samples: int = 0

    @classmethod
    def undefined(cls) -> "DecayFit":
        """Return the fit of a trace too short or too flat to fit."""
        return cls(float("nan"), float("nan"), 0)

    @property
    def defined(self) -> bool:
        """Whether a slope was fitted."""
        return math.isfinite(self.rate)


# Verdict of the exponential decay certificate
@dataclass(frozen=True)
class DecayCertificate:
    """Check of ``KL(t) <= exp(-rate t) KL(0) (1 + slack)`` at every recorded time.

    Attributes:
        rate (float): Certified decay rate.
        slack (float): Relative slack on the bound.
        worst_ratio (float): Largest ``KL(t) / bound(t)``.
        satisfied (bool): Whether every recorded time meets the bound.
    """

    rate: float
    slack: float
    worst_ratio: float
    satisfied: bool


# Diagnostics of one flow run
@dataclass(frozen=True, eq=False)
class FlowTrace:
    """Recorded times, divergences and snapshots of a flow.

    Snapshots are data-space laws. They are in ``Col(A)`` coordinates
    ``z = U^T y`` when ``reduced`` is set, in data coordinates otherwise.

    Attributes:
        times (NDArray[np.float64]): Strictly increasing record times.
        kl_to_target (NDArray[np.float64]): KL to the target at each time.
        w2_to_target (NDArray[np.float64] | None): W2 to the target, nan where unavailable.
        snapshots (tuple[Measure, ...]): Data-space law at each time.
        decay_fit (DecayFit): Fitted decay of the tail.
        reduced (bool): Coordinates of the snapshots.
        clamped_mass (float): Negative density mass removed by a grid scheme.
        valid (bool): Whether clamping stayed below its limit and KL stayed finite.
        final_state (Measure | None): Final state of the flow variable.
    """

    times: NDArray[np.float64]
    kl_to_target: NDArray[np.float64]
    w2_to_target: NDArray[np.float64] | None
    snapshots: tuple[Measure, ...]
    decay_fit: DecayFit
    reduced: bool = True
    clamped_mass: float = 0.0
    valid: bool = True
    final_state: Measure | None = None

    # Validate the series
    def __post_init__(self) -> None:
        times = np.atleast_1d(np.array(self.times, dtype=float))
        kl = np.atleast_1d(np.array(self.kl_to_target, dtype=float))
        if times.ndim != 1 or kl.shape != times.shape or len(self.snapshots) != times.shape[0]:
            raise ValueError("Trace series must have one entry per recorded time.")
        if np.any(np.diff(times) <= 0):
            raise ValueError("Trace times must be strictly increasing.")
        if np.any(np.isnan(kl)) or np.any(kl < 0):
            raise ValueError("KL values must be nonnegative.")
        object.__setattr__(self, "times", times)
        object.__setattr__(self, "kl_to_target", kl)
        object.__setattr__(self, "snapshots", tuple(self.snapshots))
        if self.w2_to_target is not None:
            w2 = np.atleast_1d(np.array(self.w2_to_target, dtype=float))
            if w2.shape != times.shape:
                raise ValueError("Trace series must have one entry per recorded time.")
            object.__setattr__(self, "w2_to_target", w2)

    @property
    def final_snapshot(self) -> Measure:
        """Data-space law at the last recorded time."""
        return self.snapshots[-1]

    # Table for trace.csv
    def as_frame(self) -> pd.DataFrame:
        """Return the trace as a ``t, kl, w2`` table.

        Returns:
            pd.DataFrame: One row per recorded time.
        """

        w2 = self.w2_to_target if self.w2_to_target is not None else np.full(self.times.shape, np.nan)
        return pd.DataFrame({"t": self.times, "kl": self.kl_to_target, "w2": w2}, columns=TRACE_COLUMNS)
