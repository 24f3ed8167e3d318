# Standard library imports
import math
from collections.abc import Callable
from dataclasses import dataclass, field
from enum import StrEnum

# Third-party imports
import numpy as np
from numpy.typing import NDArray
from scipy import special

# Local application imports
from apps.common.exceptions import NonConvexGeneratorError

# Scalar generator acting elementwise on arrays
Generator = Callable[[NDArray[np.float64]], NDArray[np.float64]]

# Ratios where convexity of a generator is probed
PROBE_RATIOS = np.logspace(-3.0, 3.0, 61)


# Known generators
class FDivergenceName(StrEnum):
    """Names of the built-in f-divergence generators.

    ``TOTAL_VARIATION`` is the total variation generator ``|x - 1| / 2``. Its
    divergence is the TV distance in [0, 1]. Squared TV is not an f-divergence,
    so it is obtained by squaring that value and has no generator of its own.
    """

    KL = "kl"
    CHI_SQUARED = "chi2"
    TOTAL_VARIATION = "tv"
    CUSTOM = "custom"


# Generator of an f-divergence
@dataclass(frozen=True)
class FDivergenceSpec:
    """Convex generator ``f`` with ``f(1) = 0`` and its derivatives.

    ``recession`` is ``lim f(x)/x`` as x grows, the price per unit of mass where
    the reference measure vanishes. It is infinite for KL and chi-squared.

    Attributes:
        name (FDivergenceName): Generator name.
        f (Generator): The generator.
        f_prime (Generator): First derivative.
        f_double_prime (Generator): Second derivative.
        recession (float): Asymptotic slope of f.
        strictly_convex (bool): Whether f'' is positive on the probe ratios.
    """

    name: FDivergenceName
    f: Generator
    f_prime: Generator
    f_double_prime: Generator
    recession: float = math.inf
    strictly_convex: bool = field(init=False, default=True)

    # Check the generator
    def __post_init__(self) -> None:
        # Normalization at one
        value_at_one = float(np.asarray(self.f(np.array([1.0])))[0])
        if not math.isfinite(value_at_one) or abs(value_at_one) > 1e-12:  # noqa: PLR2004
            raise NonConvexGeneratorError("Generator must vanish at one.", name=str(self.name), f_of_one=value_at_one)

        # Convexity on the probe ratios
        curvature = np.asarray(self.f_double_prime(PROBE_RATIOS), dtype=float)
        if not np.all(np.isfinite(curvature)) or np.any(curvature < 0):
            raise NonConvexGeneratorError("Generator second derivative must be nonnegative.", name=str(self.name))
        object.__setattr__(self, "strictly_convex", bool(np.all(curvature > 0)))

    # Kullback-Leibler generator
    @classmethod
    def kl(cls) -> "FDivergenceSpec":
        """Return ``f(x) = x log x``."""
        return cls(
            FDivergenceName.KL,
            f=lambda x: special.xlogy(x, x),
            f_prime=lambda x: np.log(x) + 1.0,
            f_double_prime=lambda x: 1.0 / x,
        )

    # Pearson chi-squared generator
    @classmethod
    def chi_squared(cls) -> "FDivergenceSpec":
        """Return ``f(x) = (x - 1)^2``."""
        return cls(
            FDivergenceName.CHI_SQUARED,
            f=lambda x: (x - 1.0) ** 2,
            f_prime=lambda x: 2.0 * (x - 1.0),
            f_double_prime=lambda x: np.full_like(x, 2.0, dtype=float),
        )

    # Total variation generator
    @classmethod
    def total_variation(cls) -> "FDivergenceSpec":
        """Return ``f(x) = |x - 1| / 2``, convex but not strictly."""
        return cls(
            FDivergenceName.TOTAL_VARIATION,
            f=lambda x: 0.5 * np.abs(x - 1.0),
            f_prime=lambda x: 0.5 * np.sign(x - 1.0),
            f_double_prime=lambda x: np.zeros_like(x, dtype=float),
            recession=0.5,
        )

    # User supplied generator
    @classmethod
    def custom(
        cls,
        f: Generator,
        f_prime: Generator,
        f_double_prime: Generator,
        recession: float = math.inf,
    ) -> "FDivergenceSpec":
        """Return a checked user generator.

        Args:
            f (Generator): The generator.
            f_prime (Generator): First derivative.
            f_double_prime (Generator): Second derivative.
            recession (float): Asymptotic slope of f.

        Returns:
            FDivergenceSpec: The checked spec.

        Raises:
            NonConvexGeneratorError: If f(1) != 0 or f'' < 0 somewhere on the probes.
        """

        return cls(FDivergenceName.CUSTOM, f, f_prime, f_double_prime, recession=recession)

    # Built-in generator by name
    @classmethod
    def from_name(cls, name: str) -> "FDivergenceSpec":
        """Return the built-in generator called ``name``.

        Args:
            name (str): ``kl``, ``chi2`` or ``tv``.

        Returns:
            FDivergenceSpec: The spec.

        Raises:
            ValueError: For unknown names and for ``custom``.
        """

        factories = {
            FDivergenceName.KL: cls.kl,
            FDivergenceName.CHI_SQUARED: cls.chi_squared,
            FDivergenceName.TOTAL_VARIATION: cls.total_variation,
        }
        key = FDivergenceName(name)
        if key not in factories:
            raise ValueError(f"No built-in generator named {name!r}.")
        return factories[key]()
