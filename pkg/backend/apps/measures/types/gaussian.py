# Standard library imports
import math
from dataclasses import dataclass
from functools import cached_property

# Third-party imports
import numpy as np
from numpy.typing import ArrayLike, NDArray
from scipy import linalg
from scipy.stats import qmc

# Local application imports
from apps.common.exceptions import InvalidMeasureError
from apps.measures.types.certificate import LogConcavityCertificate

# Tolerance on covariance symmetry
SYMMETRY_TOLERANCE = 1e-12


# Gaussian measure
@dataclass(frozen=True, eq=False)
class GaussianMeasure:
    """Nondegenerate Gaussian measure N(mean, cov).

    Attributes:
        mean (NDArray[np.float64]): Mean vector, shape (d,).
        cov (NDArray[np.float64]): Symmetric positive definite covariance, shape (d, d).
    """

    mean: NDArray[np.float64]
    cov: NDArray[np.float64]

    # Validate and freeze the arrays
    def __post_init__(self) -> None:
        # Convert, scalars become 1D
        mean = np.atleast_1d(np.array(self.mean, dtype=float))
        cov = np.atleast_2d(np.array(self.cov, dtype=float))

        # Shape checks
        if mean.ndim != 1 or cov.shape != (mean.shape[0], mean.shape[0]):
            raise InvalidMeasureError("Gaussian covariance must be a (d, d) matrix matching the mean.")
        if not (np.all(np.isfinite(mean)) and np.all(np.isfinite(cov))):
            raise InvalidMeasureError("Gaussian mean and covariance must be finite.")

        # Symmetric positive definite
        if np.max(np.abs(cov - cov.T)) > SYMMETRY_TOLERANCE:
            raise InvalidMeasureError("Gaussian covariance must be symmetric.")
        if np.linalg.eigvalsh(cov)[0] <= 0:
            raise InvalidMeasureError("Gaussian covariance must be positive definite.")

        # Freeze the arrays
        mean.setflags(write=False)
        cov.setflags(write=False)
        object.__setattr__(self, "mean", mean)
        object.__setattr__(self, "cov", cov)

    @property
    def dim(self) -> int:
        """Dimension of the ambient space."""
        return int(self.mean.shape[0])

    @cached_property
    def cholesky(self) -> NDArray[np.float64]:
        """Lower Cholesky factor of the covariance."""
        return linalg.cholesky(self.cov, lower=True)

    @cached_property
    def precision(self) -> NDArray[np.float64]:
        """Inverse covariance."""
        return linalg.cho_solve((self.cholesky, True), np.eye(self.dim))

    @cached_property
    def log_det_cov(self) -> float:
        """Log determinant of the covariance."""
        return float(2.0 * np.sum(np.log(np.diag(self.cholesky))))

    # Log density at one or many points
    def log_density(self, x: ArrayLike) -> NDArray[np.float64] | float:
        """Evaluate the log density.

        Args:
            x (ArrayLike): One point (d,) or points (N, d).

        Returns:
            NDArray[np.float64] | float: Log density values.
        """

        points = np.asarray(x, dtype=float)
        single = points.ndim == 1
        centred = np.atleast_2d(points) - self.mean
        whitened = linalg.solve_triangular(self.cholesky, centred.T, lower=True)
        values = -0.5 * (np.sum(whitened**2, axis=0) + self.log_det_cov + self.dim * math.log(2 * math.pi))
        return float(values[0]) if single else values

    # Density at one or many points
    def density(self, x: ArrayLike) -> NDArray[np.float64] | float:
        """Evaluate the density.

        Args:
            x (ArrayLike): One point (d,) or points (N, d).

        Returns:
            NDArray[np.float64] | float: Density values.
        """

        return np.exp(self.log_density(x))

    # Gradient of the log density
    def score(self, x: ArrayLike) -> NDArray[np.float64]:
        """Evaluate the score ``-cov^{-1}(x - mean)``.

        Args:
            x (ArrayLike): One point (d,) or points (N, d).

        Returns:
            NDArray[np.float64]: Score vectors with the shape of ``x``.
        """

        points = np.asarray(x, dtype=float)
        return -(points - self.mean) @ self.precision

    # Pseudo-random samples
    def sample(self, count: int, rng: np.random.Generator) -> NDArray[np.float64]:
        """Draw samples with the given generator.

        Args:
            count (int): Number of samples.
            rng (np.random.Generator): Source of randomness.

        Returns:
            NDArray[np.float64]: Samples, shape (count, d).
        """

        return self.mean + rng.standard_normal((count, self.dim)) @ self.cholesky.T

    # Quasi-random samples
    def quasi_sample(self, count: int, seed: int) -> NDArray[np.float64]:
        """Draw scrambled Sobol samples mapped to this Gaussian.

        Args:
            count (int): Number of samples.
            seed (int): Seed for the scrambling.

        Returns:
            NDArray[np.float64]: Samples, shape (count, d).
        """

        engine = qmc.MultivariateNormalQMC(mean=self.mean, cov=self.cov, seed=seed)
        return engine.random(count)

    # Log-concavity constant
    def log_concavity(self) -> LogConcavityCertificate:
        """Return the log-concavity certificate, 1 / largest covariance eigenvalue.

        Returns:
            LogConcavityCertificate: The certificate.
        """

        return LogConcavityCertificate(1.0 / float(np.linalg.eigvalsh(self.cov)[-1]))
