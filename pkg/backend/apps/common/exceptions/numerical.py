# Third-party imports
from django.utils.translation import gettext_lazy as _

# Local application imports
from apps.common.exceptions.base import StochInverseError


# Base class for numerical failures
class NumericalError(StochInverseError):
    """A computation could not be carried out on the given inputs."""

    default_message = _("Numerical error.")
    exit_code = 3


class InvalidMeasureError(NumericalError):
    """Measure construction violated a type invariant."""

    default_message = _("Invalid measure.")


class ZeroMassError(NumericalError):
    """Total mass is zero, negative or not finite."""

    default_message = _("Total mass must be positive and finite.")


class DegenerateRestrictionError(NumericalError):
    """The quadratic form restricted to a subspace is not positive definite."""

    default_message = _("Restricted quadratic form is not positive definite.")


class DegenerateImageError(NumericalError):
    """An affine image of a Gaussian has a singular covariance."""

    default_message = _("Pushforward covariance is degenerate.")


class DimensionMismatchError(NumericalError):
    """Operand dimensions do not agree."""

    default_message = _("Dimension mismatch.")


class NotOrthonormalError(NumericalError):
    """A basis matrix does not have orthonormal columns."""

    default_message = _("Basis columns are not orthonormal.")


class RankDeficientError(NumericalError):
    """A linear map does not have full rank."""

    default_message = _("Linear map is rank deficient.")


class MissingInverseError(NumericalError):
    """A smooth map was used where its inverse is required."""

    default_message = _("Forward map has no inverse.")


class NonInvertibleMapError(NumericalError):
    """A solver requiring an invertible forward map received another one."""

    default_message = _("Forward map is not invertible.")


class ShapeError(NumericalError):
    """A matrix has a shape the solver does not accept."""

    default_message = _("Unsupported matrix shape.")


class SizeCapError(NumericalError):
    """A transport problem exceeds the configured cost matrix cap."""

    default_message = _("Transport problem exceeds the size cap, use Sinkhorn.")


class GridMismatchError(NumericalError):
    """Two grid measures do not share the same grid."""

    default_message = _("Grids do not match.")


class SupportMismatchError(NumericalError):
    """A prior vanishes where the data has mass."""

    default_message = _("Prior vanishes where the pulled back data is positive.")


class UnsupportedCarrierError(NumericalError):
    """A measure representation is not accepted by an operation."""

    default_message = _("Measure carrier is not supported by this operation.")


class NonConvexGeneratorError(NumericalError):
    """An f-divergence generator fails the convexity or normalization checks."""

    default_message = _("Generator must be convex with f(1) = 0.")


class BandwidthRequiredError(NumericalError):
    """A density has to be estimated but no bandwidth was configured."""

    default_message = _("A kernel bandwidth is required.")


class NonFiniteVelocityError(NumericalError):
    """A particle velocity has a non-finite component."""

    default_message = _("Velocity field is not finite.")


class CFLViolationError(NumericalError):
    """A grid time step exceeds the explicit stability limit."""

    default_message = _("Time step violates the CFL condition.")
