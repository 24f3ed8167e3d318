# Integrator step size is large relative to the fastest rate
class StiffnessWarning(RuntimeWarning):
    """Explicit integration step is large compared to the fastest decay rate."""


# Iterative solver stopped before meeting its tolerance
class NotConvergedWarning(RuntimeWarning):
    """Iterative solver hit its iteration limit."""
