# Local application imports
from apps.divergences.types.coupling import Coupling
from apps.divergences.types.f_divergence import FDivergenceName, FDivergenceSpec
from apps.divergences.types.sinkhorn import SinkhornResult

# Exports
__all__ = ["Coupling", "FDivergenceName", "FDivergenceSpec", "SinkhornResult"]
