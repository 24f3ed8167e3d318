# Local application imports
from apps.variational.types.entropy import EntropyErrorTerms, EntropyRegularizedSolution, ErrorIdentity
from apps.variational.types.tikhonov import TikhonovBound, TikhonovW2Solution

# Exports
__all__ = [
    "EntropyErrorTerms",
    "EntropyRegularizedSolution",
    "ErrorIdentity",
    "TikhonovBound",
    "TikhonovW2Solution",
]
