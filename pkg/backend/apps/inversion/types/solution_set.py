# Standard library imports
from dataclasses import dataclass

# Local application imports
from apps.maps.types import LinearForwardMap
from apps.measures.types import Measure


# Solution set represented by its canonical element
@dataclass(frozen=True, eq=False)
class SolutionSetHandle:
    """All parameter measures whose pushforward is ``data``.

    The set is infinite for underdetermined maps. It is represented by the
    minimal-norm element ``A^+ # data``.

    Attributes:
        map (LinearForwardMap): The forward map.
        data (Measure): The data measure.
        canonical (Measure): ``A^+ # data``.
    """

    map: LinearForwardMap
    data: Measure
    canonical: Measure
