# Local application imports
from apps.flow.types.config import FlowConfig, FlowObjective, FlowScheme, StateDensity
from apps.flow.types.equilibrium import MARGIN_FACTOR, EquilibriumClassification, EquilibriumLabel
from apps.flow.types.trace import TRACE_COLUMNS, DecayCertificate, DecayFit, FlowTrace

# Exports
__all__ = [
    "MARGIN_FACTOR",
    "TRACE_COLUMNS",
    "DecayCertificate",
    "DecayFit",
    "EquilibriumClassification",
    "EquilibriumLabel",
    "FlowConfig",
    "FlowObjective",
    "FlowScheme",
    "FlowTrace",
    "StateDensity",
]
