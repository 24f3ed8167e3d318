# Local application imports
from apps.variational.services.entropy import entropy_error_identity, entropy_objective, solve_entropy_entropy
from apps.variational.services.objectives import augmented_objective_check, tikhonov_objective
from apps.variational.services.sweep import SWEEP_COLUMNS, tikhonov_sweep
from apps.variational.services.tikhonov import (
    balanced_alpha,
    solve_w2_tikhonov,
    tikhonov_error_bound,
    tikhonov_operator,
)

# Exports
__all__ = [
    "SWEEP_COLUMNS",
    "augmented_objective_check",
    "balanced_alpha",
    "entropy_error_identity",
    "entropy_objective",
    "solve_entropy_entropy",
    "solve_w2_tikhonov",
    "tikhonov_error_bound",
    "tikhonov_objective",
    "tikhonov_operator",
    "tikhonov_sweep",
]
