# Local application imports
from apps.experiments.tasks.run_experiment_file import run_experiment_file

# Exports
__all__ = [
    "run_experiment_file",
]
