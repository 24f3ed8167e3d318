# Standard library imports
from argparse import ArgumentParser
from dataclasses import asdict
from pathlib import Path
from typing import Any

# Local application imports
from apps.common.exceptions import ConfigError
from apps.common.management import StochInverseCommand
from apps.common.utils import write_json
from apps.divergences.services import wasserstein_distance
from apps.inversion.services import direct_invert
from apps.maps.types import ForwardMap, LinearForwardMap
from apps.maps.utils import load_map
from apps.measures.services import second_moment
from apps.measures.types import Measure, ParticleMeasure
from apps.measures.utils import load_measure, measure_to_payload, save_measure
from apps.variational.services import entropy_error_identity, solve_entropy_entropy, solve_w2_tikhonov


# Regularized reconstruction of a data file
class Command(StochInverseCommand):
    """Write ``solution`` and ``report.json`` into ``--out``, or print the report."""

    help = "Regularized inversion with the KL-KL or the W2-W2 objective."

    # Command arguments
    def add_command_arguments(self, parser: ArgumentParser) -> None:
        parser.add_argument("--pair", choices=["kl", "w2"], required=True, help="Divergence and regularizer pair.")
        parser.add_argument("--map", type=Path, required=True, help="Forward map file.")
        parser.add_argument("--data", type=Path, required=True, help="Data measure file.")
        parser.add_argument("--prior", type=Path, default=None, help="Prior measure file, KL pair only.")
        parser.add_argument("--alpha", type=float, default=0.5, help="Regularization weight.")
        parser.add_argument("--truth", type=Path, default=None, help="Ground truth measure file.")
        parser.add_argument("--noise-w2", type=float, default=None, help="W2 noise level of the data.")

    # Command body
    def run(self, **options: Any) -> bool:
        # Option checks
        if not options["alpha"] >= 0:
            raise ConfigError({"alpha": ["Must be nonnegative."]})
        if options["pair"] == "kl" and options["prior"] is None:
            raise ConfigError({"prior": ["The KL pair needs a prior."]})

        # Inputs
        forward_map = load_map(options["map"])
        data = load_measure(options["data"])
        truth = None if options["truth"] is None else load_measure(options["truth"])

        # Solve
        if options["pair"] == "kl":
            solution, report, passed = self._entropy(forward_map, data, truth, **options)
        else:
            solution, report, passed = self._tikhonov(forward_map, data, truth, **options)

        # Print or write the outputs
        if options["out"] is None:
            self.emit({**report, "solution": measure_to_payload(solution)})
        else:
            name = "solution.csv" if isinstance(solution, ParticleMeasure) else "solution.json"
            save_measure(solution, options["out"] / name)
            write_json(options["out"] / "report.json", report)
            self.info(f"Wrote {options['out']}", **options)
        return passed

    # KL-KL pair
    def _entropy(
        self,
        forward_map: ForwardMap,
        data: Measure,
        truth: Measure | None,
        **options: Any,
    ) -> tuple[Measure, dict[str, Any], bool]:
        # Closed form solution
        prior = load_measure(options["prior"])
        result = solve_entropy_entropy(forward_map, data, prior, options["alpha"], truth=truth)
        report: dict[str, Any] = {
            "pair": "kl",
            "alpha": result.alpha,
            "normalization_c": result.normalization_c,
            "error_terms": None,
            "identity": None,
        }

        # Error identity against the truth
        if truth is not None:
            identity = entropy_error_identity(result, truth, forward_map, data, prior)
            report["error_terms"] = asdict(result.error_terms)
            report["identity"] = asdict(identity)
        return result.solution, report, True

    # W2-W2 pair
    def _tikhonov(
        self,
        forward_map: ForwardMap,
        data: Measure,
        truth: Measure | None,
        **options: Any,
    ) -> tuple[Measure, dict[str, Any], bool]:
        if not isinstance(forward_map, LinearForwardMap):
            raise ConfigError({"map": ["The W2 pair needs a linear map."]})

        # Noise level and moment from the truth when available
        noise = options["noise_w2"]
        moment = None
        if truth is not None:
            moment = second_moment(truth)
            if noise is None:
                noise = float(wasserstein_distance(truth, data)["value"])

        # Closed form solution
        result = solve_w2_tikhonov(forward_map, data, options["alpha"], noise, moment)
        report: dict[str, Any] = {
            "pair": "w2",
            "alpha": result.alpha,
            "operator": result.operator,
            "bound": None if result.bound is None else result.bound.as_dict(),
            "error_w2": None,
            "satisfied": None,
        }

        # Reconstruction error against A^+ # truth
        passed = True
        if truth is not None and result.bound is not None:
            error = float(wasserstein_distance(result.solution, direct_invert(forward_map, truth))["value"])
            passed = error <= result.bound.operator_total * (1.0 + 1e-6)
            report["error_w2"] = error
            report["satisfied"] = passed
        return result.solution, report, passed
