"""
Sweep runner
Evaluates every grid point of a SweepSpec on a worker pool
"""

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from typing import List, Sequence, Tuple

from ..cross_section import CrossSectionValue, hard_sphere_total_closed_form, total_cross_section
from ..errors import ConvergenceError, DegeneracyError
from ..scattering import HardSphere, ScattererModel, scatterer_model
from .spec import EvaluationPath, SweepRecord, SweepSpec

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_NOT_CONVERGED = 3
EXIT_DEGENERATE = 4


class SweepRunner:
    """
    Runs a sweep with a thread pool.

    Points may finish in any order; results always come back in the
    row-major order of the grid.
    """

    def __init__(self, spec: SweepSpec):
        self.spec = spec
        self.model: ScattererModel = scatterer_model(spec.model)
        self.closed_form = spec.path is EvaluationPath.CLOSED_FORM and isinstance(self.model, HardSphere)
        if spec.path is EvaluationPath.CLOSED_FORM and not self.closed_form:
            logger.info(f"model {spec.model} has no closed form; using its phase shifts")

    def _total(self, ka: float, mu0: float) -> CrossSectionValue:
        if self.closed_form:
            return hard_sphere_total_closed_form(ka, mu0, self.spec.statistics, self.spec.policy)
        return total_cross_section(self.model, ka, mu0, self.spec.statistics, self.spec.policy)

    def _record(self, value: CrossSectionValue) -> SweepRecord:
        sigma = value.sigma_normalized if self.spec.normalization else value.sigma
        return SweepRecord(
            ka=value.ka,
            mu0=value.mu0,
            statistics=value.statistics,
            sigma_normalized=sigma,
            sigma_raw=value.sigma_raw,
            channels_used=value.channels_used,
            convergence_residual=value.residual,
            degenerate_flag=value.degenerate,
            converged=value.converged,
        )

    def evaluate(self, point: Tuple[float, float]) -> SweepRecord:
        """Evaluate one (ka, mu0) point; failures become flagged records"""
        ka, mu0 = point
        try:
            return self._record(self._total(ka, mu0))
        except ConvergenceError as exc:
            logger.warning(f"point ka={ka}, mu0={mu0} did not converge: {exc}")
            return self._record(exc.partial)
        except DegeneracyError as exc:
            logger.warning(f"point ka={ka}, mu0={mu0} is degenerate without a closed form: {exc}")
            return SweepRecord(
                ka=ka,
                mu0=mu0,
                statistics=self.spec.statistics,
                sigma_normalized=math.nan,
                sigma_raw=math.nan,
                channels_used=0,
                convergence_residual=math.nan,
                degenerate_flag=True,
                converged=True,
                fallback_missing=True,
            )

    def run(self) -> List[SweepRecord]:
        points = list(self.spec.points())
        logger.info(
            f"sweep of {len(points)} points ({self.spec.statistics.value}, "
            f"{self.spec.path.value}) on {self.spec.workers} workers"
        )
        if self.spec.workers == 1:
            return [self.evaluate(point) for point in points]
        with ThreadPoolExecutor(max_workers=self.spec.workers) as executor:
            return list(executor.map(self.evaluate, points))


def run_sweep(spec: SweepSpec) -> List[SweepRecord]:
    """
    Evaluate every point of spec.

    Returns:
        List[SweepRecord]: one record per point, ka outer and mu0 inner;
        non-converged points carry their partial value and converged=False
    """
    return SweepRunner(spec).run()


def sweep_exit_status(records: Sequence[SweepRecord]) -> int:
    """0 when clean, 3 if any point failed to converge, else 4 for an unresolved degeneracy"""
    if any(not record.converged for record in records):
        return EXIT_NOT_CONVERGED
    if any(record.fallback_missing for record in records):
        return EXIT_DEGENERATE
    return EXIT_OK
