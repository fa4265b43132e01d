"""
Curve executor.

Evaluates one Γ(τ) curve and captures any failure in the result instead
of raising, so a sweep survives a bad configuration.
"""
import logging
import time
from typing import Optional, Sequence

from pydantic import BaseModel, ConfigDict, Field

from zenorates.core.rates import rate_curve
from zenorates.core.regime import find_transitions
from zenorates.core.spectral import config_digest
from zenorates.schemas.model import ModelConfig, QuadratureSpec
from zenorates.schemas.results import RateCurve, TransitionPoint

logger = logging.getLogger(__name__)


class CurveJob(BaseModel):
    """Everything a worker process needs to evaluate one curve."""
    model_config = ConfigDict(frozen=True)

    config: ModelConfig
    taus: list[float] = Field(..., min_length=1)
    label: str = ""
    spec: QuadratureSpec | None = None
    with_transitions: bool = False


class CurveResult:
    """Result of a curve evaluation."""

    def __init__(
        self,
        curve: RateCurve,
        error_message: Optional[str] = None,
        duration_seconds: Optional[float] = None,
    ):
        self.curve = curve
        self.error_message = error_message
        self.duration_seconds = duration_seconds

    @property
    def success(self) -> bool:
        return self.error_message is None

    def __repr__(self) -> str:
        status = "SUCCESS" if self.success else "FAILED"
        duration = f"{self.duration_seconds:.2f}s" if self.duration_seconds else "N/A"
        return f"<CurveResult {self.curve.label!r} {status} duration={duration}>"

    def __bool__(self) -> bool:
        return self.success


class CurveExecutor:
    """
    Runs CurveJobs.

    Example:
        result = CurveExecutor().execute(CurveJob(config=config, taus=[0.5, 1.0]))
        if not result:
            print(result.error_message)
    """

    def execute(self, job: CurveJob) -> CurveResult:
        logger.info(f"Evaluating curve '{job.label}' ({len(job.taus)} points)")
        start_time = time.time()

        try:
            curve = rate_curve(job.config, job.taus, spec=job.spec, label=job.label)
            if job.with_transitions:
                curve = curve.model_copy(update={"transitions": self._transitions(job)})
        except Exception as e:
            duration = time.time() - start_time
            error_message = self._format_exception(e)
            logger.error(f"Curve '{job.label}' failed after {duration:.2f}s: {error_message}")
            failed = RateCurve(config_digest=config_digest(job.config), label=job.label, error=error_message)
            return CurveResult(curve=failed, error_message=error_message, duration_seconds=duration)

        duration = time.time() - start_time
        logger.info(f"Curve '{job.label}' completed in {duration:.2f}s")
        return CurveResult(curve=curve, duration_seconds=duration)

    @staticmethod
    def _transitions(job: CurveJob) -> list[TransitionPoint]:
        taus: Sequence[float] = sorted(job.taus)
        return find_transitions(job.config, (taus[0], taus[-1]), max(len(taus), 16), spec=job.spec)

    @staticmethod
    def _format_exception(exception: Exception) -> str:
        exc_type = type(exception).__name__
        exc_message = str(exception)
        return f"{exc_type}: {exc_message}" if exc_message else exc_type


def execute_curve(job: CurveJob) -> CurveResult:
    """Module-level entry point (picklable for worker pools)."""
    return CurveExecutor().execute(job)
