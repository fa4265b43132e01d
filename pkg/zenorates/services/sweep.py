from __future__ import annotations

import logging
from multiprocessing import Pool
from typing import Sequence

import numpy as np

from zenorates.schemas.model import ModelConfig, QuadratureSpec
from zenorates.schemas.results import RateCurve
from zenorates.services.executor import CurveJob, execute_curve
from zenorates.settings import settings

logger = logging.getLogger(__name__)


def _curve_of(job: CurveJob) -> RateCurve:
    return execute_curve(job).curve


def run_jobs(jobs: Sequence[CurveJob], workers: int | None = None) -> list[RateCurve]:
    """Evaluate jobs, in a process pool when workers > 1; output follows input order."""
    workers = workers if workers is not None else settings.sweep_workers
    if not jobs:
        return []
    if workers <= 1 or len(jobs) == 1:
        curves = [_curve_of(job) for job in jobs]
    else:
        with Pool(processes=min(workers, len(jobs))) as pool:
            curves = pool.map(_curve_of, jobs)

    failed = [curve.label for curve in curves if not curve.succeeded]
    if failed:
        logger.warning(f"{len(failed)} of {len(curves)} curves failed: {', '.join(failed)}")
    return curves


def sweep(
    configs: Sequence[ModelConfig],
    tau_range: Sequence[float],
    n_grid: int,
    *,
    labels: Sequence[str] | None = None,
    spec: QuadratureSpec | None = None,
    with_transitions: bool = False,
    workers: int | None = None,
) -> list[RateCurve]:
    """
    One Γ(τ) curve per config on a shared uniform τ grid.

    A config that fails is returned as an empty curve carrying `error`;
    the sweep itself never aborts.

    Raises:
        ValueError: If the τ range or grid is malformed
    """
    lo, hi = float(tau_range[0]), float(tau_range[1])
    if not 0 < lo < hi:
        raise ValueError(f"tau range must satisfy 0 < lo < hi, got ({lo!r}, {hi!r})")
    if n_grid < 2:
        raise ValueError(f"n_grid must be at least 2, got {n_grid}")
    if labels is not None and len(labels) != len(configs):
        raise ValueError("labels must match configs one to one")

    taus = np.linspace(lo, hi, n_grid).tolist()
    jobs = [
        CurveJob(
            config=config,
            taus=taus,
            label=labels[i] if labels is not None else f"curve-{i}",
            spec=spec,
            with_transitions=with_transitions,
        )
        for i, config in enumerate(configs)
    ]
    return run_jobs(jobs, workers)
