"""
Oracle self-test suite.

Cross-checks the production path against independent references:

- closed-form kernels vs adaptive quadrature (log-spaced t up to 100)
- closed-form kernels vs dense trapezoid references
- reduction identity vs the direct 2D Simpson integral at every figure
  parameter set and τ ∈ {0.25, 0.5, 1, 2}
- the closed-form Γ⁽¹⁾ pin at τ = π (F = 0)
"""
from __future__ import annotations

import logging
import math

import numpy as np

from zenorates.core.oracle import Kernel, check_kernel, check_reduction
from zenorates.core.rates import gamma1
from zenorates.core.spectral import config_digest
from zenorates.figures import reference_run, registry
from zenorates.schemas.model import ModelConfig, QuadratureSpec, SpectralDensity, ZeroTemperature
from zenorates.schemas.results import OracleReport
from zenorates.services.cli.config_file import model_config
from zenorates.settings import settings

logger = logging.getLogger(__name__)

KERNEL_TIMES = np.logspace(-3, 2, 6)
TRAPEZOID_TIMES = (0.0, 0.5, 1.0, 2.0)
REDUCTION_TAUS = (0.25, 0.5, 1.0, 2.0)

# Tight enough for relative 1e-6 on the smallest kernel values at t = 100
KERNEL_SPEC = QuadratureSpec(abs_tol=1e-13, rel_tol=1e-10, max_subdivisions=5000)

# Φ_R2 crosses zero at t = ω_c⁻¹, where only an absolute comparison is meaningful
QUADRATURE_FLOOR = 1e-12


def figure_configs() -> list[ModelConfig]:
    """Distinct model configs behind every registered figure."""
    seen: dict[str, ModelConfig] = {}
    for name in registry.list():
        for series in registry.build(name):
            config = model_config(series.run)
            seen.setdefault(config_digest(config), config)
    return list(seen.values())


def trapezoid_floor(sd: SpectralDensity) -> float:
    """Twice the trapezoid endpoint error h²/12 · |f′(0)| of the Φ_R2 reference."""
    h = 40.0 * sd.cutoff / (settings.oracle_kernel_points - 1)
    return sd.coupling * h * h / 6.0


def kernel_reports() -> list[OracleReport]:
    unit = SpectralDensity(coupling=1.0)
    zero = ZeroTemperature()
    reports = []
    for kernel in Kernel:
        for t in KERNEL_TIMES:
            reports.append(
                check_kernel(kernel, unit, zero, float(t), 1e-6, against="quadrature", spec=KERNEL_SPEC, abs_floor=QUADRATURE_FLOOR)
            )
        for t in TRAPEZOID_TIMES:
            reports.append(
                check_kernel(kernel, unit, zero, t, 1e-5, against="trapezoid", abs_floor=trapezoid_floor(unit))
            )
    return reports


def reduction_reports() -> list[OracleReport]:
    return [check_reduction(config, tau) for config in figure_configs() for tau in REDUCTION_TAUS]


def pin_report() -> OracleReport:
    """Γ⁽¹⁾(π) at F = 0: s = 1 − (Δ²/2)(1 − cos ετ)/ε²."""
    config = model_config(reference_run(G=None, F=0.0))
    delta, eps, tau = config.system.delta, config.system.epsilon, math.pi
    exact = -math.log1p(-0.5 * delta ** 2 * (1.0 - math.cos(eps * tau)) / eps ** 2) / tau
    return OracleReport.compare(gamma1(config, tau).gamma, exact, 1e-8, name="gamma1 pin tau=pi")


def run_selftest() -> list[OracleReport]:
    reports = [*kernel_reports(), *reduction_reports(), pin_report()]
    failed = [report for report in reports if not report.passed]
    for report in failed:
        logger.error(f"Self-test failed: {report.name} rel_diff={report.rel_diff:.3e} > {report.tolerance:g}")
    logger.info(f"Self-test: {len(reports) - len(failed)}/{len(reports)} checks passed")
    return reports
