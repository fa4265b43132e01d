"""
Independent brute-force references.

Fixed grids only, no adaptive engine: the double time integral is
evaluated directly on the triangle 0 ≤ t₂ ≤ t₁ ≤ τ with composite Simpson
rules, and the bath kernels by a dense trapezoid rule over frequency.
"""
from __future__ import annotations

import enum as py_enum
import logging
from pathlib import Path
from typing import Callable, Sequence

import numpy as np
from numpy.typing import ArrayLike
from scipy import integrate as sp_integrate

from zenorates.core.kernels import KernelMethod, phi_i1, phi_i2, phi_r1, phi_r2
from zenorates.core.quadrature import weighted_time_integral
from zenorates.core.rates import effective_rate, integrand_for, survival_probability
from zenorates.core.spectral import coth_factor, spectral_density
from zenorates.repositories.csv_store import CurveRepository
from zenorates.schemas.model import ModelConfig, QuadratureSpec, SpectralDensity, Temperature, ZeroTemperature
from zenorates.schemas.results import OracleReport, RateCurve
from zenorates.settings import settings

logger = logging.getLogger(__name__)

# Agreement this close is exact for all practical purposes (both sides ≈ 1)
ABS_FLOOR = 1e-15


class Kernel(str, py_enum.Enum):
    phi_r1 = "phi_r1"
    phi_i1 = "phi_i1"
    phi_r2 = "phi_r2"
    phi_i2 = "phi_i2"


# ─────────────────────────────────────────────────────────────────
# Time double integral
# ─────────────────────────────────────────────────────────────────

def double_integral_2d(f: Callable[[ArrayLike], ArrayLike], tau: float, n: int | None = None) -> float:
    """
    ∫₀^τ dt₁ ∫₀^{t₁} dt₂ f(t₁ − t₂) on an (n + 1)² grid, Simpson in both directions.

    Row i of the inner integral covers [0, t₁ᵢ] with the grid's own nodes;
    rows with an odd number of intervals use scipy's end correction, and the
    one-interval row falls back to the trapezoid rule. f must accept arrays.

    Raises:
        ValueError: If n is odd or below 8, or tau <= 0

    Example:
        double_integral_2d(lambda u: np.ones_like(u), 1.0, 100)  # 0.5
    """
    n = n if n is not None else settings.oracle_grid_size
    if n < 8 or n % 2:
        raise ValueError(f"grid size must be even and at least 8, got {n}")
    if tau <= 0:
        raise ValueError(f"tau must be positive, got {tau!r}")

    t = np.linspace(0.0, tau, n + 1)
    # t₁ᵢ − t₂ⱼ = (i − j)h on the grid, so f is sampled once per lag
    lags = np.broadcast_to(np.asarray(f(t), dtype=float), t.shape)

    inner = np.zeros(n + 1)
    for i in range(1, n + 1):
        row = lags[i::-1]  # f(t₁ᵢ − t₂ⱼ) for j = 0..i
        inner[i] = sp_integrate.simpson(row, x=t[: i + 1])
    return float(sp_integrate.simpson(inner, x=t))


def survival_reference(config: ModelConfig, tau: float, n: int | None = None) -> float:
    """s(τ) from the 2D grid instead of the adaptive reduction."""
    return 1.0 - 2.0 * double_integral_2d(integrand_for(config), tau, n)


# ─────────────────────────────────────────────────────────────────
# Kernel references
# ─────────────────────────────────────────────────────────────────

def _kernel_samples(
    kernel: Kernel,
    sd: SpectralDensity,
    temperature: Temperature,
    t: float,
    omega: np.ndarray,
) -> np.ndarray:
    positive = omega > 0
    w = np.where(positive, omega, 1.0)
    j = np.asarray(spectral_density(sd, w))
    thermal = np.asarray(coth_factor(temperature, w))
    finite_t = not isinstance(temperature, ZeroTemperature)

    if kernel is Kernel.phi_r1:
        values = 8.0 * j * np.sin(0.5 * w * t) ** 2 / w ** 2 * thermal
        at_zero = 4.0 * sd.coupling * t * t / temperature.beta if finite_t and sd.is_ohmic else 0.0
    elif kernel is Kernel.phi_i1:
        values = 4.0 * j * np.sin(w * t) / w ** 2
        at_zero = 4.0 * sd.coupling * t if sd.is_ohmic else 0.0
    elif kernel is Kernel.phi_r2:
        values = j * np.cos(w * t) * thermal
        at_zero = 2.0 * sd.coupling / temperature.beta if finite_t and sd.is_ohmic else 0.0
    else:
        values = j * np.sin(w * t)
        at_zero = 0.0

    return np.where(positive, values, at_zero)


def kernel_quadrature_reference(
    kernel: Kernel,
    sd: SpectralDensity,
    temperature: Temperature,
    t: float,
    n: int | None = None,
) -> float:
    """
    Dense trapezoid value of one bath kernel on [0, 40·cutoff].

    Raises:
        ValueError: If n < 100000 or the density is sub-Ohmic (the ω = 0
            endpoint of a sub-Ohmic kernel integrand is singular)
    """
    n = n if n is not None else settings.oracle_kernel_points
    if n < 100_000:
        raise ValueError(f"kernel reference needs at least 100000 points, got {n}")
    if sd.ohmicity < 1.0:
        raise ValueError("kernel reference requires ohmicity >= 1")

    omega = np.linspace(0.0, 40.0 * sd.cutoff, n)
    values = _kernel_samples(Kernel(kernel), sd, temperature, abs(t), omega)
    value = float(sp_integrate.trapezoid(values, x=omega))
    if kernel in (Kernel.phi_i1, Kernel.phi_i2) and t < 0:
        return -value
    return value


# ─────────────────────────────────────────────────────────────────
# Reports
# ─────────────────────────────────────────────────────────────────

def check(
    config: ModelConfig,
    tau: float,
    tolerance: float | None = None,
    *,
    n: int | None = None,
    spec: QuadratureSpec | None = None,
) -> OracleReport:
    """Production s(τ) against the 2D-grid s(τ). Disagreement is reported, not raised."""
    tolerance = tolerance if tolerance is not None else settings.oracle_tolerance
    production = survival_probability(config, tau, spec=spec)
    oracle = survival_reference(config, tau, n)
    report = OracleReport.compare(production, oracle, tolerance, ABS_FLOOR, name=f"survival tau={tau:g}")
    logger.debug(f"{report.name}: rel_diff={report.rel_diff:.3e} passed={report.passed}")
    return report


def check_reduction(
    config: ModelConfig,
    tau: float,
    tolerance: float | None = None,
    *,
    n: int | None = None,
    spec: QuadratureSpec | None = None,
) -> OracleReport:
    """∫₀^τ (τ − t′) f(t′) dt′ against the direct triangle integral of f."""
    tolerance = tolerance if tolerance is not None else settings.oracle_tolerance
    f = integrand_for(config, spec)
    production = weighted_time_integral(lambda u: float(f(u)), tau, spec)
    oracle = double_integral_2d(f, tau, n)
    return OracleReport.compare(production, oracle, tolerance, ABS_FLOOR, name=f"reduction tau={tau:g}")


_PRODUCTION_KERNELS = {
    Kernel.phi_r1: lambda sd, temp, t, **kw: phi_r1(sd, temp, t, **kw),
    Kernel.phi_i1: lambda sd, temp, t, **kw: phi_i1(sd, t, **kw),
    Kernel.phi_r2: lambda sd, temp, t, **kw: phi_r2(sd, temp, t, **kw),
    Kernel.phi_i2: lambda sd, temp, t, **kw: phi_i2(sd, t, **kw),
}


def check_kernel(
    kernel: Kernel,
    sd: SpectralDensity,
    temperature: Temperature,
    t: float,
    tolerance: float,
    *,
    against: str = "trapezoid",
    spec: QuadratureSpec | None = None,
    abs_floor: float = 0.0,
) -> OracleReport:
    """
    Closed-form kernel against either the adaptive-quadrature path
    (against="quadrature") or the dense trapezoid reference.
    """
    production = float(_PRODUCTION_KERNELS[kernel](sd, temperature, t, method=KernelMethod.closed_form))
    if against == "quadrature":
        reference = float(_PRODUCTION_KERNELS[kernel](sd, temperature, t, spec=spec, method=KernelMethod.quadrature))
    elif against == "trapezoid":
        reference = kernel_quadrature_reference(kernel, sd, temperature, t)
    else:
        raise ValueError(f"unknown kernel reference '{against}'. Available: [quadrature, trapezoid]")
    return OracleReport.compare(production, reference, tolerance, abs_floor, name=f"{kernel.value} {against} t={t:g}")


# ─────────────────────────────────────────────────────────────────
# Fixtures
# ─────────────────────────────────────────────────────────────────

def reference_curve(config: ModelConfig, taus: Sequence[float], n: int | None = None, label: str = "") -> RateCurve:
    """Γ(τ) from the 2D grid at every τ; out-of-range survival stays flagged."""
    points = [effective_rate(survival_reference(config, float(tau), n), float(tau)) for tau in sorted(taus)]
    return RateCurve(points=points, label=label)


def write_fixture(
    path: Path | str,
    config: ModelConfig,
    taus: Sequence[float],
    config_line: str,
    n: int | None = None,
) -> Path:
    """Oracle curve in the curve CSV format, with the grid size recorded."""
    n = n if n is not None else settings.oracle_grid_size
    curve = reference_curve(config, taus, n, label="oracle")
    written = CurveRepository.write_curve(path, curve, config_line, notes=[f"oracle_grid_size: {n}"])
    logger.info(f"Wrote oracle fixture {written} ({len(curve.points)} points, n={n})")
    return written
