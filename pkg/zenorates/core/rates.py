"""
Survival probabilities and effective decay rates.

For a single measurement interval τ,

    s(τ) = 1 − 2 ∫₀^τ dt ∫₀^t dt′ f(t′),      Γ(τ) = −ln s(τ) / τ,

with f the two-reservoir integrand (polaron frame, strong dephasing
reservoir present) or the single-reservoir one. The double integral is
evaluated as ∫₀^τ (τ − t′) f(t′) dt′. Survival outside (0, 1] is flagged on
the RatePoint, never raised, so curves can truncate gracefully.
"""
from __future__ import annotations

import logging
import math
from typing import Callable, Sequence

import numpy as np
from numpy.typing import ArrayLike

from zenorates.core.errors import SurvivalOutOfRange
from zenorates.core.kernels import phi_i1, phi_i2, phi_r1, phi_r2
from zenorates.core.quadrature import oscillation_breakpoints, weighted_time_integral
from zenorates.core.spectral import config_digest
from zenorates.schemas.model import MeasurementSchedule, ModelConfig, QuadratureSpec
from zenorates.schemas.results import DeficitBreakdown, RateCurve, RatePoint, Validity

logger = logging.getLogger(__name__)


def _scalar_or_array(value: np.ndarray) -> np.ndarray | float:
    return value if value.ndim else float(value)


def _require_strong(config: ModelConfig, op: str) -> None:
    if config.strong is None:
        raise ValueError(f"{op} needs a strong (dephasing) reservoir; use the single-reservoir variant")


def _check_time(t: np.ndarray) -> None:
    if np.any(t < 0):
        raise ValueError("integrand time t′ must be non-negative")


# ─────────────────────────────────────────────────────────────────
# Integrands
# ─────────────────────────────────────────────────────────────────

def _integrand_parts(
    config: ModelConfig,
    t: ArrayLike,
    spec: QuadratureSpec | None,
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """
    The three contributions to f(t′), in the order (Φ_R2, Φ_I2, Δ²/4).

    Without a strong reservoir Φ_R1 = Φ_I1 = 0, so the envelope is 1 and
    the phase is εt′.
    """
    t = np.asarray(t, dtype=float)
    _check_time(t)
    eps = config.system.epsilon
    tunneling = 0.25 * config.system.delta ** 2

    if config.strong is None:
        envelope = np.ones_like(t)
        phase = eps * t
    else:
        envelope = np.exp(-np.asarray(phi_r1(config.strong, config.temperature, t, spec=spec)))
        phase = eps * t - np.asarray(phi_i1(config.strong, t, spec=spec))

    cos_phase = np.cos(phase)
    r2 = np.asarray(phi_r2(config.weak, config.temperature, t, spec=spec))
    i2 = np.asarray(phi_i2(config.weak, t, spec=spec))
    return (
        envelope * cos_phase * r2,
        envelope * np.sin(phase) * i2,
        envelope * tunneling * cos_phase,
    )


def decay_integrand_two(
    config: ModelConfig,
    t: ArrayLike,
    *,
    spec: QuadratureSpec | None = None,
) -> np.ndarray | float:
    """
    f(t′) = e^{−Φ_R1}[cos θ · Φ_R2 + sin θ · Φ_I2 + (Δ²/4) cos θ],  θ = εt′ − Φ_I1.

    At t′ = 0 (zero temperature, Ohmic weak bath) this is Fα_c² + Δ²/4.
    """
    _require_strong(config, "decay_integrand_two")
    real, imag, tunneling = _integrand_parts(config, t, spec)
    return _scalar_or_array(real + imag + tunneling)


def decay_integrand_one(
    config: ModelConfig,
    t: ArrayLike,
    *,
    spec: QuadratureSpec | None = None,
) -> np.ndarray | float:
    """f(t′) = cos(εt′) Φ_R2(t′) + sin(εt′) Φ_I2(t′) + (Δ²/4) cos(εt′). Ignores `strong`."""
    real, imag, tunneling = _integrand_parts(config.without_strong(), t, spec)
    return _scalar_or_array(real + imag + tunneling)


def integrand_for(config: ModelConfig, spec: QuadratureSpec | None = None) -> Callable[[ArrayLike], np.ndarray | float]:
    """The integrand matching the config's variant, closed over the config."""
    if config.strong is None:
        return lambda t: decay_integrand_one(config, t, spec=spec)
    return lambda t: decay_integrand_two(config, t, spec=spec)


# ─────────────────────────────────────────────────────────────────
# Survival
# ─────────────────────────────────────────────────────────────────

def _deficit(
    f: Callable[[float], float],
    config: ModelConfig,
    tau: float,
    spec: QuadratureSpec | None,
) -> float:
    """1 − s(τ) = 2 ∫₀^τ (τ − t′) f(t′) dt′, split at the half-periods of e^{iεt′}."""
    points = oscillation_breakpoints(config.system.epsilon, 0.0, tau)
    return 2.0 * weighted_time_integral(f, tau, spec, points=points if points.size else None)


def survival_two_reservoir(
    config: ModelConfig,
    tau: float,
    *,
    spec: QuadratureSpec | None = None,
) -> float:
    """Raw s(τ) of the two-reservoir model; may fall outside (0, 1]."""
    _require_strong(config, "survival_two_reservoir")
    return 1.0 - _deficit(lambda u: decay_integrand_two(config, u, spec=spec), config, tau, spec)


def survival_one_reservoir(
    config: ModelConfig,
    tau: float,
    *,
    spec: QuadratureSpec | None = None,
) -> float:
    """Raw s(τ) of the weak reservoir alone; may fall outside (0, 1]."""
    return 1.0 - _deficit(lambda u: decay_integrand_one(config, u, spec=spec), config, tau, spec)


def survival_probability(config: ModelConfig, tau: float, *, spec: QuadratureSpec | None = None) -> float:
    """Raw s(τ) of whichever variant the config selects."""
    if config.strong is None:
        return survival_one_reservoir(config, tau, spec=spec)
    return survival_two_reservoir(config, tau, spec=spec)


def survival_deficit_terms(
    config: ModelConfig,
    tau: float,
    *,
    spec: QuadratureSpec | None = None,
) -> DeficitBreakdown:
    """1 − s(τ) split into its Φ_R2, Φ_I2 and Δ²/4 contributions."""
    terms = []
    for index in range(3):
        def part(u: float, index: int = index) -> float:
            return float(_integrand_parts(config, u, spec)[index])

        terms.append(_deficit(part, config, tau, spec))

    weak_real, weak_imag, tunneling = terms
    return DeficitBreakdown(tau=tau, weak_real=weak_real, weak_imag=weak_imag, tunneling=tunneling)


# ─────────────────────────────────────────────────────────────────
# Rates
# ─────────────────────────────────────────────────────────────────

def effective_rate(survival: float, tau: float) -> RatePoint:
    """
    Γ = −ln(s)/τ.

    Raises:
        ValueError: If tau <= 0

    Example:
        effective_rate(math.exp(-2.0), 2.0).gamma  # 1.0
    """
    if tau <= 0:
        raise ValueError(f"tau must be positive, got {tau!r}")
    if not (0.0 < survival <= 1.0) or not math.isfinite(survival):
        return RatePoint(tau=tau, survival=survival, gamma=None, validity=Validity.survival_out_of_range)
    # s − 1 is exact for s in (0.5, 1], so log1p keeps the tiny deficits
    gamma = -math.log1p(survival - 1.0) / tau
    # + 0.0 turns −0.0 at s = 1 into 0.0
    return RatePoint(tau=tau, survival=survival, gamma=gamma + 0.0)


def gamma0(config: ModelConfig, tau: float, *, spec: QuadratureSpec | None = None) -> RatePoint:
    """Γ⁽⁰⁾(τ): strong dephasing plus weak dissipative reservoir."""
    return effective_rate(survival_two_reservoir(config, tau, spec=spec), tau)


def gamma1(config: ModelConfig, tau: float, *, spec: QuadratureSpec | None = None) -> RatePoint:
    """Γ⁽¹⁾(τ): weak dissipative reservoir only; `strong` is ignored."""
    return effective_rate(survival_one_reservoir(config, tau, spec=spec), tau)


def decay_rate(config: ModelConfig, tau: float, *, spec: QuadratureSpec | None = None) -> RatePoint:
    """Γ⁽⁰⁾ when a strong reservoir is configured, Γ⁽¹⁾ otherwise."""
    if config.strong is None:
        return gamma1(config, tau, spec=spec)
    return gamma0(config, tau, spec=spec)


def survival_after_n(
    config: ModelConfig,
    schedule: MeasurementSchedule,
    *,
    spec: QuadratureSpec | None = None,
) -> float:
    """
    S(Nτ) = s(τ)^N, correlations between measurements neglected.

    Raises:
        SurvivalOutOfRange: If s(τ) is outside (0, 1]
    """
    point = decay_rate(config, schedule.tau, spec=spec)
    if not point.is_valid:
        raise SurvivalOutOfRange(point.survival, schedule.tau)
    return point.survival ** schedule.n


def rate_curve(
    config: ModelConfig,
    taus: Sequence[float],
    *,
    spec: QuadratureSpec | None = None,
    label: str = "",
) -> RateCurve:
    """Γ at every τ (sorted ascending); invalid points are kept and flagged."""
    ordered = sorted(float(tau) for tau in taus)
    points = [decay_rate(config, tau, spec=spec) for tau in ordered]
    invalid = sum(1 for point in points if not point.is_valid)
    if invalid:
        logger.info(f"{invalid} of {len(points)} points of curve '{label}' have survival outside (0, 1]")
    return RateCurve(points=points, config_digest=config_digest(config), label=label)
