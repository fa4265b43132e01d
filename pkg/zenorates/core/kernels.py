"""
Bath correlation kernels.

C(t) = exp(−Φ_R1(t) − iΦ_I1(t)) for the strong (dephasing) reservoir and
K(t) = Φ_R2(t) − iΦ_I2(t) for the weak (dissipative) one:

    Φ_R1(t) = 4 ∫ J(ω) (1 − cos ωt)/ω² coth(βω/2) dω
    Φ_I1(t) = 4 ∫ J(ω) sin(ωt)/ω² dω
    Φ_R2(t) =   ∫ H(α) cos(αt) coth(βα/2) dα
    Φ_I2(t) =   ∫ H(α) sin(αt) dα

Closed forms are used for Ohmic densities (zero temperature where coth
appears); everything else goes through adaptive quadrature on
[0, window·cutoff], split at the oscillation half-periods.
"""
from __future__ import annotations

import enum as py_enum
import math
from typing import Callable

import numpy as np
from numpy.typing import ArrayLike

from zenorates.core.quadrature import default_spec, integrate, oscillation_breakpoints
from zenorates.core.spectral import coth_factor, spectral_density
from zenorates.schemas.model import (
    ModelConfig,
    QuadratureSpec,
    SpectralDensity,
    Temperature,
    ZeroTemperature,
)
from zenorates.schemas.results import KernelValue


class KernelMethod(str, py_enum.Enum):
    auto = "auto"
    closed_form = "closed_form"
    quadrature = "quadrature"


def _elementwise(fn: Callable[[float], float], t: ArrayLike) -> np.ndarray | float:
    arr = np.asarray(t, dtype=float)
    if arr.ndim == 0:
        return float(fn(float(arr)))
    flat = np.array([fn(float(x)) for x in arr.ravel()])
    return flat.reshape(arr.shape)


def _scalar_or_array(value: np.ndarray) -> np.ndarray | float:
    return value if value.ndim else float(value)


def _use_closed_form(available: bool, method: KernelMethod, name: str) -> bool:
    if method is KernelMethod.closed_form and not available:
        raise ValueError(f"{name} has no closed form for this spectral density / temperature")
    return available and method is not KernelMethod.quadrature


def _thermal_limit(sd: SpectralDensity, temperature: Temperature, scale: float) -> float:
    """
    ω → 0 limit of `scale` · J(ω)/ω · coth(βω/2) · ω.

    Zero temperature: J(ω) → 0. Finite β: coth → 2/(βω), so the limit is
    2·scale·J(ω)/(βω), finite for s = 1, zero for s > 1 and divergent (but
    integrable) for s < 1.
    """
    if isinstance(temperature, ZeroTemperature) or sd.ohmicity > 1.0:
        return 0.0
    if sd.ohmicity == 1.0:
        return 2.0 * scale * sd.coupling / temperature.beta
    return math.inf


# ─────────────────────────────────────────────────────────────────
# Quadrature integrands (scalar, ω > 0 unless noted)
# ─────────────────────────────────────────────────────────────────

def _r1_integrand(sd: SpectralDensity, temperature: Temperature, t: float) -> Callable[[float], float]:
    # 1 − cos ωt written as 2 sin²(ωt/2) keeps precision at small ωt
    at_zero = _thermal_limit(sd, temperature, 2.0 * t * t)

    def f(w: float) -> float:
        if w == 0.0:
            return at_zero
        half = math.sin(0.5 * w * t)
        return 8.0 * spectral_density(sd, w) * half * half / (w * w) * coth_factor(temperature, w)

    return f


def _i1_integrand(sd: SpectralDensity, t: float) -> Callable[[float], float]:
    def f(w: float) -> float:
        if w == 0.0:
            # sin(ωt)/ω² · J(ω) → t · J(ω)/ω
            return 4.0 * t * sd.coupling if sd.ohmicity == 1.0 else 0.0
        return 4.0 * spectral_density(sd, w) * math.sin(w * t) / (w * w)

    return f


def _r2_integrand(sd: SpectralDensity, temperature: Temperature, t: float) -> Callable[[float], float]:
    at_zero = _thermal_limit(sd, temperature, 1.0)

    def f(a: float) -> float:
        if a == 0.0:
            return at_zero
        return spectral_density(sd, a) * math.cos(a * t) * coth_factor(temperature, a)

    return f


def _i2_integrand(sd: SpectralDensity, t: float) -> Callable[[float], float]:
    def f(a: float) -> float:
        return spectral_density(sd, a) * math.sin(a * t)

    return f


def _frequency_integral(
    integrand: Callable[[float], float],
    sd: SpectralDensity,
    t: float,
    spec: QuadratureSpec,
) -> float:
    upper = spec.cutoff_window * sd.cutoff
    points = oscillation_breakpoints(t, 0.0, upper)
    value, _ = integrate(integrand, 0.0, upper, spec, points=points if points.size else None)
    return value


# ─────────────────────────────────────────────────────────────────
# Kernels
# ─────────────────────────────────────────────────────────────────

def phi_r1(
    strong: SpectralDensity,
    temperature: Temperature,
    t: ArrayLike,
    *,
    spec: QuadratureSpec | None = None,
    method: KernelMethod = KernelMethod.auto,
) -> np.ndarray | float:
    """Φ_R1(t) ≥ 0; closed form 2G ln(1 + ω_c²t²) at zero temperature, s = 1."""
    closed = strong.is_ohmic and isinstance(temperature, ZeroTemperature)
    if _use_closed_form(closed, method, "phi_r1"):
        t = np.asarray(t, dtype=float)
        return _scalar_or_array(2.0 * strong.coupling * np.log1p((strong.cutoff * t) ** 2))

    spec = spec or default_spec()

    def one(x: float) -> float:
        if x == 0.0:
            return 0.0
        return _frequency_integral(_r1_integrand(strong, temperature, abs(x)), strong, abs(x), spec)

    return _elementwise(one, t)


def phi_i1(
    strong: SpectralDensity,
    t: ArrayLike,
    *,
    spec: QuadratureSpec | None = None,
    method: KernelMethod = KernelMethod.auto,
) -> np.ndarray | float:
    """Φ_I1(t); closed form 4G arctan(ω_c t) for s = 1 at any temperature."""
    if _use_closed_form(strong.is_ohmic, method, "phi_i1"):
        t = np.asarray(t, dtype=float)
        return _scalar_or_array(4.0 * strong.coupling * np.arctan(strong.cutoff * t))

    spec = spec or default_spec()

    def one(x: float) -> float:
        if x == 0.0:
            return 0.0
        value = _frequency_integral(_i1_integrand(strong, abs(x)), strong, abs(x), spec)
        return math.copysign(value, x)

    return _elementwise(one, t)


def phi_r2(
    weak: SpectralDensity,
    temperature: Temperature,
    t: ArrayLike,
    *,
    spec: QuadratureSpec | None = None,
    method: KernelMethod = KernelMethod.auto,
) -> np.ndarray | float:
    """Φ_R2(t); closed form Fα_c²(1 − α_c²t²)/(1 + α_c²t²)² at zero temperature, r = 1."""
    closed = weak.is_ohmic and isinstance(temperature, ZeroTemperature)
    if _use_closed_form(closed, method, "phi_r2"):
        x2 = (weak.cutoff * np.asarray(t, dtype=float)) ** 2
        return _scalar_or_array(weak.coupling * weak.cutoff ** 2 * (1.0 - x2) / (1.0 + x2) ** 2)

    spec = spec or default_spec()

    def one(x: float) -> float:
        return _frequency_integral(_r2_integrand(weak, temperature, abs(x)), weak, abs(x), spec)

    return _elementwise(one, t)


def phi_i2(
    weak: SpectralDensity,
    t: ArrayLike,
    *,
    spec: QuadratureSpec | None = None,
    method: KernelMethod = KernelMethod.auto,
) -> np.ndarray | float:
    """Φ_I2(t); closed form 2Fα_c³t/(1 + α_c²t²)² for r = 1 at any temperature."""
    if _use_closed_form(weak.is_ohmic, method, "phi_i2"):
        t = np.asarray(t, dtype=float)
        x = weak.cutoff * t
        return _scalar_or_array(2.0 * weak.coupling * weak.cutoff ** 2 * x / (1.0 + x * x) ** 2)

    spec = spec or default_spec()

    def one(x: float) -> float:
        if x == 0.0:
            return 0.0
        value = _frequency_integral(_i2_integrand(weak, abs(x)), weak, abs(x), spec)
        return math.copysign(value, x)

    return _elementwise(one, t)


def kernels(
    config: ModelConfig,
    t: float,
    *,
    spec: QuadratureSpec | None = None,
    method: KernelMethod = KernelMethod.auto,
) -> KernelValue:
    """All four kernels at one t; Φ_R1 = Φ_I1 = 0 without a strong reservoir."""
    if config.strong is None:
        r1 = i1 = 0.0
    else:
        r1 = phi_r1(config.strong, config.temperature, t, spec=spec, method=method)
        i1 = phi_i1(config.strong, t, spec=spec, method=method)
    return KernelValue(
        t=float(t),
        phi_r1=float(r1),
        phi_i1=float(i1),
        phi_r2=float(phi_r2(config.weak, config.temperature, t, spec=spec, method=method)),
        phi_i2=float(phi_i2(config.weak, t, spec=spec, method=method)),
    )
