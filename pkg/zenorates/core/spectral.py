from __future__ import annotations

import hashlib
import math

import numpy as np
from numpy.typing import ArrayLike

from zenorates.schemas.model import (
    FiniteTemperature,
    ModelConfig,
    SpectralDensity,
    Temperature,
    ZeroTemperature,
)

# ─────────────────────────────────────────────────────────────────
# Spectral densities (pure functions)
# ─────────────────────────────────────────────────────────────────

def spectral_density(sd: SpectralDensity, omega: ArrayLike) -> np.ndarray | float:
    """
    J(ω) = coupling · ω^s · cutoff^(1−s) · exp(−ω/cutoff).

    Returns 0 at ω = 0 for every s > 0 and finite values for ω > 0.
    """
    w = np.asarray(omega, dtype=float)
    value = sd.coupling * np.power(w, sd.ohmicity) * sd.cutoff ** (1.0 - sd.ohmicity) * np.exp(-w / sd.cutoff)
    return value if value.ndim else float(value)


def coth_factor(temperature: Temperature, omega: ArrayLike) -> np.ndarray | float:
    """
    Thermal factor coth(βω/2) for ω > 0; exactly 1 at zero temperature.

    The ω = 0 singularity at finite β is left to callers, which substitute
    analytic limits there.
    """
    w = np.asarray(omega, dtype=float)
    if isinstance(temperature, ZeroTemperature):
        value = np.ones_like(w)
    else:
        with np.errstate(divide="ignore"):
            value = 1.0 / np.tanh(0.5 * temperature.beta * w)
    return value if value.ndim else float(value)


def temperature_from_beta(beta: float) -> Temperature:
    """inf selects the zero-temperature variant."""
    if beta == math.inf:
        return ZeroTemperature()
    return FiniteTemperature(beta=beta)


def config_digest(config: ModelConfig) -> str:
    """Stable identifier of a configuration."""
    canonical = config.model_dump_json(exclude_none=False)
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()[:16]
