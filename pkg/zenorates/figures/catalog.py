"""
Reference decay-rate figures.

All use an Ohmic zero-temperature environment with ε = 1, ω_c = α_c = 1
and Δ = 0.05, over the τ range configured in settings.
"""
import math

from zenorates.figures.registry import registry
from zenorates.schemas.run import FigureSeries, RunConfig
from zenorates.settings import settings

STRONG_COUPLINGS = (0.4, 0.8, 1.5)
WEAK_COUPLINGS = (0.03, 0.05, 0.1)


def reference_run(G: float | None = 0.4, F: float = 0.03, **overrides) -> RunConfig:
    """
    Reference parameter set; G=None drops the strong reservoir.

    Example:
        reference_run(G=1.5, F=0.1)
        reference_run(G=None, F=0.05)   # Γ⁽¹⁾
    """
    values = {
        "epsilon": 1.0,
        "delta": 0.05,
        "G": 0.0 if G is None else G,
        "F": F,
        "omega_c": 1.0,
        "alpha_c": 1.0,
        "s": 1.0,
        "r": 1.0,
        "beta": math.inf,
        "reservoirs": 1 if G is None else 2,
        "tau_min": settings.figure_tau_min,
        "tau_max": settings.figure_tau_max,
        "tau_steps": settings.figure_tau_steps,
    }
    values.update(overrides)
    return RunConfig.model_validate(values)


def _weak_series(G: float | None) -> list[FigureSeries]:
    return [
        FigureSeries(label=f"F = {F:g}", slug=f"F{F:g}", run=reference_run(G=G, F=F))
        for F in WEAK_COUPLINGS
    ]


@registry.register("1a", description="Γ⁽⁰⁾ against τ for G = 0.4, 0.8, 1.5 at F = 0.03")
def figure_1a() -> list[FigureSeries]:
    return [
        FigureSeries(label=f"G = {G:g}", slug=f"G{G:g}", run=reference_run(G=G, F=0.03))
        for G in STRONG_COUPLINGS
    ]


@registry.register("1b", description="Γ⁽⁰⁾ against τ for F = 0.03, 0.05, 0.1 at G = 1.5")
def figure_1b() -> list[FigureSeries]:
    return _weak_series(G=1.5)


@registry.register("2a", description="Γ⁽¹⁾ (weak reservoir only) against τ for F = 0.03, 0.05, 0.1")
def figure_2a() -> list[FigureSeries]:
    return _weak_series(G=None)


@registry.register("2b", description="Γ⁽⁰⁾ against τ for F = 0.03, 0.05, 0.1 at G = 1.5, for comparison with 2a")
def figure_2b() -> list[FigureSeries]:
    return _weak_series(G=1.5)
