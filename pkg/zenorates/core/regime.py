"""
Zeno / anti-Zeno regime analysis on Γ(τ).

Zeno: Γ grows with τ (dΓ/dτ > 0), so measuring more often slows decay.
Anti-Zeno: dΓ/dτ < 0. Transitions are the local extrema of Γ.
"""
from __future__ import annotations

import logging
import math
from typing import Callable, Sequence

import numpy as np

from zenorates.core.errors import InsufficientData
from zenorates.core.rates import decay_rate
from zenorates.schemas.model import ModelConfig, QuadratureSpec
from zenorates.schemas.results import RateCurve, Regime, TransitionKind, TransitionPoint
from zenorates.settings import settings

logger = logging.getLogger(__name__)

INV_PHI = (math.sqrt(5) - 1) / 2  # 1 / phi
INV_PHI_SQUARE = (3 - math.sqrt(5)) / 2  # 1 / phi^2

RateFunction = Callable[[float], "float | None"]


# ─────────────────────────────────────────────────────────────────
# Classification
# ─────────────────────────────────────────────────────────────────

def _slopes(curve: RateCurve) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    prefix = curve.valid_prefix()
    if len(prefix) < 2:
        raise InsufficientData(
            f"need at least 2 valid points before the first out-of-range survival, got {len(prefix)}"
        )
    taus = np.array([p.tau for p in prefix])
    gammas = np.array([p.gamma for p in prefix])
    return taus, gammas, np.gradient(gammas, taus)


def _regime_of(slope: float, threshold: float) -> Regime:
    if abs(slope) < threshold:
        return Regime.stationary
    return Regime.zeno if slope > 0 else Regime.anti_zeno


def classify(curve: RateCurve, tau: float) -> Regime:
    """
    Sign of dΓ/dτ at tau, from central differences on the curve's own grid.

    |dΓ/dτ| below stationarity_factor · max|Γ| counts as stationary.

    Raises:
        InsufficientData: If fewer than 2 valid points, or tau lies past
            the first invalid point
        ValueError: If tau is outside the curve
    """
    if not curve.points or not curve.points[0].tau <= tau <= curve.points[-1].tau:
        raise ValueError(f"tau={tau!r} is outside the curve range")

    taus, gammas, slopes = _slopes(curve)
    if tau > taus[-1]:
        raise InsufficientData(f"tau={tau!r} lies beyond the last valid point {taus[-1]!r}")

    slope = float(np.interp(tau, taus, slopes))
    return _regime_of(slope, settings.stationarity_factor * float(np.max(np.abs(gammas))))


def label_regimes(curve: RateCurve) -> list[Regime]:
    """One regime per point of the valid prefix."""
    _, gammas, slopes = _slopes(curve)
    threshold = settings.stationarity_factor * float(np.max(np.abs(gammas)))
    return [_regime_of(float(slope), threshold) for slope in slopes]


# ─────────────────────────────────────────────────────────────────
# Extremum search
# ─────────────────────────────────────────────────────────────────

def golden_section(f: Callable[[float], float], a: float, b: float, tol: float) -> tuple[float, float]:
    """
    Golden-section search.

    Given f with a single local minimum in [a, b], returns a sub-interval
    containing it with width <= tol.
    """
    a, b = min(a, b), max(a, b)
    h = b - a
    if h <= tol:
        return a, b

    n = int(math.ceil(math.log(tol / h) / math.log(INV_PHI)))

    c = a + INV_PHI_SQUARE * h
    d = a + INV_PHI * h
    yc = f(c)
    yd = f(d)

    for _ in range(n - 1):
        if yc < yd:
            b = d
            d = c
            yd = yc
            h = INV_PHI * h
            c = a + INV_PHI_SQUARE * h
            yc = f(c)
        else:
            a = c
            c = d
            yc = yd
            h = INV_PHI * h
            d = a + INV_PHI * h
            yd = f(d)

    if yc < yd:
        return a, d
    return c, b


class _InvalidInBracket(Exception):
    pass


def _check_range(tau_range: Sequence[float], n_grid: int) -> tuple[float, float]:
    lo, hi = float(tau_range[0]), float(tau_range[1])
    if not 0 < lo < hi:
        raise ValueError(f"tau range must satisfy 0 < lo < hi, got ({lo!r}, {hi!r})")
    if n_grid < 16:
        raise ValueError(f"n_grid must be at least 16, got {n_grid}")
    return lo, hi


def _valid_samples(rate: RateFunction, grid: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    values = []
    for tau in grid:
        gamma = rate(float(tau))
        if gamma is None or not math.isfinite(gamma):
            logger.warning(f"Rate invalid at tau={tau:.6g}; analysis truncated to tau < {tau:.6g}")
            break
        values.append(gamma)
    return grid[: len(values)], np.array(values)


def _refine(
    rate: RateFunction,
    kind: TransitionKind,
    a: float,
    b: float,
    tol: float,
) -> TransitionPoint:
    sign = -1.0 if kind is TransitionKind.maximum else 1.0

    def objective(tau: float) -> float:
        gamma = rate(tau)
        if gamma is None or not math.isfinite(gamma):
            raise _InvalidInBracket(tau)
        return sign * gamma

    lo, hi = golden_section(objective, a, b, tol)
    tau_star = 0.5 * (lo + hi)
    return TransitionPoint(
        tau_star=tau_star,
        kind=kind,
        gamma_at=sign * objective(tau_star),
        bracket_width=hi - lo,
    )


def _merge(points: list[TransitionPoint], tolerance: float) -> list[TransitionPoint]:
    merged: list[TransitionPoint] = []
    for point in sorted(points, key=lambda p: p.tau_star):
        if merged and merged[-1].kind is point.kind and abs(point.tau_star - merged[-1].tau_star) < tolerance:
            logger.info(f"Merged duplicate {point.kind.value} at tau={point.tau_star:.9g}")
            continue
        merged.append(point)
    return merged


def find_extrema(
    rate: RateFunction,
    tau_range: Sequence[float],
    n_grid: int | None = None,
) -> list[TransitionPoint]:
    """
    Local extrema of any τ → Γ function, sorted by tau_star.

    Γ is sampled on a uniform grid; every strict sign change of the
    discrete slope gives a bracket (two grid cells, widened over any run of
    equal samples between them), which is refined by
    golden-section search on Γ itself until its width is below
    refine_fraction · (hi − lo). Sampling stops at the first τ where
    `rate` returns None.

    Example:
        find_extrema(lambda t: (t - 1.0) ** 2, (0.1, 2.0), 64)
        # [TransitionPoint(tau_star≈1.0, kind=min, ...)]
    """
    n_grid = n_grid if n_grid is not None else settings.default_n_grid
    lo, hi = _check_range(tau_range, n_grid)
    taus, gammas = _valid_samples(rate, np.linspace(lo, hi, n_grid))
    if len(taus) < 3:
        return []

    direction = np.sign(np.diff(gammas))
    tol = settings.refine_fraction * (hi - lo)
    found = []
    # Flat runs are skipped; a sign change across one is bracketed around the whole run
    moving = np.flatnonzero(direction)
    for before, after in zip(moving, moving[1:]):
        if direction[before] == direction[after]:
            continue
        kind = TransitionKind.maximum if direction[before] > 0 else TransitionKind.minimum
        try:
            found.append(_refine(rate, kind, float(taus[before]), float(taus[after + 1]), tol))
        except _InvalidInBracket as exc:
            centre = 0.5 * (taus[before] + taus[after + 1])
            logger.warning(f"Discarded {kind.value} bracket around tau={centre:.6g}: rate invalid at {exc.args[0]:.6g}")

    return _merge(found, settings.merge_tolerance)


def find_transitions(
    config: ModelConfig,
    tau_range: Sequence[float],
    n_grid: int | None = None,
    *,
    spec: QuadratureSpec | None = None,
) -> list[TransitionPoint]:
    """Extrema of the config's Γ(τ) (Γ⁽⁰⁾ or Γ⁽¹⁾) inside tau_range."""
    return find_extrema(lambda tau: decay_rate(config, tau, spec=spec).gamma, tau_range, n_grid)


def first_maximum(transitions: Sequence[TransitionPoint]) -> TransitionPoint | None:
    """The Zeno to anti-Zeno transition: the first local maximum of Γ."""
    return next((t for t in transitions if t.kind is TransitionKind.maximum), None)
