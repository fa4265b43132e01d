from zenorates.schemas.model import (
    FiniteTemperature,
    MeasurementSchedule,
    ModelConfig,
    QuadratureSpec,
    SpectralDensity,
    SystemParams,
    Temperature,
    ValidatedConfig,
    ZeroTemperature,
)
from zenorates.schemas.results import (
    DeficitBreakdown,
    KernelValue,
    OracleReport,
    RateCurve,
    RatePoint,
    Regime,
    TransitionKind,
    TransitionPoint,
    Validity,
)
from zenorates.schemas.run import FigureSeries, RunConfig

__all__ = [
    "DeficitBreakdown",
    "FigureSeries",
    "FiniteTemperature",
    "KernelValue",
    "MeasurementSchedule",
    "ModelConfig",
    "OracleReport",
    "QuadratureSpec",
    "RateCurve",
    "RatePoint",
    "Regime",
    "RunConfig",
    "SpectralDensity",
    "SystemParams",
    "Temperature",
    "TransitionKind",
    "TransitionPoint",
    "ValidatedConfig",
    "Validity",
    "ZeroTemperature",
]
