"""
Physical parameters shared by every module.

All models are frozen: safe to hash, share between threads and pickle into
sweep worker processes.
"""
import math
from typing import Annotated, Literal

from pydantic import BaseModel, ConfigDict, Field


class _Frozen(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")


class SystemParams(_Frozen):
    """Two-level system H_S = (ε/2)σ_z + (Δ/2)σ_x."""
    epsilon: float = Field(..., gt=0, allow_inf_nan=False, description="Energy splitting ε")
    delta: float = Field(default=0.0, ge=0, allow_inf_nan=False, description="Tunneling amplitude Δ")


class SpectralDensity(_Frozen):
    """J(ω) = coupling · ω^ohmicity · cutoff^(1 − ohmicity) · exp(−ω / cutoff)."""
    coupling: float = Field(..., ge=0, allow_inf_nan=False, description="Dimensionless strength (G or F)")
    ohmicity: float = Field(default=1.0, gt=0, allow_inf_nan=False, description="Low-frequency exponent (s or r)")
    cutoff: float = Field(default=1.0, gt=0, allow_inf_nan=False, description="Cutoff frequency (ω_c or α_c)")

    @property
    def is_ohmic(self) -> bool:
        return self.ohmicity == 1.0


class ZeroTemperature(_Frozen):
    kind: Literal["zero"] = "zero"

    @property
    def beta(self) -> float:
        return math.inf


class FiniteTemperature(_Frozen):
    kind: Literal["finite"] = "finite"
    beta: float = Field(..., gt=0, allow_inf_nan=False, description="Inverse temperature β")


Temperature = Annotated[ZeroTemperature | FiniteTemperature, Field(discriminator="kind")]


class MeasurementSchedule(_Frozen):
    """N projective measurements, one every τ."""
    tau: float = Field(..., gt=0, allow_inf_nan=False)
    n: int = Field(default=1, ge=1)


class QuadratureSpec(_Frozen):
    """Tolerances and budget of the adaptive integrator."""
    abs_tol: float = Field(default=1e-10, gt=0)
    rel_tol: float = Field(default=1e-8, gt=0)
    max_subdivisions: int = Field(default=2000, ge=1)
    cutoff_window: float = Field(
        default=40.0,
        gt=0,
        description="Frequency integrals run over [0, cutoff_window * cutoff]",
    )


class ModelConfig(_Frozen):
    """
    Complete physical configuration.

    `strong` absent selects the single-reservoir model; present, the
    two-reservoir (polaron-frame) model.
    """
    system: SystemParams
    weak: SpectralDensity
    strong: SpectralDensity | None = None
    temperature: Temperature = Field(default_factory=ZeroTemperature)

    @property
    def has_strong(self) -> bool:
        return self.strong is not None

    def without_strong(self) -> "ModelConfig":
        return self.model_copy(update={"strong": None})


# validate() returns the same object type; the alias documents intent at call sites
ValidatedConfig = ModelConfig
