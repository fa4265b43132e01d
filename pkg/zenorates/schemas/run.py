import math
from typing import Any

from pydantic import BaseModel, ConfigDict, Field, field_validator

from zenorates.schemas.model import QuadratureSpec


class RunConfig(BaseModel):
    """
    Flat run configuration, one field per config-file key.

    Defaults are the reference parameter set: ε = 1, Δ = 0.05,
    ω_c = α_c = 1, s = r = 1, F = 0.03, G = 0.4, zero temperature.
    Physical invariants are checked by `validate` on the derived
    ModelConfig, not here.
    """
    model_config = ConfigDict(frozen=True, populate_by_name=True, extra="forbid")

    epsilon: float = 1.0
    delta: float = 0.05
    strong_coupling: float = Field(default=0.4, alias="G")
    weak_coupling: float = Field(default=0.03, alias="F")
    omega_c: float = 1.0
    alpha_c: float = 1.0
    s: float = 1.0
    r: float = 1.0
    beta: float = Field(default=math.inf, description="inf selects zero temperature")
    reservoirs: int = Field(default=2, ge=1, le=2, description="2 selects the two-reservoir model, 1 the weak reservoir alone")

    tau_min: float = Field(default=0.05, gt=0)
    tau_max: float = 3.0
    tau_steps: int = Field(default=60, ge=2)

    abs_tol: float | None = Field(default=None, gt=0)
    rel_tol: float | None = Field(default=None, gt=0)

    output: str = "curve.csv"
    plot_script: bool = False
    measurements: int = Field(default=1, ge=1)

    @field_validator("tau_max")
    @classmethod
    def validate_tau_max(cls, v: float, info) -> float:
        tau_min = info.data.get("tau_min")
        if tau_min is not None and not v > tau_min:
            raise ValueError("tau_max must exceed tau_min")
        return v

    def model_payload(self) -> dict[str, Any]:
        """Raw ModelConfig data, unvalidated, for `validate`."""
        payload: dict[str, Any] = {
            "system": {"epsilon": self.epsilon, "delta": self.delta},
            "weak": {"coupling": self.weak_coupling, "ohmicity": self.r, "cutoff": self.alpha_c},
            "temperature": (
                {"kind": "zero"} if self.beta == math.inf else {"kind": "finite", "beta": self.beta}
            ),
        }
        if self.reservoirs == 2:
            payload["strong"] = {"coupling": self.strong_coupling, "ohmicity": self.s, "cutoff": self.omega_c}
        return payload

    def quadrature_spec(self, default: QuadratureSpec) -> QuadratureSpec:
        overrides = {
            key: value
            for key, value in (("abs_tol", self.abs_tol), ("rel_tol", self.rel_tol))
            if value is not None
        }
        return default.model_copy(update=overrides) if overrides else default


class FigureSeries(BaseModel):
    """One plotted curve of a registered figure."""
    model_config = ConfigDict(frozen=True)

    label: str = Field(..., description="Legend text, e.g. 'G = 0.4'")
    slug: str = Field(..., description="File-name fragment, e.g. 'G0.4'")
    run: RunConfig
