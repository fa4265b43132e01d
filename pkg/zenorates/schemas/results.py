import enum as py_enum
import math
import sys
from typing import Sequence

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator


class Validity(str, py_enum.Enum):
    ok = "ok"
    survival_out_of_range = "survival_out_of_range"


class Regime(str, py_enum.Enum):
    zeno = "zeno"              # dΓ/dτ > 0
    anti_zeno = "anti_zeno"    # dΓ/dτ < 0
    stationary = "stationary"


class TransitionKind(str, py_enum.Enum):
    """Local maximum: Zeno -> anti-Zeno boundary. Local minimum: the way back."""
    maximum = "max"
    minimum = "min"


class KernelValue(BaseModel):
    """The four bath kernels at a common time t."""
    model_config = ConfigDict(frozen=True)

    t: float
    phi_r1: float
    phi_i1: float
    phi_r2: float
    phi_i2: float


class RatePoint(BaseModel):
    """Effective decay rate at one measurement interval."""
    model_config = ConfigDict(frozen=True)

    tau: float = Field(..., gt=0)
    survival: float = Field(..., description="Raw perturbative s(τ), possibly outside (0, 1]")
    gamma: float | None = Field(default=None, description="−ln(s)/τ; absent when out of range")
    validity: Validity = Validity.ok

    @model_validator(mode="after")
    def check_consistency(self) -> "RatePoint":
        if self.validity is Validity.ok:
            if self.gamma is None or not math.isfinite(self.gamma):
                raise ValueError("valid rate points need a finite gamma")
            if not 0.0 < self.survival <= 1.0:
                raise ValueError("valid rate points need 0 < survival <= 1")
        elif self.gamma is not None:
            raise ValueError("out-of-range rate points carry no gamma")
        return self

    @property
    def is_valid(self) -> bool:
        return self.validity is Validity.ok


class DeficitBreakdown(BaseModel):
    """
    Survival deficit 1 − s(τ) split by origin.

    weak_real: Φ_R2 (cosine) part, weak_imag: Φ_I2 (sine) part,
    tunneling: the Δ²/4 part.
    """
    model_config = ConfigDict(frozen=True)

    tau: float
    weak_real: float
    weak_imag: float
    tunneling: float

    @property
    def total(self) -> float:
        return self.weak_real + self.weak_imag + self.tunneling


class TransitionPoint(BaseModel):
    """A refined local extremum of Γ(τ)."""
    model_config = ConfigDict(frozen=True)

    tau_star: float
    kind: TransitionKind
    gamma_at: float
    bracket_width: float = Field(default=0.0, ge=0)


class RateCurve(BaseModel):
    """Γ(τ) samples of one configuration, τ strictly increasing."""
    model_config = ConfigDict(frozen=True)

    points: list[RatePoint] = Field(default_factory=list)
    config_digest: str = ""
    label: str = ""
    error: str | None = Field(default=None, description="Failure recorded in-band by a sweep")
    transitions: list[TransitionPoint] = Field(default_factory=list)

    @field_validator("points")
    @classmethod
    def validate_ordering(cls, v: list[RatePoint]) -> list[RatePoint]:
        for before, after in zip(v, v[1:]):
            if after.tau <= before.tau:
                raise ValueError("curve taus must be strictly increasing")
        return v

    @classmethod
    def from_samples(
        cls,
        taus: Sequence[float],
        gammas: Sequence[float],
        label: str = "",
    ) -> "RateCurve":
        """Build a curve from known rates (survival reconstructed as exp(−Γτ), kept above 0)."""
        points = [
            RatePoint(tau=float(tau), gamma=float(gamma), survival=max(math.exp(-gamma * tau), sys.float_info.min))
            for tau, gamma in zip(taus, gammas)
        ]
        return cls(points=points, label=label)

    @property
    def taus(self) -> list[float]:
        return [p.tau for p in self.points]

    @property
    def gammas(self) -> list[float | None]:
        return [p.gamma for p in self.points]

    def valid_prefix(self) -> list[RatePoint]:
        """Points up to (excluding) the first invalid one."""
        prefix = []
        for point in self.points:
            if not point.is_valid:
                break
            prefix.append(point)
        return prefix

    @property
    def succeeded(self) -> bool:
        return self.error is None


class OracleReport(BaseModel):
    """Agreement between a production value and an independent reference."""
    model_config = ConfigDict(frozen=True)

    name: str = ""
    production_value: float
    oracle_value: float
    abs_diff: float
    rel_diff: float
    tolerance: float
    abs_floor: float = 0.0
    passed: bool

    @classmethod
    def compare(
        cls,
        production_value: float,
        oracle_value: float,
        tolerance: float,
        abs_floor: float = 0.0,
        name: str = "",
    ) -> "OracleReport":
        abs_diff = abs(production_value - oracle_value)
        scale = abs(oracle_value)
        rel_diff = abs_diff / scale if scale > 0 else (0.0 if abs_diff == 0 else math.inf)
        return cls(
            name=name,
            production_value=production_value,
            oracle_value=oracle_value,
            abs_diff=abs_diff,
            rel_diff=rel_diff,
            tolerance=tolerance,
            abs_floor=abs_floor,
            passed=rel_diff <= tolerance or abs_diff <= abs_floor,
        )
