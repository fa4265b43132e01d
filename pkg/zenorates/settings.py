from typing import Literal
from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Application settings loaded from environment variables."""

    model_config = SettingsConfigDict(
        env_prefix="ZENORATES_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    # ─────────────────────────────────────────────────────────────────
    # Quadrature
    # ─────────────────────────────────────────────────────────────────

    quad_abs_tol: float = Field(
        default=1e-10,
        gt=0,
        description="Absolute tolerance of the adaptive integrator"
    )

    quad_rel_tol: float = Field(
        default=1e-8,
        gt=0,
        description="Relative tolerance of the adaptive integrator"
    )

    quad_max_subdivisions: int = Field(
        default=2000,
        ge=1,
        le=1_000_000,
        description="Subinterval budget before giving up on convergence"
    )

    quad_cutoff_window: float = Field(
        default=40.0,
        gt=0,
        description="Semi-infinite frequency integrals stop at window * cutoff"
    )

    # ─────────────────────────────────────────────────────────────────
    # Regime analysis
    # ─────────────────────────────────────────────────────────────────

    stationarity_factor: float = Field(
        default=1e-6,
        gt=0,
        description="|dΓ/dτ| below factor * max|Γ| counts as stationary"
    )

    refine_fraction: float = Field(
        default=1e-4,
        gt=0,
        lt=1,
        description="Extremum brackets are refined below fraction * range width"
    )

    merge_tolerance: float = Field(
        default=1e-6,
        gt=0,
        description="Refined extrema closer than this are reported once"
    )

    default_n_grid: int = Field(default=64, ge=16, le=100_000)

    # ─────────────────────────────────────────────────────────────────
    # Sweep
    # ─────────────────────────────────────────────────────────────────

    sweep_workers: int = Field(
        default=1,
        ge=1,
        le=64,
        description="Processes used to evaluate curves (1 = in-process)"
    )

    # ─────────────────────────────────────────────────────────────────
    # Oracle
    # ─────────────────────────────────────────────────────────────────

    oracle_grid_size: int = Field(
        default=400,
        ge=8,
        description="Simpson grid size of the 2D reference integral"
    )

    oracle_kernel_points: int = Field(
        default=100_001,
        ge=100_000,
        description="Trapezoid points of the kernel references"
    )

    oracle_tolerance: float = Field(default=1e-6, gt=0)

    # ─────────────────────────────────────────────────────────────────
    # Figures
    # ─────────────────────────────────────────────────────────────────

    figure_tau_min: float = Field(default=0.05, gt=0)
    figure_tau_max: float = Field(default=3.0, gt=0)
    figure_tau_steps: int = Field(default=60, ge=2, le=100_000)

    output_dir: str = "."

    # ─────────────────────────────────────────────────────────────────
    # Logging
    # ─────────────────────────────────────────────────────────────────

    log_level: Literal["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"] = "INFO"

    # ─────────────────────────────────────────────────────────────────
    # Validators
    # ─────────────────────────────────────────────────────────────────

    @field_validator("oracle_grid_size")
    @classmethod
    def validate_oracle_grid_size(cls, v: int) -> int:
        """Composite Simpson needs an even number of intervals."""
        if v % 2:
            raise ValueError("oracle_grid_size must be even")
        return v

    @field_validator("figure_tau_max")
    @classmethod
    def validate_figure_tau_max(cls, v: float, info) -> float:
        """Figure range must be non-empty."""
        tau_min = info.data.get("figure_tau_min")
        if tau_min is not None and v <= tau_min:
            raise ValueError("figure_tau_max must exceed figure_tau_min")
        return v


# Global settings instance
settings = Settings()
