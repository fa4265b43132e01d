"""
Exception types.

Numerical failures raise; physically meaningless but predictable outcomes
(survival outside (0, 1]) are flagged in-band on the result objects instead.
"""
from __future__ import annotations

import enum as py_enum
from typing import Iterable

from pydantic import BaseModel, ConfigDict, ValidationError


class IssueCode(str, py_enum.Enum):
    non_positive_epsilon = "NonPositiveEpsilon"
    negative_delta = "NegativeDelta"
    negative_coupling = "NegativeCoupling"
    non_positive_cutoff = "NonPositiveCutoff"
    non_positive_ohmicity = "NonPositiveOhmicity"
    bad_beta = "BadBeta"
    bad_tau_range = "BadTauRange"
    bad_grid = "BadGrid"
    bad_tolerance = "BadTolerance"
    invalid_value = "InvalidValue"


# Last element of a pydantic error location -> issue code
_FIELD_CODES: dict[str, IssueCode] = {
    "epsilon": IssueCode.non_positive_epsilon,
    "delta": IssueCode.negative_delta,
    "coupling": IssueCode.negative_coupling,
    "cutoff": IssueCode.non_positive_cutoff,
    "ohmicity": IssueCode.non_positive_ohmicity,
    "beta": IssueCode.bad_beta,
    "tau": IssueCode.bad_tau_range,
    "tau_min": IssueCode.bad_tau_range,
    "tau_max": IssueCode.bad_tau_range,
    "tau_steps": IssueCode.bad_grid,
    "n": IssueCode.bad_grid,
    "abs_tol": IssueCode.bad_tolerance,
    "rel_tol": IssueCode.bad_tolerance,
    "max_subdivisions": IssueCode.bad_tolerance,
    "cutoff_window": IssueCode.bad_tolerance,
}


class ValidationIssue(BaseModel):
    """One violated invariant."""
    model_config = ConfigDict(frozen=True)

    code: IssueCode
    field: str
    message: str

    def __str__(self) -> str:
        return f"{self.code.value} ({self.field}): {self.message}"


class ZenoRatesError(Exception):
    """Base class for all package errors."""


class ConfigValidationError(ZenoRatesError, ValueError):
    """A configuration violates one or more invariants; all are listed."""

    def __init__(self, issues: Iterable[ValidationIssue]):
        self.issues = list(issues)
        details = "; ".join(str(issue) for issue in self.issues)
        super().__init__(f"{len(self.issues)} invalid field(s): {details}")

    @property
    def codes(self) -> list[IssueCode]:
        return [issue.code for issue in self.issues]

    @classmethod
    def from_pydantic(cls, exc: ValidationError) -> "ConfigValidationError":
        """Translate every pydantic error into a named issue."""
        issues = []
        for error in exc.errors():
            loc = [str(part) for part in error["loc"]]
            # Discriminated-union tags ("finite", "zero") are not fields
            field = ".".join(part for part in loc if part not in ("zero", "finite"))
            code = _FIELD_CODES.get(loc[-1] if loc else "", IssueCode.invalid_value)
            issues.append(ValidationIssue(code=code, field=field or "<root>", message=error["msg"]))
        return cls(issues)


class QuadratureNonConvergence(ZenoRatesError, ArithmeticError):
    """The adaptive integrator stopped before reaching its tolerance."""

    def __init__(self, value: float, error_estimate: float, message: str = ""):
        self.value = value
        self.error_estimate = error_estimate
        detail = f": {message.strip()}" if message else ""
        super().__init__(
            f"Quadrature did not converge (best estimate {value!r}, "
            f"achieved error {error_estimate:.3e}){detail}"
        )


class SurvivalOutOfRange(ZenoRatesError, ValueError):
    """Perturbation theory produced a survival probability outside (0, 1]."""

    def __init__(self, survival: float, tau: float):
        self.survival = survival
        self.tau = tau
        super().__init__(f"Survival probability {survival!r} at tau={tau!r} is outside (0, 1]")


class InsufficientData(ZenoRatesError, ValueError):
    """Not enough valid curve points for a derivative-based analysis."""


class ConfigParseError(ZenoRatesError, ValueError):
    """Malformed run-config text."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(f"{prefix}{message}")


class UnknownKey(ConfigParseError):
    """A run-config key that is not recognised (usually a typo)."""

    def __init__(self, key: str, line: int, known: Iterable[str]):
        self.key = key
        available = ", ".join(sorted(known))
        super().__init__(f"unknown key '{key}'. Available keys: [{available}]", line=line)
