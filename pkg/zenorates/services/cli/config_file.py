"""
Run-config files.

Flat `key = value` text, one pair per line, `#` starting a comment.
Missing keys take the RunConfig defaults; unknown keys are errors.

Example:
    # figure 1a, strongest coupling
    G = 1.5
    F = 0.03
    beta = inf
    tau_max = 2.5
"""
from __future__ import annotations

import math
import re
from typing import Any, Callable

from pydantic import ValidationError

from zenorates.core.errors import ConfigParseError, ConfigValidationError, UnknownKey
from zenorates.core.validation import validate
from zenorates.schemas.model import ModelConfig
from zenorates.schemas.run import RunConfig

_COMMENT = re.compile(r"(^|\s)#.*$")

_TRUE = {"true", "yes", "on", "1"}
_FALSE = {"false", "no", "off", "0"}


def _to_bool(text: str) -> bool:
    lowered = text.lower()
    if lowered in _TRUE:
        return True
    if lowered in _FALSE:
        return False
    raise ValueError(f"expected a boolean, got {text!r}")


def _to_int(text: str) -> int:
    return int(text, 10)


# File key -> converter. Order is the rendering order.
KEYS: dict[str, Callable[[str], Any]] = {
    "epsilon": float,
    "delta": float,
    "G": float,
    "F": float,
    "omega_c": float,
    "alpha_c": float,
    "s": float,
    "r": float,
    "beta": float,
    "reservoirs": _to_int,
    "tau_min": float,
    "tau_max": float,
    "tau_steps": _to_int,
    "abs_tol": float,
    "rel_tol": float,
    "output": str,
    "plot_script": _to_bool,
    "measurements": _to_int,
}

PHYSICAL_KEYS = ("epsilon", "delta", "G", "F", "omega_c", "alpha_c", "s", "r", "beta", "reservoirs")


def parse_config(text: str) -> RunConfig:
    """
    Parse run-config text and validate the physical model it describes.

    Raises:
        ConfigParseError: Malformed line, bad value or duplicate key (with line number)
        UnknownKey: Unrecognised key (with line number)
        ConfigValidationError: Values violate RunConfig or model invariants

    Example:
        parse_config("G = 1.5\\nF = 0.03").strong_coupling   # 1.5
    """
    values: dict[str, Any] = {}
    for number, raw in enumerate(text.splitlines(), start=1):
        line = _COMMENT.sub("", raw).strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigParseError(f"expected 'key = value', got {raw.strip()!r}", line=number)

        key, _, value = (part.strip() for part in line.partition("="))
        if not key:
            raise ConfigParseError("missing key before '='", line=number)
        if key not in KEYS:
            raise UnknownKey(key, number, KEYS)
        if key in values:
            raise ConfigParseError(f"duplicate key '{key}'", line=number)
        if not value:
            raise ConfigParseError(f"missing value for '{key}'", line=number)

        try:
            values[key] = KEYS[key](value)
        except ValueError:
            raise ConfigParseError(f"invalid value for '{key}': {value!r}", line=number) from None

    issues = []
    try:
        run = RunConfig.model_validate(values)
    except ValidationError as exc:
        issues.extend(ConfigValidationError.from_pydantic(exc).issues)
        run = _physical_part(values)

    if run is not None:
        try:
            model_config(run)
        except ConfigValidationError as exc:
            issues.extend(exc.issues)

    if issues:
        raise ConfigValidationError(issues)
    return run


def _physical_part(values: dict[str, Any]) -> RunConfig | None:
    """The physical keys alone, so model issues are reported alongside run issues."""
    try:
        return RunConfig.model_validate({key: values[key] for key in PHYSICAL_KEYS if key in values})
    except ValidationError:
        return None


def model_config(run: RunConfig) -> ModelConfig:
    """
    Validated physical model of a run.

    Raises:
        ConfigValidationError: If the model invariants fail
    """
    return validate(run.model_payload())


def _render_value(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return "inf" if value == math.inf else repr(value)
    return str(value)


def render_config(run: RunConfig) -> str:
    """Config-file text for run; parse_config(render_config(run)) == run."""
    dumped = run.model_dump(by_alias=True)
    lines = [
        f"{key} = {_render_value(dumped[key])}"
        for key in KEYS
        if dumped[key] is not None
    ]
    return "\n".join(lines) + "\n"


def canonical_line(run: RunConfig) -> str:
    """Single-line form of render_config, for CSV metadata."""
    return "; ".join(render_config(run).splitlines())
