import logging

import pytest

from zenorates.core.errors import ConfigValidationError, IssueCode
from zenorates.core.validation import validate
from zenorates.schemas.model import FiniteTemperature, ZeroTemperature

VALID = {
    "system": {"epsilon": 1.0, "delta": 0.05},
    "weak": {"coupling": 0.03},
    "strong": {"coupling": 0.4},
}


def test_valid_config_round_trips():
    config = validate(VALID)
    assert config.system.epsilon == 1.0
    assert config.strong.coupling == 0.4
    assert isinstance(config.temperature, ZeroTemperature)
    assert validate(config) == config


def test_every_violation_is_listed():
    payload = {
        "system": {"epsilon": 0.0, "delta": -1.0},
        "weak": {"coupling": -0.1, "cutoff": 0.0},
        "strong": {"coupling": 0.4, "ohmicity": 0.0},
    }
    with pytest.raises(ConfigValidationError) as exc_info:
        validate(payload)

    codes = set(exc_info.value.codes)
    assert codes == {
        IssueCode.non_positive_epsilon,
        IssueCode.negative_delta,
        IssueCode.negative_coupling,
        IssueCode.non_positive_cutoff,
        IssueCode.non_positive_ohmicity,
    }
    fields = {issue.field for issue in exc_info.value.issues}
    assert "system.epsilon" in fields
    assert "weak.cutoff" in fields


@pytest.mark.parametrize("beta", [-1.0, 0.0, float("nan")])
def test_bad_beta(beta):
    payload = {**VALID, "temperature": {"kind": "finite", "beta": beta}}
    with pytest.raises(ConfigValidationError) as exc_info:
        validate(payload)
    assert exc_info.value.codes == [IssueCode.bad_beta]
    assert exc_info.value.issues[0].field == "temperature.beta"


def test_finite_temperature_accepted():
    config = validate({**VALID, "temperature": {"kind": "finite", "beta": 5.0}})
    assert config.temperature == FiniteTemperature(beta=5.0)


def test_unknown_field_is_invalid_value():
    with pytest.raises(ConfigValidationError) as exc_info:
        validate({**VALID, "system": {"epsilon": 1.0, "tunneling": 0.1}})
    assert IssueCode.invalid_value in exc_info.value.codes


def test_weak_above_strong_only_warns(caplog):
    with caplog.at_level(logging.WARNING, logger="zenorates.core.validation"):
        config = validate({**VALID, "strong": {"coupling": 0.01}})
    assert config.strong.coupling == 0.01
    assert "strong/weak separation" in caplog.text


def test_single_reservoir_selected_by_absent_strong():
    config = validate({"system": {"epsilon": 1.0}, "weak": {"coupling": 0.03}})
    assert not config.has_strong
    assert validate(VALID).without_strong().weak == config.weak
    assert validate(VALID).without_strong().strong is None
