import math

import pytest

from zenorates.core.errors import ConfigParseError, ConfigValidationError, IssueCode, UnknownKey
from zenorates.schemas.model import FiniteTemperature, ZeroTemperature
from zenorates.schemas.run import RunConfig
from zenorates.services.cli.config_file import canonical_line, model_config, parse_config, render_config

EXAMPLE = """\
# strongest coupling of the G series
G = 1.5
F = 0.03        # weak reservoir
beta = inf
tau_max = 2.5
plot_script = yes
"""


def test_parse_example():
    run = parse_config(EXAMPLE)
    assert run.strong_coupling == 1.5
    assert run.weak_coupling == 0.03
    assert run.beta == math.inf
    assert run.tau_max == 2.5
    assert run.plot_script is True
    # untouched keys keep their defaults
    assert run.delta == 0.05
    assert run.reservoirs == 2


def test_empty_text_gives_defaults():
    assert parse_config("") == RunConfig()
    assert parse_config("\n# only a comment\n\n") == RunConfig()


def test_model_config_selects_reservoirs_and_temperature():
    two = model_config(parse_config("G = 0.8\nbeta = 2.0"))
    assert two.strong.coupling == 0.8
    assert two.temperature == FiniteTemperature(beta=2.0)

    one = model_config(parse_config("reservoirs = 1"))
    assert one.strong is None
    assert one.temperature == ZeroTemperature()


def test_unknown_key_names_line():
    with pytest.raises(UnknownKey) as exc_info:
        parse_config("G = 0.4\nepsilom = 1.0\n")
    assert exc_info.value.key == "epsilom"
    assert exc_info.value.line == 2
    assert "Available keys" in str(exc_info.value)
    assert str(exc_info.value).startswith("line 2:")


@pytest.mark.parametrize(
    "text, line",
    [
        ("G 0.4", 1),
        ("G = 0.4\n = 1.0", 2),
        ("G = 0.4\nG = 0.8", 2),
        ("F =", 1),
        ("\n\nF = lots", 3),
        ("tau_steps = 2.5", 1),
        ("plot_script = maybe", 1),
    ],
    ids=["no-equals", "no-key", "duplicate", "no-value", "bad-float", "bad-int", "bad-bool"],
)
def test_parse_errors_carry_line(text, line):
    with pytest.raises(ConfigParseError) as exc_info:
        parse_config(text)
    assert exc_info.value.line == line
    assert not isinstance(exc_info.value, UnknownKey)


def test_physical_invariants_are_validated():
    with pytest.raises(ConfigValidationError) as exc_info:
        parse_config("epsilon = 0\ndelta = -0.1\nF = -1")
    assert set(exc_info.value.codes) == {
        IssueCode.non_positive_epsilon,
        IssueCode.negative_delta,
        IssueCode.negative_coupling,
    }


@pytest.mark.parametrize(
    "text, code",
    [
        ("tau_min = 2.0\ntau_max = 1.0", IssueCode.bad_tau_range),
        ("tau_min = -1", IssueCode.bad_tau_range),
        ("tau_steps = 1", IssueCode.bad_grid),
        ("abs_tol = 0", IssueCode.bad_tolerance),
        ("beta = -3", IssueCode.bad_beta),
        ("reservoirs = 3", IssueCode.invalid_value),
    ],
)
def test_run_invariants_are_validated(text, code):
    with pytest.raises(ConfigValidationError) as exc_info:
        parse_config(text)
    assert code in exc_info.value.codes


def test_run_and_model_issues_are_reported_together():
    with pytest.raises(ConfigValidationError) as exc_info:
        parse_config("tau_min = 2.0\ntau_max = 1.0\nepsilon = 0\n")
    assert IssueCode.bad_tau_range in exc_info.value.codes
    assert IssueCode.non_positive_epsilon in exc_info.value.codes


def test_hash_inside_value_is_kept():
    assert parse_config("output = runs/a#1.csv").output == "runs/a#1.csv"


@pytest.mark.parametrize(
    "run",
    [
        RunConfig(),
        RunConfig(G=1.5, F=0.1, beta=0.5, tau_steps=120, plot_script=True),
        RunConfig(reservoirs=1, abs_tol=1e-12, rel_tol=1e-9, output="out/one.csv", measurements=5),
        RunConfig(epsilon=0.1, delta=0.0, omega_c=2.0, alpha_c=0.3, s=0.5, r=2.0),
    ],
)
def test_render_then_parse_is_identity(run):
    assert parse_config(render_config(run)) == run


def test_render_omits_unset_tolerances():
    text = render_config(RunConfig())
    assert "abs_tol" not in text
    assert "beta = inf" in text
    assert text.splitlines()[0] == "epsilon = 1.0"


def test_canonical_line():
    line = canonical_line(RunConfig())
    assert "\n" not in line
    assert line.startswith("epsilon = 1.0; delta = 0.05; G = 0.4; F = 0.03")
    assert canonical_line(parse_config(render_config(RunConfig()))) == line
