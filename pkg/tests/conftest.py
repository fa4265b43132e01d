import math

import pytest

from zenorates.core.validation import validate
from zenorates.schemas.model import ModelConfig


def make_config(
    G: float | None = 0.4,
    F: float = 0.03,
    delta: float = 0.05,
    epsilon: float = 1.0,
    beta: float = math.inf,
) -> ModelConfig:
    """Reference parameter set (ω_c = α_c = 1, Ohmic); G=None drops the strong reservoir."""
    payload = {
        "system": {"epsilon": epsilon, "delta": delta},
        "weak": {"coupling": F},
        "temperature": {"kind": "zero"} if beta == math.inf else {"kind": "finite", "beta": beta},
    }
    if G is not None:
        payload["strong"] = {"coupling": G}
    return validate(payload)


@pytest.fixture
def config_two():
    """Strong coupling G = 0.4, weak coupling F = 0.03."""
    return make_config(G=0.4)


@pytest.fixture
def config_one():
    """Weak reservoir only, F = 0.03."""
    return make_config(G=None)


@pytest.fixture
def tunneling_only():
    """F = 0: Γ⁽¹⁾ has the closed form −ln(1 − (Δ²/2)(1 − cos τ))/τ."""
    return make_config(G=None, F=0.0)
