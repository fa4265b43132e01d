import math

import numpy as np
import pytest

from zenorates.core.kernels import KernelMethod, kernels, phi_i1, phi_i2, phi_r1, phi_r2
from zenorates.core.oracle import Kernel, kernel_quadrature_reference
from zenorates.schemas.model import FiniteTemperature, QuadratureSpec, SpectralDensity, ZeroTemperature
from tests.conftest import make_config

ZERO = ZeroTemperature()
STRONG = SpectralDensity(coupling=0.4)
WEAK = SpectralDensity(coupling=0.03)

TIGHT = QuadratureSpec(abs_tol=1e-13, rel_tol=1e-10, max_subdivisions=5000)
LOG_TIMES = np.logspace(-3, 2, 30)


def test_closed_forms_at_unit_time():
    np.testing.assert_allclose(phi_r1(STRONG, ZERO, 1.0), 0.8 * math.log(2.0), rtol=1e-15)
    np.testing.assert_allclose(phi_r1(STRONG, ZERO, 1.0), 0.5545177, atol=1e-7)
    np.testing.assert_allclose(phi_i1(STRONG, 1.0), 1.6 * math.pi / 4.0, rtol=1e-15)
    np.testing.assert_allclose(phi_r2(WEAK, ZERO, 1.0), 0.0, atol=1e-18)
    np.testing.assert_allclose(phi_i2(WEAK, 1.0), 0.015, rtol=1e-15)


def test_values_at_time_zero():
    config = make_config(G=0.4, F=0.03)
    value = kernels(config, 0.0)
    assert (value.phi_r1, value.phi_i1, value.phi_r2, value.phi_i2) == (0.0, 0.0, 0.03, 0.0)


def test_cutoffs_enter_closed_forms():
    strong = SpectralDensity(coupling=0.5, cutoff=2.0)
    weak = SpectralDensity(coupling=0.1, cutoff=3.0)
    t = 0.7
    np.testing.assert_allclose(phi_r1(strong, ZERO, t), 1.0 * math.log1p((2.0 * t) ** 2), rtol=1e-14)
    np.testing.assert_allclose(phi_i1(strong, t), 2.0 * math.atan(2.0 * t), rtol=1e-14)
    x2 = (3.0 * t) ** 2
    np.testing.assert_allclose(phi_r2(weak, ZERO, t), 0.1 * 9.0 * (1 - x2) / (1 + x2) ** 2, rtol=1e-14)
    np.testing.assert_allclose(phi_i2(weak, t), 2.0 * 0.1 * 27.0 * t / (1 + x2) ** 2, rtol=1e-14)


def test_array_input_keeps_shape():
    t = np.linspace(0.0, 3.0, 12).reshape(3, 4)
    for value in (phi_r1(STRONG, ZERO, t), phi_i1(STRONG, t), phi_r2(WEAK, ZERO, t), phi_i2(WEAK, t)):
        assert value.shape == (3, 4)
    assert isinstance(phi_r1(STRONG, ZERO, 1.0), float)


def test_phi_r1_is_non_negative():
    t = np.linspace(0.0, 50.0, 101)
    assert np.all(phi_r1(STRONG, ZERO, t) >= 0.0)


@pytest.mark.parametrize(
    "kernel",
    [
        lambda sd, t, method: phi_r1(sd, ZERO, t, spec=TIGHT, method=method),
        lambda sd, t, method: phi_i1(sd, t, spec=TIGHT, method=method),
        lambda sd, t, method: phi_r2(sd, ZERO, t, spec=TIGHT, method=method),
        lambda sd, t, method: phi_i2(sd, t, spec=TIGHT, method=method),
    ],
    ids=["phi_r1", "phi_i1", "phi_r2", "phi_i2"],
)
def test_quadrature_matches_closed_form(kernel):
    """Ohmic, zero temperature, 30 log-spaced t in [1e-3, 1e2]."""
    sd = SpectralDensity(coupling=1.0)
    closed = kernel(sd, LOG_TIMES, KernelMethod.closed_form)
    numeric = kernel(sd, LOG_TIMES, KernelMethod.quadrature)
    np.testing.assert_allclose(numeric, closed, rtol=1e-6)


def test_closed_form_unavailable_off_ohmic():
    sub_ohmic = SpectralDensity(coupling=0.4, ohmicity=0.5)
    with pytest.raises(ValueError):
        phi_r1(sub_ohmic, ZERO, 1.0, method=KernelMethod.closed_form)
    with pytest.raises(ValueError):
        phi_r2(WEAK, FiniteTemperature(beta=2.0), 1.0, method=KernelMethod.closed_form)


def test_non_ohmic_quadrature_is_finite():
    for ohmicity in (0.5, 2.0):
        sd = SpectralDensity(coupling=0.4, ohmicity=ohmicity)
        assert phi_r1(sd, ZERO, 1.5) > 0.0
        assert math.isfinite(phi_r2(sd, ZERO, 1.5))
        assert math.isfinite(phi_i2(sd, 1.5))


def test_thermal_dephasing_exceeds_zero_temperature():
    hot = phi_r1(STRONG, FiniteTemperature(beta=1.0), 1.0)
    cold = phi_r1(STRONG, ZERO, 1.0)
    assert hot > cold
    # β → ∞ recovers the zero-temperature closed form
    very_cold = phi_r1(STRONG, FiniteTemperature(beta=1e4), 1.0)
    np.testing.assert_allclose(very_cold, cold, rtol=1e-3)


def test_imaginary_kernels_ignore_temperature():
    # Φ_I1, Φ_I2 carry no coth factor, so the closed form serves every β
    assert phi_i2(WEAK, 2.0) == pytest.approx(2 * 0.03 * 2.0 / 25.0)


def test_single_reservoir_kernels_have_no_strong_part():
    value = kernels(make_config(G=None), 1.0)
    assert value.phi_r1 == 0.0
    assert value.phi_i1 == 0.0
    assert value.phi_i2 == pytest.approx(0.015)


KERNELS = {
    "phi_r1": lambda sd, temp, t, **kw: phi_r1(sd, temp, t, **kw),
    "phi_i1": lambda sd, temp, t, **kw: phi_i1(sd, t, **kw),
    "phi_r2": lambda sd, temp, t, **kw: phi_r2(sd, temp, t, **kw),
    "phi_i2": lambda sd, temp, t, **kw: phi_i2(sd, t, **kw),
}


@pytest.mark.parametrize("name", list(KERNELS))
@pytest.mark.parametrize("method", [KernelMethod.closed_form, KernelMethod.quadrature])
def test_kernels_are_linear_in_coupling(name, method):
    kernel = KERNELS[name]
    t = np.array([0.3, 2.5, 7.0])
    single = kernel(SpectralDensity(coupling=0.4), ZERO, t, spec=TIGHT, method=method)
    double = kernel(SpectralDensity(coupling=0.8), ZERO, t, spec=TIGHT, method=method)
    rtol = 1e-14 if method is KernelMethod.closed_form else 1e-8
    np.testing.assert_allclose(double, 2.0 * single, rtol=rtol)


@pytest.mark.parametrize("name", ["phi_r1", "phi_r2"])
def test_thermal_kernels_are_linear_in_coupling(name):
    hot = FiniteTemperature(beta=2.0)
    single = KERNELS[name](SpectralDensity(coupling=0.4), hot, 1.5, spec=TIGHT)
    double = KERNELS[name](SpectralDensity(coupling=0.8), hot, 1.5, spec=TIGHT)
    assert double == pytest.approx(2.0 * single, rel=1e-8)


@pytest.mark.parametrize("name", list(KERNELS))
@pytest.mark.parametrize("beta", [2.0, 10.0])
@pytest.mark.parametrize("t", [0.5, 1.0, 2.0])
def test_finite_temperature_kernels_match_trapezoid(name, beta, t):
    sd = SpectralDensity(coupling=1.0)
    temperature = FiniteTemperature(beta=beta)
    value = KERNELS[name](sd, temperature, t)
    reference = kernel_quadrature_reference(Kernel(name), sd, temperature, t)
    assert value == pytest.approx(reference, rel=1e-5, abs=1e-7)


def test_phi_i1_long_time_limit():
    # 4G · atan(ω_c t) → 2πG
    assert phi_i1(SpectralDensity(coupling=1.5), 1e6) == pytest.approx(3.0 * math.pi, rel=1e-6)
    assert phi_i1(SpectralDensity(coupling=1.5), 1e6) < 3.0 * math.pi
