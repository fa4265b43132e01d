import pytest

from zenorates.schemas.model import SpectralDensity
from zenorates.services.selftest import kernel_reports, pin_report, trapezoid_floor


def test_kernel_checks_pass():
    reports = kernel_reports()
    failed = [report.name for report in reports if not report.passed]
    assert failed == []


def test_kernel_checks_include_phi_r2_zero_crossing():
    by_name = {report.name: report for report in kernel_reports()}
    for name in ("phi_r2 quadrature t=1", "phi_r2 trapezoid t=1"):
        report = by_name[name]
        assert report.production_value == 0.0
        assert report.abs_diff <= report.abs_floor
        assert report.passed


def test_trapezoid_floor_covers_endpoint_error():
    # h = 4e-4 on [0, 40] with 100001 points: h²/12 ≈ 1.33e-8
    floor = trapezoid_floor(SpectralDensity(coupling=1.0))
    assert floor == pytest.approx(2.0 * (40.0 / 100_000) ** 2 / 12, rel=1e-12)
    assert floor > 1.3334e-8


def test_pin_report_passes():
    assert pin_report().passed
