import pytest

from zenorates.repositories.csv_store import CurveRepository, format_value
from zenorates.schemas.results import RateCurve, RatePoint, TransitionKind, TransitionPoint, Validity


@pytest.fixture
def curve() -> RateCurve:
    return RateCurve(
        points=[
            RatePoint(tau=0.5, survival=0.99, gamma=0.0201007006719),
            RatePoint(tau=1.0, survival=0.95, gamma=0.0512932943876),
            RatePoint(tau=1.5, survival=-0.25, validity=Validity.survival_out_of_range),
        ],
        label="G = 0.4",
    )


def test_format_value():
    assert format_value(1.0) == "1"
    assert format_value(1.0 / 3.0) == "0.333333333333"
    assert format_value(1.23456789012345e-7) == "1.23456789012e-07"
    assert format_value(None) == ""


def test_curve_file_layout(tmp_path, curve):
    path = CurveRepository.write_curve(tmp_path / "sub" / "curve.csv", curve, "G = 0.4; F = 0.03")
    assert path.read_text(encoding="utf-8") == (
        "# config: G = 0.4; F = 0.03\n"
        "tau,gamma,survival,validity\n"
        "0.5,0.0201007006719,0.99,ok\n"
        "1,0.0512932943876,0.95,ok\n"
        "1.5,,-0.25,survival_out_of_range\n"
    )


def test_curve_read_back(tmp_path, curve):
    path = CurveRepository.write_curve(tmp_path / "curve.csv", curve, "G = 0.4")
    read = CurveRepository.read_curve(path, label="G = 0.4")
    assert read.points == curve.points
    assert read.valid_prefix() == curve.points[:2]
    assert CurveRepository.read_curve(path).label == "curve"


def test_notes_share_the_config_line(tmp_path, curve):
    path = CurveRepository.write_curve(tmp_path / "curve.csv", curve, "G = 0.4", notes=["grid: 400", "run: 2"])
    assert CurveRepository.read_config_line(path) == "G = 0.4 | grid: 400 | run: 2"
    assert path.read_text(encoding="utf-8").splitlines()[1] == "tau,gamma,survival,validity"


def test_compare_file(tmp_path):
    two = [RatePoint(tau=0.5, survival=0.99, gamma=0.02), RatePoint(tau=1.0, survival=0.9, gamma=0.1)]
    one = [
        RatePoint(tau=0.5, survival=0.98, gamma=0.04),
        RatePoint(tau=1.0, survival=1.5, validity=Validity.survival_out_of_range),
    ]
    path = CurveRepository.write_compare(tmp_path / "compare.csv", two, one, "F = 0.03")
    assert path.read_text(encoding="utf-8").splitlines()[1:] == [
        "tau,gamma0,gamma1",
        "0.5,0.02,0.04",
        "1,0.1,",
    ]
    assert CurveRepository.read_compare(path) == [(0.5, 0.02, 0.04), (1.0, 0.1, None)]


def test_compare_requires_shared_grid(tmp_path):
    two = [RatePoint(tau=0.5, survival=0.99, gamma=0.02)]
    one = [RatePoint(tau=0.6, survival=0.99, gamma=0.02)]
    with pytest.raises(ValueError):
        CurveRepository.write_compare(tmp_path / "compare.csv", two, one, "")


def test_transitions_file_sorted(tmp_path):
    transitions = [
        TransitionPoint(tau_star=2.0, kind=TransitionKind.minimum, gamma_at=0.01),
        TransitionPoint(tau_star=0.45, kind=TransitionKind.maximum, gamma_at=0.0312),
    ]
    path = CurveRepository.write_transitions(tmp_path / "transitions.csv", transitions, "G = 0.8")
    assert CurveRepository.read_transitions(path) == [(0.45, "max", 0.0312), (2.0, "min", 0.01)]


def test_empty_transitions_file(tmp_path):
    path = CurveRepository.write_transitions(tmp_path / "transitions.csv", [], "G = 0.4")
    assert path.read_text(encoding="utf-8") == "# config: G = 0.4\ntau_star,kind,gamma\n"
    assert CurveRepository.read_transitions(path) == []


def test_missing_metadata_line(tmp_path):
    path = tmp_path / "bare.csv"
    path.write_text("tau,gamma,survival,validity\n", encoding="utf-8")
    with pytest.raises(ValueError):
        CurveRepository.read_config_line(path)


def test_wrong_header(tmp_path, curve):
    path = CurveRepository.write_curve(tmp_path / "curve.csv", curve, "G = 0.4")
    with pytest.raises(ValueError):
        CurveRepository.read_compare(path)
