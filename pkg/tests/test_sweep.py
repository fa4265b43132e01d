import logging

import pytest

from zenorates.services import executor
from zenorates.services.executor import CurveExecutor, CurveJob, execute_curve
from zenorates.services.sweep import run_jobs, sweep
from tests.conftest import make_config

TAU_RANGE = (0.2, 2.0)


def test_execute_curve_success(config_two):
    result = execute_curve(CurveJob(config=config_two, taus=[1.0, 0.5], label="G = 0.4"))
    assert result
    assert result.success
    assert result.curve.taus == [0.5, 1.0]
    assert result.duration_seconds is not None


def test_executor_captures_failures(config_two, monkeypatch):
    def explode(*args, **kwargs):
        raise ArithmeticError("boom")

    monkeypatch.setattr(executor, "rate_curve", explode)
    result = CurveExecutor().execute(CurveJob(config=config_two, taus=[1.0], label="bad"))
    assert not result
    assert result.error_message == "ArithmeticError: boom"
    assert result.curve.error == "ArithmeticError: boom"
    assert result.curve.points == []
    assert result.curve.label == "bad"


def test_empty_sweep():
    assert sweep([], TAU_RANGE, 8) == []
    assert run_jobs([]) == []


def test_sweep_keeps_input_order():
    configs = [make_config(G=G) for G in (1.5, 0.4, 0.8)]
    curves = sweep(configs, TAU_RANGE, 8, labels=["a", "b", "c"])
    assert [c.label for c in curves] == ["a", "b", "c"]
    assert all(c.succeeded for c in curves)
    assert all(len(c.points) == 8 for c in curves)
    assert curves[0].taus[0] == pytest.approx(0.2)
    assert curves[0].taus[-1] == pytest.approx(2.0)


def test_short_interval_rate_grows_with_weak_coupling():
    # the weak-reservoir deficit is positive while ετ′ − Φ_I1 stays small
    configs = [make_config(G=1.5, F=F) for F in (0.03, 0.05, 0.1)]
    curves = sweep(configs, (0.05, 0.2), 4)
    for tau_index in range(4):
        gammas = [c.points[tau_index].gamma for c in curves]
        assert gammas == sorted(gammas)


def test_failure_is_recorded_in_band(monkeypatch, caplog):
    real = executor.rate_curve

    def flaky(config, taus, **kwargs):
        if kwargs.get("label") == "bad":
            raise ValueError("no convergence")
        return real(config, taus, **kwargs)

    monkeypatch.setattr(executor, "rate_curve", flaky)
    with caplog.at_level(logging.WARNING, logger="zenorates.services.sweep"):
        curves = sweep([make_config(), make_config()], TAU_RANGE, 4, labels=["good", "bad"])
    assert curves[0].succeeded
    assert curves[1].error == "ValueError: no convergence"
    assert "1 of 2 curves failed: bad" in caplog.text


def test_sweep_with_transitions():
    curves = sweep([make_config(G=1.5)], (0.05, 1.5), 32, with_transitions=True)
    assert curves[0].succeeded
    assert any(t.kind.value == "max" for t in curves[0].transitions)


def test_process_pool_matches_in_process():
    configs = [make_config(G=G) for G in (0.4, 0.8)]
    sequential = sweep(configs, TAU_RANGE, 4, workers=1)
    pooled = sweep(configs, TAU_RANGE, 4, workers=2)
    assert pooled == sequential


@pytest.mark.parametrize(
    "tau_range, n_grid, labels",
    [((1.0, 0.5), 8, None), ((0.0, 1.0), 8, None), (TAU_RANGE, 1, None), (TAU_RANGE, 8, ["only-one", "extra"])],
)
def test_sweep_rejects_bad_arguments(tau_range, n_grid, labels):
    with pytest.raises(ValueError):
        sweep([make_config()], tau_range, n_grid, labels=labels)
