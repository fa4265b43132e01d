"""
Subcommand implementations.

Each command returns a process exit code. Results go to files (or stdout
for `eval`), progress and summaries to standard error.
"""
from __future__ import annotations

import logging
import sys
from pathlib import Path

import numpy as np

from zenorates.core.quadrature import default_spec
from zenorates.core.rates import decay_rate, gamma0, gamma1, rate_curve, survival_after_n, survival_deficit_terms
from zenorates.core.regime import find_transitions, first_maximum
from zenorates.figures import registry
from zenorates.repositories.csv_store import CurveRepository
from zenorates.schemas.model import MeasurementSchedule
from zenorates.schemas.run import RunConfig
from zenorates.services.cli.config_file import canonical_line, model_config
from zenorates.services.cli.plot_script import render_compare_script, render_curve_script, write_script
from zenorates.services.selftest import run_selftest
from zenorates.services.sweep import sweep
from zenorates.settings import settings

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_NON_CONVERGENCE = 2
EXIT_SELFTEST_FAILED = 3


def _err(message: str = "") -> None:
    print(message, file=sys.stderr)


def _banner(title: str) -> None:
    _err("=" * 70)
    _err(title)
    _err("=" * 70)


def _tau_grid(run: RunConfig) -> list[float]:
    return np.linspace(run.tau_min, run.tau_max, run.tau_steps).tolist()


def _plot_path(csv_path: Path) -> Path:
    return csv_path.with_suffix(".plot.py")


# ─────────────────────────────────────────────────────────────────
# Single-config commands
# ─────────────────────────────────────────────────────────────────

def cmd_eval(run: RunConfig, tau: float) -> int:
    schedule = MeasurementSchedule(tau=tau, n=run.measurements)
    config = model_config(run)
    spec = run.quadrature_spec(default_spec())
    point = decay_rate(config, tau, spec=spec)

    print(f"tau={point.tau:.12g} gamma={'' if point.gamma is None else format(point.gamma, '.12g')} "
          f"survival={point.survival:.12g} validity={point.validity.value}")

    deficit = survival_deficit_terms(config, tau, spec=spec)
    print(f"deficit weak_real={deficit.weak_real:.12g} weak_imag={deficit.weak_imag:.12g} "
          f"tunneling={deficit.tunneling:.12g} total={deficit.total:.12g}")

    if point.is_valid:
        print(f"S(N*tau) N={schedule.n} value={survival_after_n(config, schedule, spec=spec):.12g}")
    else:
        _err(f"⚠️  Survival {point.survival:.6g} outside (0, 1]: perturbation theory does not hold at this tau")
    return EXIT_OK


def cmd_curve(run: RunConfig, output: Path) -> int:
    config = model_config(run)
    curve = rate_curve(config, _tau_grid(run), spec=run.quadrature_spec(default_spec()), label=output.stem)
    CurveRepository.write_curve(output, curve, canonical_line(run))

    valid = len(curve.valid_prefix())
    _err(f"✅ {output}: {len(curve.points)} points, {valid} valid before the first out-of-range survival")
    if run.plot_script:
        write_script(_plot_path(output), render_curve_script([(output.stem, output.name)], title=output.stem))
    return EXIT_OK


def cmd_transition(run: RunConfig, output: Path) -> int:
    config = model_config(run)
    transitions = find_transitions(
        config,
        (run.tau_min, run.tau_max),
        max(run.tau_steps, 16),
        spec=run.quadrature_spec(default_spec()),
    )
    CurveRepository.write_transitions(output, transitions, canonical_line(run))

    first = first_maximum(transitions)
    if first is None:
        _err(f"No Zeno to anti-Zeno transition in ({run.tau_min:g}, {run.tau_max:g})")
    else:
        _err(f"Transition (first maximum) at tau*={first.tau_star:.9g}, gamma={first.gamma_at:.9g}")
    _err(f"✅ {output}: {len(transitions)} extrema")
    return EXIT_OK


def cmd_compare(run: RunConfig, output: Path) -> int:
    if run.reservoirs != 2:
        run = run.model_copy(update={"reservoirs": 2})
    config = model_config(run)
    spec = run.quadrature_spec(default_spec())
    taus = _tau_grid(run)

    with_strong = [gamma0(config, tau, spec=spec) for tau in taus]
    weak_only = [gamma1(config, tau, spec=spec) for tau in taus]
    CurveRepository.write_compare(output, with_strong, weak_only, canonical_line(run))

    inhibited = sum(
        1 for a, b in zip(with_strong, weak_only)
        if a.gamma is not None and b.gamma is not None and a.gamma < b.gamma
    )
    _err(f"✅ {output}: Γ⁽⁰⁾ < Γ⁽¹⁾ at {inhibited} of {len(taus)} points")
    if run.plot_script:
        write_script(_plot_path(output), render_compare_script(output.name, title=output.stem))
    return EXIT_OK


# ─────────────────────────────────────────────────────────────────
# Figures and self-test
# ─────────────────────────────────────────────────────────────────

def cmd_figure(name: str, output_dir: Path, plot_script: bool = False) -> int:
    metadata = registry.get_metadata(name)
    series = registry.build(name)
    _banner(f"📈 FIGURE {name}: {metadata.description}")

    runs = [s.run for s in series]
    first = runs[0]
    curves = sweep(
        [model_config(run) for run in runs],
        (first.tau_min, first.tau_max),
        first.tau_steps,
        labels=[s.label for s in series],
    )

    written = []
    status = EXIT_OK
    for s, curve in zip(series, curves):
        if not curve.succeeded:
            _err(f"❌ {s.label}: {curve.error}")
            status = EXIT_NON_CONVERGENCE
            continue
        path = CurveRepository.write_curve(output_dir / f"fig{name}_{s.slug}.csv", curve, canonical_line(s.run))
        written.append((s.label, path))
        _err(f"✅ {s.label}: {path}")

    if plot_script and written:
        script = render_curve_script([(label, path.name) for label, path in written], title=f"Figure {name}")
        _err(f"📝 {write_script(output_dir / f'fig{name}.plot.py', script)}")
    return status


def cmd_selftest() -> int:
    _banner("🧪 ORACLE SELF-TEST")
    reports = run_selftest()
    failed = [r for r in reports if not r.passed]
    for report in reports:
        mark = "✅" if report.passed else "❌"
        _err(f"{mark} {report.name:<32} rel_diff={report.rel_diff:.3e} tol={report.tolerance:g}")
    _banner(f"{len(reports) - len(failed)}/{len(reports)} checks passed")
    return EXIT_SELFTEST_FAILED if failed else EXIT_OK


def default_output_dir() -> Path:
    return Path(settings.output_dir)
