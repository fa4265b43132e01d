"""Emission of matplotlib scripts that re-plot written CSV files."""
from __future__ import annotations

from pathlib import Path
from typing import Sequence

_HEAD = '''"""Generated by zenorates; re-plots {title}."""
import matplotlib.pyplot as plt
import numpy as np


def load(path):
    # first line is the '# config:' metadata
    return np.genfromtxt(path, delimiter=",", names=True, skip_header=1, dtype=None, encoding="utf-8")


fig, ax = plt.subplots(figsize=(6, 4))
'''

_CURVE = '''data = load({path!r})
ax.plot(data["tau"], data["gamma"], linestyle={style!r}, label={label!r})
'''

_COMPARE = '''data = load({path!r})
ax.plot(data["tau"], data["gamma0"], linestyle="-", label={label0!r})
ax.plot(data["tau"], data["gamma1"], linestyle="--", label={label1!r})
'''

_TAIL = '''ax.set_xlabel(r"$\\tau$")
ax.set_ylabel({ylabel!r})
ax.set_title({title!r})
ax.legend()
fig.tight_layout()
plt.show()
'''

_STYLES = ("-", "--", "-.", ":")


def render_curve_script(series: Sequence[tuple[str, Path | str]], title: str, ylabel: str = r"$\Gamma(\tau)$") -> str:
    """Script plotting Γ against τ for every (label, csv path) pair."""
    body = "".join(
        _CURVE.format(path=str(path), style=_STYLES[i % len(_STYLES)], label=label)
        for i, (label, path) in enumerate(series)
    )
    return _HEAD.format(title=title) + body + _TAIL.format(ylabel=ylabel, title=title)


def render_compare_script(path: Path | str, title: str) -> str:
    body = _COMPARE.format(path=str(path), label0=r"$\Gamma^{(0)}$", label1=r"$\Gamma^{(1)}$")
    return _HEAD.format(title=title) + body + _TAIL.format(ylabel=r"$\Gamma(\tau)$", title=title)


def write_script(path: Path | str, text: str) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")
    return path
