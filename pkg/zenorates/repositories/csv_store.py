from __future__ import annotations

import csv
import io
from pathlib import Path
from typing import Sequence

from zenorates.schemas.results import RateCurve, RatePoint, TransitionPoint, Validity

CURVE_HEADER = ("tau", "gamma", "survival", "validity")
COMPARE_HEADER = ("tau", "gamma0", "gamma1")
TRANSITIONS_HEADER = ("tau_star", "kind", "gamma")

CONFIG_PREFIX = "# config: "


def format_value(value: float | None) -> str:
    """12 significant digits; empty for a missing value."""
    if value is None:
        return ""
    return format(value, ".12g")


def _parse_optional(text: str) -> float | None:
    return float(text) if text else None


class CurveRepository:
    """
    Reads and writes result CSV files.

    Every file starts with one `# config: ...` comment line, followed by a
    header row and data rows sorted by τ. Output is byte-for-byte
    deterministic for fixed inputs.
    """

    # ─────────────────────────────────────────────────────────────────
    # Writers
    # ─────────────────────────────────────────────────────────────────

    @staticmethod
    def write_curve(
        path: Path | str,
        curve: RateCurve,
        config_line: str,
        notes: Sequence[str] = (),
    ) -> Path:
        rows = [
            (format_value(p.tau), format_value(p.gamma), format_value(p.survival), p.validity.value)
            for p in sorted(curve.points, key=lambda p: p.tau)
        ]
        return CurveRepository._write(path, CURVE_HEADER, rows, config_line, notes)

    @staticmethod
    def write_compare(
        path: Path | str,
        two_reservoir: Sequence[RatePoint],
        one_reservoir: Sequence[RatePoint],
        config_line: str,
    ) -> Path:
        if [p.tau for p in two_reservoir] != [p.tau for p in one_reservoir]:
            raise ValueError("compare curves must share the same tau grid")
        rows = [
            (format_value(a.tau), format_value(a.gamma), format_value(b.gamma))
            for a, b in sorted(zip(two_reservoir, one_reservoir), key=lambda pair: pair[0].tau)
        ]
        return CurveRepository._write(path, COMPARE_HEADER, rows, config_line)

    @staticmethod
    def write_transitions(
        path: Path | str,
        transitions: Sequence[TransitionPoint],
        config_line: str,
    ) -> Path:
        rows = [
            (format_value(t.tau_star), t.kind.value, format_value(t.gamma_at))
            for t in sorted(transitions, key=lambda t: t.tau_star)
        ]
        return CurveRepository._write(path, TRANSITIONS_HEADER, rows, config_line)

    @staticmethod
    def _write(
        path: Path | str,
        header: Sequence[str],
        rows: Sequence[Sequence[str]],
        config_line: str,
        notes: Sequence[str] = (),
    ) -> Path:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)

        buffer = io.StringIO()
        # Notes go on the single metadata line so the header stays second
        metadata = " | ".join([config_line, *notes])
        buffer.write(f"{CONFIG_PREFIX}{metadata}\n")
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)

        path.write_text(buffer.getvalue(), encoding="utf-8", newline="")
        return path

    # ─────────────────────────────────────────────────────────────────
    # Readers
    # ─────────────────────────────────────────────────────────────────

    @staticmethod
    def read_config_line(path: Path | str) -> str:
        with Path(path).open(encoding="utf-8") as handle:
            first = handle.readline().rstrip("\n")
        if not first.startswith(CONFIG_PREFIX):
            raise ValueError(f"{path}: missing '{CONFIG_PREFIX.strip()}' metadata line")
        return first[len(CONFIG_PREFIX):]

    @staticmethod
    def _rows(path: Path | str, header: Sequence[str]) -> list[dict[str, str]]:
        with Path(path).open(encoding="utf-8", newline="") as handle:
            lines = [line for line in handle if not line.startswith("#")]
        reader = csv.DictReader(lines)
        if tuple(reader.fieldnames or ()) != tuple(header):
            raise ValueError(f"{path}: expected header {','.join(header)}, got {reader.fieldnames}")
        return list(reader)

    @staticmethod
    def read_curve(path: Path | str, label: str = "") -> RateCurve:
        points = [
            RatePoint(
                tau=float(row["tau"]),
                gamma=_parse_optional(row["gamma"]),
                survival=float(row["survival"]),
                validity=Validity(row["validity"]),
            )
            for row in CurveRepository._rows(path, CURVE_HEADER)
        ]
        return RateCurve(points=points, label=label or Path(path).stem)

    @staticmethod
    def read_compare(path: Path | str) -> list[tuple[float, float | None, float | None]]:
        return [
            (float(row["tau"]), _parse_optional(row["gamma0"]), _parse_optional(row["gamma1"]))
            for row in CurveRepository._rows(path, COMPARE_HEADER)
        ]

    @staticmethod
    def read_transitions(path: Path | str) -> list[tuple[float, str, float]]:
        return [
            (float(row["tau_star"]), row["kind"], float(row["gamma"]))
            for row in CurveRepository._rows(path, TRANSITIONS_HEADER)
        ]
