"""Benchmark harness: timed serial vs parallel recognition and CSV reports.

For every key the harness runs warm-ups (discarded), then the same number of
timed serial and timed parallel recognitions, asserting that both paths
produced identical outputs; any divergence aborts the run rather than
becoming a report entry. Timings are integer nanoseconds from a monotonic
clock; the median is the headline statistic (means are also derived) because
it resists scheduler outliers.
"""

from __future__ import annotations

import csv
import statistics
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .errors import InvariantError, ParallelDivergenceError
from .parallel import ExecPlan
from .patterns import LabeledPattern, flip_noise
from .recognize import RecognizerModel, repeat_recognize

__all__ = [
    "TimingStats",
    "ReportRow",
    "SweepPoint",
    "run_benchmark",
    "noise_sweep",
    "write_report_csv",
    "write_matching_levels_csv",
    "write_speedup_csv",
    "write_sweep_csv",
]


@dataclass(frozen=True)
class TimingStats:
    """Wall-clock samples in nanoseconds, with derived summary statistics."""

    samples: tuple[int, ...]

    def __post_init__(self):
        if not self.samples:
            raise ValueError("timing stats need at least one sample")

    @property
    def min(self) -> int:
        return min(self.samples)

    @property
    def max(self) -> int:
        return max(self.samples)

    @property
    def median(self) -> float | int:
        return statistics.median(self.samples)

    @property
    def mean(self) -> float:
        return statistics.fmean(self.samples)


@dataclass(frozen=True)
class ReportRow:
    """One benchmarked key: outcome, agreement percentage, and timings."""

    key_label: str
    predicted_label: str
    match_pct: float  # best-match percentage, already rounded to 2 decimals
    correct: bool
    serial: TimingStats
    parallel: TimingStats
    runs: int

    @property
    def speedup(self) -> float:
        return self.serial.median / self.parallel.median


@dataclass(frozen=True)
class SweepPoint:
    """Aggregate recognition quality at one synthetic flip-noise rate."""

    rate: float
    top1_accuracy: float
    mean_best_match_pct: float


def _round2(score: Fraction) -> float:
    cents = round(score * 100)
    return cents / 100


def run_benchmark(
    model: RecognizerModel,
    keys: list[LabeledPattern],
    plan: ExecPlan | None = None,
    runs: int = 5,
) -> list[ReportRow]:
    """Time serial and parallel recognition for every key, in input order.

    Per key: one warm-up per execution path (discarded), then ``runs`` timed
    serial and ``runs`` timed parallel recognitions. Serial/parallel output
    divergence raises :class:`ParallelDivergenceError`; a mean-of-runs score
    differing from the single-run score raises :class:`InvariantError`.
    """
    if not keys:
        raise ValueError("keys must be nonempty")
    if runs < 1:
        raise ValueError(f"runs must be >= 1, got {runs}")
    plan = plan or ExecPlan()

    rows: list[ReportRow] = []
    for entry in keys:
        serial_once = repeat_recognize(model, entry.pattern, 1)  # serial warm-up
        parallel_once = repeat_recognize(model, entry.pattern, 1, plan)  # parallel warm-up
        if not serial_once.same_outcome(parallel_once):
            raise ParallelDivergenceError(
                f"serial and parallel warm-up recognition disagree for key {entry.label!r}"
            )
        serial = repeat_recognize(model, entry.pattern, runs)
        parallel = repeat_recognize(model, entry.pattern, runs, plan)
        if not serial.same_outcome(parallel):
            raise ParallelDivergenceError(
                f"serial and parallel recognition disagree for key {entry.label!r}"
            )
        if serial.scores != serial_once.scores:
            raise InvariantError(
                f"mean-of-{runs}-runs scores differ from a single run for key {entry.label!r}"
            )
        rows.append(
            ReportRow(
                key_label=entry.label,
                predicted_label=serial.predicted,
                match_pct=_round2(serial.scores[serial.predicted]),
                correct=entry.label == serial.predicted,
                serial=TimingStats(serial.timings_ns),
                parallel=TimingStats(parallel.timings_ns),
                runs=runs,
            )
        )
    return rows


def noise_sweep(
    model: RecognizerModel,
    rates: list[float],
    seed: int,
    plan: ExecPlan | None = None,
    runs: int = 1,
) -> list[SweepPoint]:
    """Recognition quality vs synthetic flip noise on the stored alphabet.

    For each rate, every stored pattern is corrupted with
    ``flip_noise(pattern, rate, seed + index)`` and used as a key against the
    model it came from; the point reports mean top-1 accuracy and the mean
    best-match percentage over those keys.
    """
    if not rates:
        raise ValueError("rates must be nonempty")
    for rate in rates:
        if not 0.0 <= rate <= 1.0:
            raise ValueError(f"flip rate must lie in [0, 1], got {rate}")
    points: list[SweepPoint] = []
    for rate in rates:
        keys = [
            LabeledPattern(e.label, flip_noise(e.pattern, rate, seed + i))
            for i, e in enumerate(model.entries)
        ]
        rows = run_benchmark(model, keys, plan, runs)
        points.append(
            SweepPoint(
                rate=rate,
                top1_accuracy=sum(r.correct for r in rows) / len(rows),
                mean_best_match_pct=statistics.fmean(r.match_pct for r in rows),
            )
        )
    return points


def _numstr(x) -> str:
    """Render a timing number losslessly (integer form when integral)."""
    return str(int(x)) if float(x).is_integer() else repr(float(x))


def _write_csv(path, header, rows_out) -> Path:
    path = Path(path)
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows_out)
    return path


def write_report_csv(rows: list[ReportRow], path) -> Path:
    """Full per-key report: outcome, match percentage, and both timings."""
    if not rows:
        raise ValueError("no rows to write")
    return _write_csv(
        path,
        ["label", "predicted", "match_pct", "correct", "serial_median_ns", "parallel_median_ns", "speedup", "runs"],
        (
            [
                r.key_label,
                r.predicted_label,
                f"{r.match_pct:.2f}",
                "true" if r.correct else "false",
                _numstr(r.serial.median),
                _numstr(r.parallel.median),
                f"{r.speedup:.4f}",
                r.runs,
            ]
            for r in rows
        ),
    )


def write_matching_levels_csv(rows: list[ReportRow], path) -> Path:
    """Per-key matching level, for plotting recognition quality by glyph.

    Misrecognized keys keep their raw best-match value; the ``correct``
    column lets a consumer reconstruct the stricter award-0-on-miss
    convention without losing data.
    """
    if not rows:
        raise ValueError("no rows to write")
    return _write_csv(
        path,
        ["label", "match_pct", "correct"],
        ([r.key_label, f"{r.match_pct:.2f}", "true" if r.correct else "false"] for r in rows),
    )


def write_speedup_csv(rows: list[ReportRow], path) -> Path:
    """Per-key serial vs parallel decision timing, for speedup plots."""
    if not rows:
        raise ValueError("no rows to write")
    return _write_csv(
        path,
        ["label", "serial_median_ns", "parallel_median_ns", "speedup"],
        (
            [r.key_label, _numstr(r.serial.median), _numstr(r.parallel.median), f"{r.speedup:.4f}"]
            for r in rows
        ),
    )


def write_sweep_csv(points: list[SweepPoint], path) -> Path:
    """Noise-sweep table: one line per flip rate."""
    if not points:
        raise ValueError("no sweep points to write")
    return _write_csv(
        path,
        ["rate", "top1_accuracy", "mean_best_match_pct"],
        ([repr(p.rate), f"{p.top1_accuracy:.4f}", f"{p.mean_best_match_pct:.2f}"] for p in points),
    )
