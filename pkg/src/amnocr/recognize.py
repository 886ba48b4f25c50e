"""Alphabet store and ranked recognition.

A :class:`RecognizerModel` holds the labeled glyph alphabet. In the default
``superposed`` mode all glyphs share one weight matrix and a key is ranked by
how well the recalled output matches each stored glyph; cross-talk between
stored patterns is what produces partial percentages. The ``literal`` mode
instead trains a fresh matrix on (key, target) per label and recalls with the
same key, which provably reproduces the target exactly, so every score is
100.00; it is kept as executable documentation of that degeneracy.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .core import match_score, net_input, store_patterns, threshold, train_pair, zero_weights
from .parallel import ExecPlan, par_net_input, par_train_pair
from .patterns import LabeledPattern, Pattern

__all__ = ["MODES", "RecognizerModel", "RecognitionResult", "build_model", "recognize", "repeat_recognize"]

MODES = ("superposed", "literal")


@dataclass(frozen=True, eq=False)
class RecognizerModel:
    """Immutable trained alphabet store; safe for concurrent recognition."""

    entries: tuple[LabeledPattern, ...]
    mode: str
    weights: np.ndarray | None = field(repr=False)
    _targets: np.ndarray = field(repr=False)  # stacked (k, n) int8 alphabet

    @property
    def n(self) -> int:
        return self.entries[0].pattern.n

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(e.label for e in self.entries)


@dataclass(eq=False)
class RecognitionResult:
    """Per-label match percentages plus the winning label.

    ``scores`` maps every stored label to an exact rational percentage in
    [0, 100]; ``predicted`` attains the maximum (ties go to the
    lexicographically smallest label). ``timings_ns`` carries one wall-clock
    sample per run when produced by :func:`repeat_recognize`.
    """

    predicted: str
    scores: dict[str, Fraction]
    recalled: Pattern
    runs: int = 1
    timings_ns: tuple[int, ...] = ()

    def ranked(self) -> list[tuple[str, Fraction]]:
        """Labels best-first; ties broken by ascending label."""
        return sorted(self.scores.items(), key=lambda kv: (-kv[1], kv[0]))

    def same_outcome(self, other: "RecognitionResult") -> bool:
        """True when the non-timing payload is identical."""
        return (
            self.predicted == other.predicted
            and self.scores == other.scores
            and self.recalled == other.recalled
        )


def build_model(entries, mode: str = "superposed") -> RecognizerModel:
    """Validate the alphabet and precompute what the mode needs.

    Superposed mode builds the shared weight matrix now; literal mode trains
    per query, so it only keeps the entries.
    """
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    entries = tuple(entries)
    if not entries:
        raise ValueError("cannot build a model from an empty alphabet")
    n = entries[0].pattern.n
    seen: set[str] = set()
    for e in entries:
        if e.pattern.n != n:
            raise ValueError(f"dimension mismatch: label {e.label!r} has n={e.pattern.n}, expected {n}")
        if e.label in seen:
            raise ValueError(f"duplicate label {e.label!r}")
        seen.add(e.label)
    weights = store_patterns([e.pattern for e in entries]) if mode == "superposed" else None
    targets = np.stack([e.pattern.cells for e in entries])
    targets.setflags(write=False)
    return RecognizerModel(entries=entries, mode=mode, weights=weights, _targets=targets)


def _argmax_label(scores: dict[str, Fraction]) -> str:
    best = max(scores.values())
    return min(label for label, s in scores.items() if s == best)


def recognize(model: RecognizerModel, key: Pattern, plan: ExecPlan | None = None) -> RecognitionResult:
    """Rank ``key`` against every stored glyph; deterministic.

    With ``plan`` the kernels run on the data-parallel path, which is
    bit-identical to the serial one, so results never depend on thread count
    or chunk size.
    """
    if key.n != model.n:
        raise ValueError(f"dimension mismatch: model has n={model.n}, key has n={key.n}")

    if model.mode == "superposed":
        activations = par_net_input(model.weights, key, plan) if plan else net_input(model.weights, key)
        recalled = threshold(activations)
        # One vectorized agreement count over the stacked alphabet; equal to
        # match_score(recalled, target) per label, integer arithmetic both ways.
        agree = np.count_nonzero(model._targets == recalled.cells, axis=1)
        scores = {e.label: Fraction(100 * int(c), model.n) for e, c in zip(model.entries, agree)}
        predicted = _argmax_label(scores)
        return RecognitionResult(predicted=predicted, scores=scores, recalled=recalled)

    # Literal mode: train on (key, target) and recall with the key, per label.
    scores = {}
    recalled_by_label = {}
    zero = zero_weights(model.n)
    for e in model.entries:
        if plan:
            w = par_train_pair(zero, key, e.pattern, plan)
            activations = par_net_input(w, key, plan)
        else:
            w = train_pair(zero, key, e.pattern)
            activations = net_input(w, key)
        out = threshold(activations)
        recalled_by_label[e.label] = out
        scores[e.label] = match_score(out, e.pattern)
    predicted = _argmax_label(scores)
    return RecognitionResult(predicted=predicted, scores=scores, recalled=recalled_by_label[predicted])


def repeat_recognize(
    model: RecognizerModel, key: Pattern, runs: int = 5, plan: ExecPlan | None = None
) -> RecognitionResult:
    """Run :func:`recognize` ``runs`` times; report mean scores and wall times.

    The algorithm is deterministic, so the mean per-label score equals any
    single run's score; the repetition exists to collect timing samples.
    """
    if runs < 1:
        raise ValueError(f"runs must be >= 1, got {runs}")
    per_run: list[RecognitionResult] = []
    timings: list[int] = []
    for _ in range(runs):
        t0 = time.perf_counter_ns()
        result = recognize(model, key, plan)
        timings.append(time.perf_counter_ns() - t0)
        per_run.append(result)
    mean_scores = {
        label: sum(r.scores[label] for r in per_run) / runs for label in per_run[0].scores
    }
    return RecognitionResult(
        predicted=_argmax_label(mean_scores),
        scores=mean_scores,
        recalled=per_run[-1].recalled,
        runs=runs,
        timings_ns=tuple(timings),
    )
