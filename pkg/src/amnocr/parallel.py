"""Deterministic data-parallel counterparts of the reference kernels.

The index range 0..n is split into fixed-size blocks handed round-robin to a
worker team (static chunked scheduling). Each output cell has exactly one
writer ("owner computes"): the weight update parallelizes over rows, the net
input over output nodes with each node's full sum done locally. Combined
with integer arithmetic this makes the parallel results bit-identical to the
serial kernels, not merely close.

Worker teams are plain threads created per call and joined before the call
returns; inputs must not be mutated while a call is in flight. The heavy
lifting happens inside numpy, which releases the GIL, so teams scale on
multi-core hosts. ``AMN_THREADS`` overrides the default team size.
"""

from __future__ import annotations

import math
import os
import threading
from dataclasses import dataclass

import numpy as np

from .core import ActivationVector, WeightMatrix, _check_square
from .patterns import Pattern

__all__ = ["ExecPlan", "IndexAssignment", "partition_static", "par_train_pair", "par_net_input"]

THREADS_ENV_VAR = "AMN_THREADS"


def _default_threads() -> int:
    raw = os.environ.get(THREADS_ENV_VAR)
    if raw is not None:
        try:
            value = int(raw)
        except ValueError:
            raise ValueError(f"{THREADS_ENV_VAR} must be a positive integer, got {raw!r}") from None
        if value < 1:
            raise ValueError(f"{THREADS_ENV_VAR} must be a positive integer, got {raw!r}")
        return value
    return os.cpu_count() or 1


@dataclass(frozen=True)
class ExecPlan:
    """Worker count and block size for static chunked scheduling.

    ``threads`` defaults to ``AMN_THREADS`` or the hardware thread count.
    ``chunk=None`` means one block per worker, ceil(n / threads), resolved
    when the index range is known.
    """

    threads: int | None = None
    chunk: int | None = None

    def __post_init__(self):
        if self.threads is None:
            object.__setattr__(self, "threads", _default_threads())
        if self.threads < 1:
            raise ValueError(f"threads must be >= 1, got {self.threads}")
        if self.chunk is not None and self.chunk < 1:
            raise ValueError(f"chunk must be >= 1, got {self.chunk}")

    def chunk_for(self, n: int) -> int:
        return self.chunk if self.chunk is not None else math.ceil(n / self.threads)


@dataclass(frozen=True)
class IndexAssignment:
    """Half-open index ranges per worker; a disjoint exact cover of 0..n."""

    n: int
    ranges: tuple[tuple[tuple[int, int], ...], ...]


def partition_static(n: int, plan: ExecPlan) -> IndexAssignment:
    """Split 0..n into consecutive ``chunk``-sized blocks, round-robin.

    Block b covers [b*chunk, min((b+1)*chunk, n)) and goes to worker
    b mod threads; the last block may be short.
    """
    if n < 1:
        raise ValueError(f"index count must be >= 1, got {n}")
    chunk = plan.chunk_for(n)
    per_worker: list[list[tuple[int, int]]] = [[] for _ in range(plan.threads)]
    for b, start in enumerate(range(0, n, chunk)):
        per_worker[b % plan.threads].append((start, min(start + chunk, n)))
    return IndexAssignment(n=n, ranges=tuple(tuple(r) for r in per_worker))


def _run_team(workers) -> None:
    """Start one thread per worker callable, join all, re-raise any failure."""
    failures: list[BaseException] = []

    def guarded(fn):
        try:
            fn()
        except BaseException as exc:  # propagated after join
            failures.append(exc)

    team = [threading.Thread(target=guarded, args=(fn,)) for fn in workers]
    for t in team:
        t.start()
    for t in team:
        t.join()
    if failures:
        raise failures[0]


def par_train_pair(
    w: WeightMatrix, input_pattern: Pattern, target_pattern: Pattern, plan: ExecPlan
) -> WeightMatrix:
    """Parallel Hebbian update; bit-identical to :func:`amnocr.core.train_pair`.

    Parallelized over the row index: a worker updates only the weight rows in
    its assigned ranges, so no two workers ever touch the same cell.
    """
    w = _check_square(w)
    n = w.shape[0]
    if input_pattern.n != n or target_pattern.n != n:
        raise ValueError(
            f"dimension mismatch: weights are {n}x{n}, input has n={input_pattern.n}, "
            f"target has n={target_pattern.n}"
        )
    out = np.array(w, dtype=np.int64)
    inp = input_pattern.cells.astype(np.int64)
    tgt = target_pattern.cells.astype(np.int64)
    assignment = partition_static(n, plan)

    def make_worker(ranges):
        def work():
            for start, end in ranges:
                out[start:end, :] += np.outer(inp[start:end], tgt)

        return work

    _run_team([make_worker(r) for r in assignment.ranges])
    out.setflags(write=False)
    return out


def par_net_input(w: WeightMatrix, key: Pattern, plan: ExecPlan) -> ActivationVector:
    """Parallel net input; bit-identical to :func:`amnocr.core.net_input`.

    Parallelized over the output node index: each a[j] is computed entirely
    by the worker that owns j (full sum over inputs done locally), so there
    is no cross-worker accumulation and no reduction ordering to worry about.
    """
    w = _check_square(w)
    n = w.shape[0]
    if key.n != n:
        raise ValueError(f"dimension mismatch: weights are {n}x{n}, key has n={key.n}")
    w64 = np.asarray(w, dtype=np.int64)
    key64 = key.cells.astype(np.int64)
    a = np.zeros(n, dtype=np.int64)
    assignment = partition_static(n, plan)

    def make_worker(ranges):
        def work():
            for start, end in ranges:
                a[start:end] = key64 @ w64[:, start:end]

        return work

    _run_team([make_worker(r) for r in assignment.ranges])
    return ActivationVector(width=key.width, height=key.height, a=a)
