"""Shared test utilities: pattern constructors and host introspection."""

import os

import numpy as np

from amnocr import LabeledPattern, Pattern


def bipolar(cells, width=None, height=None):
    """Pattern from a flat cell list; defaults to a single row."""
    if width is None:
        width, height = len(cells), 1
    return Pattern(width=width, height=height, cells=cells)


def random_pattern(rng, n, width=None, height=None):
    cells = rng.choice(np.array([-1, 1], dtype=np.int8), size=n)
    if width is None:
        width, height = n, 1
    return Pattern(width=width, height=height, cells=cells)


def hadamard_rows(order):
    """Rows of the +-1 Sylvester Hadamard matrix; mutually orthogonal."""
    h = np.array([[1]], dtype=np.int8)
    while h.shape[0] < order:
        h = np.block([[h, h], [h, -h]]).astype(np.int8)
    assert h.shape[0] == order, f"order {order} is not a power of two"
    return [Pattern(width=order, height=1, cells=row) for row in h]


def labeled(patterns, labels=None):
    if labels is None:
        labels = [chr(ord("a") + i) for i in range(len(patterns))]
    return [LabeledPattern(lbl, p) for lbl, p in zip(labels, patterns)]


def physical_cores():
    """Physical core count from /proc/cpuinfo, else the logical count."""
    try:
        pairs = set()
        cur = {}
        with open("/proc/cpuinfo") as fh:
            for line in fh:
                if ":" in line:
                    key, val = (part.strip() for part in line.split(":", 1))
                    cur[key] = val
                elif not line.strip():
                    if "physical id" in cur and "core id" in cur:
                        pairs.add((cur["physical id"], cur["core id"]))
                    cur = {}
        if "physical id" in cur and "core id" in cur:
            pairs.add((cur["physical id"], cur["core id"]))
        if pairs:
            return len(pairs)
    except OSError:
        pass
    return os.cpu_count() or 1
