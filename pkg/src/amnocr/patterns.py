"""Bipolar patterns and their on-disk formats.

A :class:`Pattern` is a fixed-length vector over {+1, -1} with width/height
metadata, the unit every kernel in this package consumes. This module covers
the conversions around it: binarizing decoded pixel grids, the AMNPAT v1
text format, store manifests, and deterministic synthetic noise.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .bmp import PixelGrid, decode_bmp
from .errors import AmnError, ManifestError, PatternFormatError

__all__ = [
    "Pattern",
    "BinarizePolicy",
    "LabeledPattern",
    "pixels_to_pattern",
    "write_pattern_text",
    "read_pattern_text",
    "load_pattern_file",
    "load_manifest",
    "flip_noise",
]

AMNPAT_MAGIC = "AMNPAT"
AMNPAT_VERSION = "1"


@dataclass(frozen=True, eq=False)
class Pattern:
    """Row-major bipolar vector: every cell is exactly +1 or -1."""

    width: int
    height: int
    cells: np.ndarray

    def __post_init__(self):
        if self.width < 1 or self.height < 1:
            raise ValueError(f"pattern dimensions must be >= 1, got {self.width}x{self.height}")
        cells = np.asarray(self.cells, dtype=np.int8)
        if cells.ndim != 1 or cells.size != self.width * self.height:
            raise ValueError(
                f"expected {self.width * self.height} cells for a "
                f"{self.width}x{self.height} pattern, got {cells.size}"
            )
        if not np.all(np.abs(cells) == 1):
            raise ValueError("pattern cells must all be +1 or -1")
        cells = cells.copy()
        cells.setflags(write=False)
        object.__setattr__(self, "cells", cells)

    @property
    def n(self) -> int:
        return self.width * self.height

    def rows(self) -> np.ndarray:
        """The cells as a (height, width) view."""
        return self.cells.reshape(self.height, self.width)

    def __eq__(self, other):
        if not isinstance(other, Pattern):
            return NotImplemented
        return (
            self.width == other.width
            and self.height == other.height
            and np.array_equal(self.cells, other.cells)
        )

    def __repr__(self):
        return f"Pattern({self.width}x{self.height})"


@dataclass(frozen=True)
class BinarizePolicy:
    """How pixel intensities map to bipolar cells.

    With the defaults, ink pixels (intensity below 128) become +1 and the
    light background becomes -1. Set ``foreground_is_dark=False`` for
    light-on-dark sources.
    """

    threshold: int = 128
    foreground_is_dark: bool = True

    def __post_init__(self):
        if not 0 <= self.threshold <= 255:
            raise ValueError(f"threshold must lie in [0, 255], got {self.threshold}")


@dataclass(frozen=True)
class LabeledPattern:
    """A glyph identifier paired with its stored pattern. Labels are case-sensitive."""

    label: str
    pattern: Pattern

    def __post_init__(self):
        if not self.label:
            raise ValueError("label must be nonempty")


def pixels_to_pattern(grid: PixelGrid, policy: BinarizePolicy | None = None) -> Pattern:
    """Binarize a pixel grid into a bipolar pattern under ``policy``."""
    policy = policy or BinarizePolicy()
    dark = np.asarray(grid.values, dtype=np.int64) < policy.threshold
    foreground = dark if policy.foreground_is_dark else ~dark
    cells = np.where(foreground, 1, -1).astype(np.int8)
    return Pattern(width=grid.width, height=grid.height, cells=cells)


def write_pattern_text(pattern: Pattern, label: str) -> str:
    """Serialize to AMNPAT v1 text.

    Line 1 is ``AMNPAT 1 <width> <height> <label>``, followed by one line per
    pattern row of space-separated ``1``/``-1`` tokens. Newline-terminated,
    no trailing spaces.
    """
    if not label:
        raise ValueError("label must be nonempty")
    if "\n" in label or "\r" in label:
        raise ValueError("label must not contain newlines")
    lines = [f"{AMNPAT_MAGIC} {AMNPAT_VERSION} {pattern.width} {pattern.height} {label}"]
    for row in pattern.rows():
        lines.append(" ".join(str(int(c)) for c in row))
    return "\n".join(lines) + "\n"


def read_pattern_text(text: str) -> tuple[Pattern, str]:
    """Parse AMNPAT v1 text; exact inverse of :func:`write_pattern_text`."""
    lines = text.splitlines()
    if not lines:
        raise PatternFormatError("empty pattern text")
    header = lines[0].split(" ", 4)
    if header[0] != AMNPAT_MAGIC:
        raise PatternFormatError(f"bad magic {header[0]!r}, expected {AMNPAT_MAGIC!r}")
    if len(header) < 5:
        raise PatternFormatError(f"malformed header line {lines[0]!r}")
    if header[1] != AMNPAT_VERSION:
        raise PatternFormatError(f"unsupported format version {header[1]!r}")
    try:
        width, height = int(header[2]), int(header[3])
    except ValueError:
        raise PatternFormatError(f"non-integer dimensions in header {lines[0]!r}") from None
    label = header[4]
    if width < 1 or height < 1 or not label:
        raise PatternFormatError(f"malformed header line {lines[0]!r}")

    body = lines[1:]
    if sum(1 for line in body if line.strip()) != height:
        raise PatternFormatError(
            f"row count mismatch: header says {height}, "
            f"found {sum(1 for line in body if line.strip())} rows"
        )
    cells = np.empty(width * height, dtype=np.int8)
    for r, line in enumerate(body[:height]):
        tokens = line.split(" ")
        if len(tokens) != width:
            raise PatternFormatError(
                f"column count mismatch at row {r}: expected {width} tokens, got {len(tokens)}"
            )
        for c, token in enumerate(tokens):
            if token == "1":
                cells[r * width + c] = 1
            elif token == "-1":
                cells[r * width + c] = -1
            else:
                raise PatternFormatError(f"invalid token {token!r} at row {r} (must be 1 or -1)")
    return Pattern(width=width, height=height, cells=cells), label


def load_pattern_file(path: str | Path, policy: BinarizePolicy | None = None) -> Pattern:
    """Load one glyph file, sniffing BMP ('BM') vs AMNPAT content.

    BMP files are decoded and binarized with ``policy``; AMNPAT files are
    already bipolar (their embedded label is ignored here).
    """
    path = Path(path)
    data = path.read_bytes()
    if data.startswith(b"BM"):
        return pixels_to_pattern(decode_bmp(data), policy or BinarizePolicy())
    if data.startswith(AMNPAT_MAGIC.encode()):
        pattern, _ = read_pattern_text(data.decode("utf-8"))
        return pattern
    raise AmnError(f"{path}: neither a BMP nor an AMNPAT file")


def load_manifest(path: str | Path, policy: BinarizePolicy | None = None) -> list[LabeledPattern]:
    """Load a ``label,path`` CSV manifest into labeled patterns.

    Relative entry paths resolve against the manifest's directory. BMP
    entries are decoded and binarized with ``policy``; AMNPAT entries are
    read as-is (the manifest label wins over the embedded one). All patterns
    must share one width x height.
    """
    policy = policy or BinarizePolicy()
    path = Path(path)
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise ManifestError(f"{path}: empty manifest") from None
        if header != ["label", "path"]:
            raise ManifestError(f"{path}: bad header {header!r}, expected ['label', 'path']")
        rows = [(reader.line_num, row) for row in reader if row]

    if not rows:
        raise ManifestError(f"{path}: empty store (manifest has a header but no rows)")

    entries: list[LabeledPattern] = []
    seen: set[str] = set()
    for line_num, row in rows:
        if len(row) != 2 or not row[0]:
            raise ManifestError(f"{path}:{line_num}: expected 'label,path', got {row!r}")
        label, entry = row
        if label in seen:
            raise ManifestError(f"{path}:{line_num}: duplicate label {label!r}")
        seen.add(label)
        entry_path = Path(entry)
        if not entry_path.is_absolute():
            entry_path = path.parent / entry_path
        try:
            pattern = load_pattern_file(entry_path, policy)
        except OSError as exc:
            raise ManifestError(f"{path}:{line_num}: cannot read {entry_path}: {exc}") from exc
        if entries and (pattern.width, pattern.height) != (
            entries[0].pattern.width,
            entries[0].pattern.height,
        ):
            raise ManifestError(
                f"{path}:{line_num}: dimension mismatch for label {label!r}: "
                f"{pattern.width}x{pattern.height} != "
                f"{entries[0].pattern.width}x{entries[0].pattern.height}"
            )
        entries.append(LabeledPattern(label=label, pattern=pattern))
    return entries


def flip_noise(pattern: Pattern, rate: float, seed: int) -> Pattern:
    """Flip the sign of exactly ``round(rate * n)`` distinct cells.

    The flipped indices are the first ``round(rate * n)`` entries of a seeded
    pseudo-random permutation of ``0..n``, so the same seed and inputs always
    give the same output. The flip count uses Python ``round`` semantics
    (ties at exact halves go to the even count).
    """
    if not 0.0 <= rate <= 1.0:
        raise ValueError(f"flip rate must lie in [0, 1], got {rate}")
    flips = round(rate * pattern.n)
    rng = np.random.default_rng(seed)
    indices = rng.permutation(pattern.n)[:flips]
    cells = pattern.cells.copy()
    cells[indices] = -cells[indices]
    return Pattern(width=pattern.width, height=pattern.height, cells=cells)
