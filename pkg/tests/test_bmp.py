"""Decoder tests over hand-constructed fixture bytes (see tests/bmpbytes.py)."""

import numpy as np
import pytest

from amnocr import (
    BmpBitDepthError,
    BmpCompressionError,
    BmpHeaderError,
    BmpPaletteError,
    BmpTruncatedError,
    PixelGrid,
    decode_bmp,
)
from bmpbytes import glyph_index_rows, grayscale_palette, make_bmp


def test_glyph_geometry_4bit():
    rows = glyph_index_rows(31, 39, seed=1)
    grid = decode_bmp(make_bmp(rows, depth=4))
    assert (grid.width, grid.height) == (31, 39)
    assert grid.values.size == 1209


def test_white_identity_24bit():
    grid = decode_bmp(make_bmp([[(255, 255, 255)]], depth=24))
    assert (grid.width, grid.height) == (1, 1)
    assert grid.values.tolist() == [255]


def test_8bit_grayscale_palette_2x2():
    # Checkerboard indices through the identity grayscale palette.
    grid = decode_bmp(make_bmp([[0, 255], [255, 0]], depth=8))
    assert grid.values.tolist() == [0, 255, 255, 0]


def test_rows_come_out_top_down():
    rows = [[0, 0, 0], [255, 255, 255]]  # black row above white row
    grid = decode_bmp(make_bmp(rows, depth=8))
    assert grid.values.tolist() == [0, 0, 0, 255, 255, 255]


@pytest.mark.parametrize("depth", [1, 4, 8, 24])
def test_bottom_up_equals_top_down(depth):
    if depth == 24:
        rng = np.random.default_rng(depth)
        rows = [
            [tuple(int(v) for v in rng.integers(0, 256, 3)) for _ in range(5)] for _ in range(4)
        ]
    else:
        rng = np.random.default_rng(depth)
        rows = rng.integers(0, 1 << depth, size=(4, 5)).tolist()
    up = decode_bmp(make_bmp(rows, depth, bottom_up=True))
    down = decode_bmp(make_bmp(rows, depth, bottom_up=False))
    assert up == down


def test_1bit_packing_msb_first():
    rows = [[1, 0, 1, 1, 0, 0, 1, 0, 1]]  # 9 pixels: crosses a byte boundary
    grid = decode_bmp(make_bmp(rows, depth=1))
    assert grid.values.tolist() == [255, 0, 255, 255, 0, 0, 255, 0, 255]


def test_4bit_odd_width_ignores_pad_nibble():
    rows = [[15, 0, 15], [0, 15, 0]]
    grid = decode_bmp(make_bmp(rows, depth=4))
    assert grid.values.tolist() == [255, 0, 255, 0, 255, 0]


def test_24bit_luma_weights():
    # Pure channels pin the 299/587/114 integer weighting (half rounds up).
    grid = decode_bmp(make_bmp([[(255, 0, 0), (0, 255, 0), (0, 0, 255)]], depth=24))
    assert grid.values.tolist() == [76, 150, 29]


def test_palette_respected_not_just_indices():
    palette = [(0, 0, 0)] * 16
    palette[3] = (255, 255, 255)
    grid = decode_bmp(make_bmp([[3, 0]], depth=4, palette=palette))
    assert grid.values.tolist() == [255, 0]


def test_row_padding_dropped():
    # Width 2 at 8 bpp leaves 2 pad bytes per row; values must be unaffected.
    grid = decode_bmp(make_bmp([[7, 9], [11, 13]], depth=8))
    assert grid.values.tolist() == [7, 9, 11, 13]


def test_colors_used_header_field():
    grid = decode_bmp(make_bmp([[3, 1]], depth=4, palette=grayscale_palette(4)[:8], colors_used=8))
    assert grid.values.tolist() == [51, 17]


def test_bad_magic():
    data = bytearray(make_bmp([[0]], depth=8))
    data[:2] = b"XX"
    with pytest.raises(BmpHeaderError, match="magic"):
        decode_bmp(bytes(data))


def test_short_file_is_header_error():
    with pytest.raises(BmpHeaderError):
        decode_bmp(b"BM\x00")


def test_unsupported_compression():
    data = bytearray(make_bmp([[0]], depth=8))
    data[30] = 1  # BI_RLE8
    with pytest.raises(BmpCompressionError, match="compression"):
        decode_bmp(bytes(data))


def test_unsupported_bit_depth():
    data = bytearray(make_bmp([[(1, 2, 3)]], depth=24))
    data[28] = 16
    with pytest.raises(BmpBitDepthError, match="bit depth"):
        decode_bmp(bytes(data))


def test_palette_index_out_of_range():
    blob = make_bmp([[12, 1]], depth=4, palette=grayscale_palette(4)[:8], colors_used=8)
    with pytest.raises(BmpPaletteError, match="palette index 12"):
        decode_bmp(blob)


def test_truncated_pixel_data():
    blob = make_bmp(glyph_index_rows(8, 8, seed=2), depth=4, truncate=5)
    with pytest.raises(BmpTruncatedError, match="pixel data"):
        decode_bmp(blob)


def test_oversized_palette_declaration():
    blob = make_bmp([[0]], depth=4, colors_used=300)
    with pytest.raises(BmpHeaderError, match="palette"):
        decode_bmp(blob)


def test_pixel_grid_validation():
    with pytest.raises(ValueError):
        PixelGrid(2, 2, [0, 1, 2])  # wrong length
    with pytest.raises(ValueError):
        PixelGrid(1, 1, [300])  # out of range
