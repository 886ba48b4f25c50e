"""From image bytes to bipolar pattern to text file and back, losslessly.

Builds a small 4-bit BMP in memory (no files needed), decodes it with the
native decoder, binarizes it, and round-trips the result through the
AMNPAT text format.
"""

import struct

from amnocr import decode_bmp, pixels_to_pattern, read_pattern_text, write_pattern_text

# A 7x9 letter "T" as palette indices: 0 is black ink, 15 is white paper.
GLYPH = [
    "#######",
    "#######",
    "..###..",
    "..###..",
    "..###..",
    "..###..",
    "..###..",
    "..###..",
    "..###..",
]
rows = [[0 if ch == "#" else 15 for ch in line] for line in GLYPH]


def tiny_bmp_4bit(index_rows):
    """Minimal uncompressed 4-bit BMP with a grayscale palette."""
    height, width = len(index_rows), len(index_rows[0])
    palette = b"".join(bytes((17 * i, 17 * i, 17 * i, 0)) for i in range(16))
    pixel_data = bytearray()
    for row in reversed(index_rows):  # bottom-up storage, the common layout
        packed = bytearray()
        for i in range(0, width, 2):
            hi = row[i] << 4
            lo = row[i + 1] if i + 1 < width else 0
            packed.append(hi | lo)
        while len(packed) % 4:
            packed.append(0)
        pixel_data += packed
    offset = 14 + 40 + len(palette)
    header = struct.pack("<2sIHHI", b"BM", offset + len(pixel_data), 0, 0, offset)
    info = struct.pack("<IiiHHIIiiII", 40, width, height, 1, 4, 0, len(pixel_data), 0, 0, 0, 0)
    return header + info + palette + bytes(pixel_data)


blob = tiny_bmp_4bit(rows)
print(f"Encoded a {len(blob)}-byte BMP in memory.")

grid = decode_bmp(blob)
print(f"Decoded: {grid.width}x{grid.height}, intensities 0..255, top row first.")
print("Row 0 intensities:", grid.values[: grid.width].tolist())

pattern = pixels_to_pattern(grid)  # default: dark ink -> +1, threshold 128
print("\nBinarized to a bipolar pattern (+1 ink shown as '#'):")
for row in pattern.rows():
    print("  ", "".join("#" if c == 1 else "." for c in row))

text = write_pattern_text(pattern, "T")
print("\nAMNPAT v1 serialization (first two lines):")
for line in text.splitlines()[:2]:
    print("  ", line)

back, label = read_pattern_text(text)
print(f"\nRound trip: label {label!r}, identical pattern: {back == pattern}")
