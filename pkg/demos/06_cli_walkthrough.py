"""The four CLI subcommands end to end in a throwaway workspace.

Generates a small glyph set as BMP files, ingests them to AMNPAT text,
builds a store manifest, and runs recognize, bench, and noise-sweep via
``python -m amnocr`` exactly as a shell user would.
"""

import struct
import subprocess
import sys
import tempfile
from pathlib import Path

GLYPHS = {
    "I": ["#####", "..#..", "..#..", "..#..", "#####"],
    "L": ["#....", "#....", "#....", "#....", "#####"],
    "T": ["#####", "..#..", "..#..", "..#..", "..#.."],
    "X": ["#...#", ".#.#.", "..#..", ".#.#.", "#...#"],
}


def bmp_4bit(art):
    rows = [[0 if ch == "#" else 15 for ch in line] for line in art]
    height, width = len(rows), len(rows[0])
    palette = b"".join(bytes((17 * i, 17 * i, 17 * i, 0)) for i in range(16))
    data = bytearray()
    for row in reversed(rows):
        packed = bytearray()
        for i in range(0, width, 2):
            packed.append((row[i] << 4) | (row[i + 1] if i + 1 < width else 0))
        while len(packed) % 4:
            packed.append(0)
        data += packed
    offset = 14 + 40 + len(palette)
    head = struct.pack("<2sIHHI", b"BM", offset + len(data), 0, 0, offset)
    info = struct.pack("<IiiHHIIiiII", 40, width, height, 1, 4, 0, len(data), 0, 0, 0, 0)
    return head + info + palette + bytes(data)


def run(*args):
    cmd = [sys.executable, "-m", "amnocr", *args]
    print(f"\n$ amnocr {' '.join(args)}")
    proc = subprocess.run(cmd, capture_output=True, text=True)
    for stream, prefix in ((proc.stdout, "  "), (proc.stderr, "  ! ")):
        for line in stream.splitlines():
            print(prefix + line)
    print(f"  (exit {proc.returncode})")
    return proc


work = Path(tempfile.mkdtemp())
bmp_dir = work / "glyphs"
bmp_dir.mkdir()
for name, art in GLYPHS.items():
    (bmp_dir / f"{name}.bmp").write_bytes(bmp_4bit(art))
print(f"Workspace: {work} with {len(GLYPHS)} glyph BMPs.")

run("ingest", str(bmp_dir), "--out", str(work / "patterns"))

manifest = work / "store.csv"
manifest.write_text(
    "label,path\n" + "".join(f"{n},patterns/{n}.amnpat\n" for n in GLYPHS),
    encoding="utf-8",
)
print(f"\nWrote manifest {manifest}")

run("recognize", "--store", str(manifest), "--key", str(bmp_dir / "T.bmp"))
run(
    "bench",
    "--store", str(manifest),
    "--keys", str(bmp_dir),
    "--runs", "3",
    "--out", str(work / "results"),
)
run(
    "noise-sweep",
    "--store", str(manifest),
    "--rates", "0,0.2,0.4",
    "--seed", "7",
    "--out", str(work / "sweep.csv"),
)

print("\nresults/report.csv:")
for line in (work / "results" / "report.csv").read_text(encoding="utf-8").splitlines():
    print("  ", line)
