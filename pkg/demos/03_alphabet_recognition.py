"""Recognition over a 52-glyph alphabet, clean and under synthetic noise.

Stores 52 synthetic glyphs (A-Z, a-z at the reference 31x39 geometry) in one
superposed weight matrix, then probes with progressively noisier keys. The
graded percentages come from cross-talk between stored patterns; with enough
noise the ranking starts confusing keys with other glyphs, the same failure
shape the 2012 study this protocol follows reported (a handwritten D landing
on the stored O, for instance).
"""

import numpy as np

from amnocr import LabeledPattern, Pattern, build_model, flip_noise, format_pct, recognize

WIDTH, HEIGHT = 31, 39
LABELS = [chr(c) for c in range(ord("A"), ord("Z") + 1)] + [
    chr(c) for c in range(ord("a"), ord("z") + 1)
]

rng = np.random.default_rng(20120901)
entries = [
    LabeledPattern(lbl, Pattern(WIDTH, HEIGHT, rng.choice([-1, 1], size=WIDTH * HEIGHT)))
    for lbl in LABELS
]
model = build_model(entries)
print(f"Stored {len(model.labels)} glyphs, n = {model.n} cells each.\n")

key = entries[9].pattern  # the stored "J"
result = recognize(model, key)
print("Clean key 'J': predicted", result.predicted, "with top ranks:")
for label, score in result.ranked()[:4]:
    print(f"   {label:>2}  {format_pct(score)}")

print("\nSame key with 20% of cells flipped:")
noisy = flip_noise(key, 0.20, seed=7)
result = recognize(model, noisy)
for label, score in result.ranked()[:4]:
    print(f"   {label:>2}  {format_pct(score)}")
print(
    "  (identical ranking: recall corrected the corrupted key back to the\n"
    "   stored glyph exactly, recalled == stored J:",
    result.recalled == key,
    ")",
)

print("\nAt 45% flipped the correction starts to break down:")
result = recognize(model, flip_noise(key, 0.45, seed=7))
for label, score in result.ranked()[:4]:
    print(f"   {label:>2}  {format_pct(score)}")

print("\nAccuracy over the whole alphabet at increasing flip rates:")
print("  rate   correct/52   mean best match   example confusions")
for rate in (0.0, 0.1, 0.2, 0.3, 0.4, 0.5):
    confusions = []
    correct = 0
    best = []
    for i, entry in enumerate(entries):
        res = recognize(model, flip_noise(entry.pattern, rate, seed=100 + i))
        best.append(res.scores[res.predicted])
        if res.predicted == entry.label:
            correct += 1
        elif len(confusions) < 3:
            confusions.append(f"{entry.label}->{res.predicted}")
    mean_best = sum(best) / len(best)
    print(
        f"  {rate:4.2f}   {correct:10d}   {format_pct(mean_best):>15}   "
        f"{' '.join(confusions) if confusions else '-'}"
    )
