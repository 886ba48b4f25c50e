"""The worked 4-cell example: store two patterns, recall clean and noisy keys.

Walks the arithmetic end to end so you can check every number by hand:
outer-product storage, signed net inputs, the strict threshold, and the
agreement percentage that recognition ranks by.
"""

from amnocr import Pattern, format_pct, match_score, net_input, recall, store_patterns

A = Pattern(4, 1, [1, -1, 1, -1])
B = Pattern(4, 1, [1, 1, -1, -1])

print("Two stored patterns (n=4):")
print("  A =", A.cells.tolist())
print("  B =", B.cells.tolist())
print()

w = store_patterns([A, B])
print("Superposed weights (sum of the two self outer products):")
for row in w.tolist():
    print("  ", row)
print("Diagonal equals the pattern count; the matrix is symmetric.")
print()

activations = net_input(w, A)
print("Probing with A itself. Net input per output node:", activations.a.tolist())
print("Strictly positive entries become +1, everything else -1:")
print("  recalled =", recall(w, A).cells.tolist(), " == A:", recall(w, A) == A)
print()

key = Pattern(4, 1, [1, -1, 1, 1])
print("Now corrupt A's last cell:", key.cells.tolist())
print("Net input:", net_input(w, key).a.tolist())
print("Note the zeros: a zero net input falls to -1 under the strict rule.")
out = recall(w, key)
print("  recalled =", out.cells.tolist())
print(
    "  agreement with A:",
    format_pct(match_score(out, A)),
    "percent (3 of 4 cells match)",
)
print()
print("Storage is additive, so training (A, A) and then (A, -A) cancels:")
from amnocr import train_pair, zero_weights  # noqa: E402

nA = Pattern(4, 1, (-A.cells).tolist())
w2 = train_pair(train_pair(zero_weights(4), A, A), A, nA)
print("  weights after the pair of updates:", w2.tolist())
