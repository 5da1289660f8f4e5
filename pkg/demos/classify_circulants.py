#!/usr/bin/env python3
# Classify a handful of circulant graphs and show which clause decides each verdict.
from gorgraph import circulant, is_gorenstein, is_w2

for n, conns in [(13, {1, 5}), (7, {1, 2}), (8, {1, 2}), (14, {1, 4}), (6, {3})]:
    g = circulant(n, conns)
    v = is_gorenstein(g)
    print(f"C_{n}{tuple(sorted(conns))}: gorenstein={v.gorenstein} w2={is_w2(g).verdict}")
    for c in v.components:
        if c.witness:
            print("   fails at", c.witness)
        print("   path:", c.path, "shape:", c.shape)

# C_8(1,2) is W2 but the Euler clause fails, so it is not Gorenstein
print(is_gorenstein(circulant(8, {1, 2})).to_json(indent=2)[:400], "...")
