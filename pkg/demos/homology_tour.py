#!/usr/bin/env python3
# Reduced homology of a few complexes, including the projective plane where
# the answer depends on the field.
import numpy as np

from gorgraph import SimplicialComplex, cycle_graph, homology, independence_complex
from gorgraph.homology import betti_over, boundary_matrices

pent = independence_complex(cycle_graph(5))
print("pentagon facets:", [bin(f) for f in pent.facets])
print("pentagon betti:", homology(pent).betti)

circle = SimplicialComplex(3, [0b011, 0b101, 0b110])
for d, m in enumerate(boundary_matrices(circle)):
    print(f"boundary {d}:\n{m}")
    print("rank", np.linalg.matrix_rank(m) if m.size else 0)

rp2 = SimplicialComplex(6, [(0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5), (0, 5, 1),
                            (1, 2, 4), (2, 3, 5), (3, 4, 1), (4, 5, 2), (5, 1, 3)])
h = homology(rp2)
print("RP2 integral torsion in dim 1:", h.torsion_at(1))
for p in (0, 2, 3):
    print(f"RP2 betti over char {p}:", betti_over(h, p))
