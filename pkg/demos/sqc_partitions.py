#!/usr/bin/env python3
# Find SQC partitions and compare the closed-form verdict with the engine.
from gorgraph import Graph, complete_graph, cycle_graph, disjoint_union, path_graph
from gorgraph.gorenstein import is_gorenstein
from gorgraph.sqc import check_alpha, find_sqc_partition, sqc_gorenstein

c4_pendants = Graph.from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (1, 5)])
examples = {
    "2K2 + C5": disjoint_union(complete_graph(2), complete_graph(2), cycle_graph(5)),
    "P4": path_graph(4),
    "C4 with pendants": c4_pendants,
    "C7": cycle_graph(7),
}
for name, g in examples.items():
    part = find_sqc_partition(g)
    if part is None:
        print(name, "-> not SQC")
        continue
    print(name, "-> (m, t, r) =", part.counts, "alpha check:", check_alpha(g, part))
    print("   ", part.to_json())
    print("    sqc rule:", sqc_gorenstein(g), "engine:", is_gorenstein(g).gorenstein)
