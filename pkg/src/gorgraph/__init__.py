"""Exact well-covered / W2 / Cohen-Macaulay / Gorenstein classification of
small graphs, with closed-form rules for circulant and SQC graphs."""

from .graph import (
    CirculantSpec,
    Graph,
    SizeCapError,
    circulant,
    closed_neighborhood,
    complement,
    complete_graph,
    components,
    cycle_graph,
    degree_sequence,
    disjoint_union,
    empty_graph,
    get_size_cap,
    induced_subgraph,
    is_complement_of_cycle,
    is_cycle_graph,
    is_triangle_free,
    mask_of,
    members,
    path_graph,
    private_subgraph,
    set_size_cap,
    size_cap,
)
from .indsets import (
    IndependenceSummary,
    W2Certificate,
    enumerate_independent_sets,
    euler_condition,
    independence_summary,
    is_w2,
    is_well_covered,
    maximum_independent_sets,
    w2_lemma_witness,
)
from .homology import (
    ALL,
    HomologyProfile,
    SimplicialComplex,
    betti_over,
    boundary_matrices,
    homology,
    independence_complex,
    is_cm,
    link,
)
from .gorenstein import Verdict, is_gorenstein, link_cycle_condition
from .circulants import (
    QuarticVerdict,
    classify_cn_1_to_d,
    classify_cubic,
    classify_quartic,
    gcd_decompose,
    normalize_unit,
    survey,
)
from .sqc import SqcPartition, find_sqc_partition, sqc_gorenstein

__version__ = "0.1.0"
