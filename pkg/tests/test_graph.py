import pytest
from hypothesis import given, settings, strategies as st

from gorgraph.graph import (
    CirculantSpec,
    Graph,
    SizeCapError,
    check_cap,
    circulant,
    closed_neighborhood,
    complement,
    complete_graph,
    components,
    cycle_graph,
    degree_sequence,
    disjoint_union,
    empty_graph,
    induced_subgraph,
    is_complement_of_cycle,
    is_cycle_graph,
    is_triangle_free,
    mask_of,
    members,
    path_graph,
    private_subgraph,
    size_cap,
)


@st.composite
def graphs(draw, max_n=9):
    n = draw(st.integers(0, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [p for p, keep in zip(pairs, chosen) if keep])


def test_graph_rejects_bad_adjacency():
    with pytest.raises(ValueError):
        Graph(2, (0b10, 0))          # asymmetric
    with pytest.raises(ValueError):
        Graph(1, (0b1,))             # loop
    with pytest.raises(ValueError):
        Graph(2, (0b100, 0))         # out of range
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(0, 3)])


def test_circulant_examples():
    assert circulant(5, {1}) == cycle_graph(5)
    assert circulant(5, {1, 2}) == complete_graph(5)
    assert circulant(5, {1, 2}).num_edges == 10
    m = circulant(6, {3})
    assert sorted(m.edges()) == [(0, 3), (1, 4), (2, 5)]
    assert degree_sequence(circulant(7, {1, 2})) == [4] * 7


def test_circulant_rejects_out_of_range():
    with pytest.raises(ValueError):
        circulant(6, {4})
    with pytest.raises(ValueError):
        circulant(6, {0})
    with pytest.raises(ValueError):
        CirculantSpec.parse("6:1,1")


def test_circulant_spec_parse():
    spec = CirculantSpec.parse("13:1,5")
    assert spec.n == 13 and spec.connections == {1, 5}
    assert str(spec) == "13:1,5"
    assert spec.graph() == circulant(13, {1, 5})


@pytest.mark.parametrize("n", range(3, 14))
def test_circulants_regular_and_vertex_transitive(n):
    for s in range(1, n // 2 + 1):
        for conns in ({s}, set(range(1, s + 1))):
            g = circulant(n, conns)
            if n > 2 * max(conns):
                assert degree_sequence(g) == [2 * len(conns)] * n
            edges = {frozenset(e) for e in g.edges()}
            for k in range(n):
                assert {frozenset(((u + k) % n, (v + k) % n)) for u, v in edges} == edges


def test_complement():
    assert complement(complete_graph(5)) == empty_graph(5)
    assert complement(circulant(7, {1, 2})) == circulant(7, {3})
    assert is_cycle_graph(circulant(7, {3})) == 7


@given(graphs())
def test_complement_involution(g):
    assert complement(complement(g)) == g


def test_closed_neighborhood():
    c5 = cycle_graph(5)
    assert closed_neighborhood(c5, 0) == 0
    assert closed_neighborhood(c5, {0}) == mask_of({4, 0, 1})
    assert closed_neighborhood(complete_graph(5), {2}) == 0b11111


def test_private_subgraph_examples():
    c5 = cycle_graph(5)
    assert private_subgraph(c5, 0) == c5
    gf = private_subgraph(c5, {0})
    assert gf.n == 2 and gf.num_edges == 1 and gf.labels == (2, 3)
    g = circulant(7, {1, 2})
    assert closed_neighborhood(g, {0}) == mask_of({5, 6, 0, 1, 2})
    gf = private_subgraph(g, {0})
    assert gf.labels == (3, 4) and gf.num_edges == 1


@given(graphs(), st.data())
def test_private_subgraph_is_induced_on_complement_of_closed_nbhd(g, data):
    f = data.draw(st.integers(0, g.full_mask))
    left = private_subgraph(g, f)
    right = induced_subgraph(g, g.full_mask & ~closed_neighborhood(g, f))
    assert left == right and left.labels == right.labels


def test_induced_subgraph():
    c5 = cycle_graph(5)
    assert induced_subgraph(c5, c5.full_mask) == c5
    assert induced_subgraph(c5, 0).n == 0
    p = induced_subgraph(c5, {0, 1, 2})
    assert p == path_graph(3)


def test_components():
    assert [members(c) for c in components(circulant(6, {3}))] == [[0, 3], [1, 4], [2, 5]]
    assert len(components(cycle_graph(6))) == 1
    assert [members(c) for c in components(empty_graph(4))] == [[0], [1], [2], [3]]


def test_cycle_recognition():
    assert is_cycle_graph(cycle_graph(5)) == 5
    assert is_cycle_graph(complete_graph(4)) is None
    assert is_cycle_graph(disjoint_union(cycle_graph(4), cycle_graph(4))) is None
    assert is_cycle_graph(complete_graph(3)) == 3


@given(graphs())
def test_cycle_length_matches_counts(g):
    k = is_cycle_graph(g)
    if k is not None:
        assert g.n == k == g.num_edges


def test_complement_of_cycle_recognition():
    assert is_complement_of_cycle(circulant(7, {1, 2})) == 7
    assert is_complement_of_cycle(circulant(6, {2, 3})) == 6
    assert is_complement_of_cycle(cycle_graph(5)) == 5
    assert is_complement_of_cycle(cycle_graph(6)) is None


def test_triangle_free():
    assert is_triangle_free(cycle_graph(5))
    assert not is_triangle_free(complete_graph(3))
    assert is_triangle_free(circulant(13, {2, 3}))


def test_degree_sequence():
    assert degree_sequence(complete_graph(2)) == [1, 1]
    assert degree_sequence(cycle_graph(5)) == [2] * 5
    assert degree_sequence(circulant(7, {1, 2})) == [4] * 7


def test_size_cap():
    g = empty_graph(30)
    with pytest.raises(SizeCapError):
        check_cap(g)
    with size_cap(40):
        check_cap(g)
