import pytest
from hypothesis import given, settings

from gorgraph.graph import (
    circulant,
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    mask_of,
    path_graph,
)
from gorgraph.gorenstein import is_gorenstein
from gorgraph.sqc import (
    NotSQCError,
    SqcPartition,
    basic_five_cycles,
    basic_four_cycles,
    check_alpha,
    five_cycles,
    find_sqc_partition,
    simplicial_vertices,
    sqc_gorenstein,
)

from test_graph import graphs
from corpus import (
    bridged_double_c5,
    c4_with_opposite_pendants,
    c4_with_pendants,
    c5_with_chord,
    sqc_corpus,
)


def test_simplicial_vertices():
    assert simplicial_vertices(complete_graph(4)) == 0b1111
    assert simplicial_vertices(cycle_graph(5)) == 0
    assert simplicial_vertices(path_graph(4)) == mask_of({0, 3})


def test_basic_five_cycles():
    assert basic_five_cycles(cycle_graph(5)) == [(0, 1, 2, 3, 4)]
    assert five_cycles(c5_with_chord()) and basic_five_cycles(c5_with_chord()) == []
    assert len(basic_five_cycles(bridged_double_c5())) == 2


def _induced(g, cycle):
    m = mask_of(cycle)
    return sum((g.adj[v] & m).bit_count() for v in cycle) == 10


def test_basic_five_cycles_are_induced():
    for g in [circulant(11, {1, 2}), circulant(10, {1, 3}), bridged_double_c5(), c5_with_chord()]:
        assert all(_induced(g, c) for c in basic_five_cycles(g))


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=9))
def test_induced_and_plain_readings_agree(g):
    # a chord would join two cycle vertices of degree >= 3, so a basic 5-cycle
    # is always induced and both readings give the same SQC membership
    assert all(_induced(g, c) for c in basic_five_cycles(g))
    part = find_sqc_partition(g)
    if part is not None:
        assert all(_induced(g, c) for c in part.five_cycles)


def test_basic_four_cycles():
    g = cycle_graph(4)
    assert basic_four_cycles(g) == []
    assert basic_four_cycles(c4_with_opposite_pendants()) == []
    ((cyc, b),) = basic_four_cycles(c4_with_pendants())
    assert b == mask_of({2, 3}) and set(cyc) == {0, 1, 2, 3}
    assert basic_four_cycles(complete_graph(4)) == []
    ((_, b),) = basic_four_cycles(c5_with_chord())
    assert b == mask_of({3, 4})


def test_partition_examples():
    p = find_sqc_partition(cycle_graph(5))
    assert p.counts == (0, 1, 0)
    p = find_sqc_partition(complete_graph(2))
    assert p.counts == (1, 0, 0)
    p = find_sqc_partition(path_graph(4))
    assert p.simplices == [mask_of({0, 1}), mask_of({2, 3})]
    assert find_sqc_partition(cycle_graph(7)) is None
    assert find_sqc_partition(c4_with_opposite_pendants()) is None
    p = find_sqc_partition(c4_with_pendants())
    assert p.counts == (2, 0, 1)
    assert find_sqc_partition(empty_graph(0)).counts == (0, 0, 0)


def test_partition_json_round_trip():
    p = find_sqc_partition(disjoint_union(c4_with_pendants(), cycle_graph(5)))
    again = SqcPartition.from_dict(p.to_dict())
    assert again == p
    assert set(p.to_dict()) == {"simplices", "fiveCycles", "fourCycleBasics"}


def test_sqc_gorenstein_examples():
    assert sqc_gorenstein(disjoint_union(complete_graph(2), complete_graph(2), cycle_graph(5)))
    assert not sqc_gorenstein(path_graph(4))
    assert not sqc_gorenstein(bridged_double_c5())
    with pytest.raises(NotSQCError):
        sqc_gorenstein(cycle_graph(7))
    with pytest.raises(ValueError):
        sqc_gorenstein(disjoint_union(cycle_graph(5), complete_graph(1)))


@pytest.mark.parametrize("combo,g", sqc_corpus(max_parts=2), ids=lambda x: "+".join(x) if isinstance(x, tuple) else "")
def test_sqc_invariants_on_corpus(combo, g):
    part = find_sqc_partition(g)
    assert part is not None and part.validate(g)
    assert check_alpha(g, part)
    engine = is_gorenstein(g).gorenstein
    assert sqc_gorenstein(g) == engine
    if engine:
        assert part.counts[2] == 0
