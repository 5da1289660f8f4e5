import random

import pytest
from hypothesis import given, settings

from gorgraph.gorenstein import (
    PATH_FULL,
    PATH_SMALL_ALPHA,
    PATH_TRIANGLE_FREE,
    Verdict,
    is_gorenstein,
    link_cycle_condition,
)
from gorgraph.graph import (
    Graph,
    circulant,
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    is_triangle_free,
    path_graph,
)

from test_graph import graphs


def test_link_cycle_condition_examples():
    assert link_cycle_condition(cycle_graph(5)) == (True, None)
    assert link_cycle_condition(circulant(9, {1, 2, 3}))[0]
    with pytest.raises(ValueError):
        link_cycle_condition(complete_graph(4))
    ok, f = link_cycle_condition(cycle_graph(6))
    assert not ok and f is not None


@pytest.mark.parametrize("g,expected", [
    (circulant(13, {1, 5}), True),
    (circulant(8, {1, 2}), False),
    (circulant(6, {3}), True),
    (cycle_graph(6), False),
    (cycle_graph(5), True),
    (circulant(7, {1, 2}), True),
    (complete_graph(4), False),
    (complete_graph(2), True),
    (complete_graph(1), True),
])
def test_gorenstein_examples(g, expected):
    assert is_gorenstein(g).gorenstein is expected


def test_c8_1_2_is_w2_not_gorenstein():
    v = is_gorenstein(circulant(8, {1, 2}))
    (c,) = v.components
    assert c.w2.verdict and not c.gorenstein
    assert c.witness["clause"] == "euler"


def test_paths():
    (c,) = is_gorenstein(circulant(13, {1, 5})).components
    assert c.path == PATH_TRIANGLE_FREE and c.evaluated == ["euler", "link", "cm"]
    (c,) = is_gorenstein(circulant(7, {1, 2})).components
    assert c.path == PATH_SMALL_ALPHA and c.shape == "complement-of-cycle(7)"
    (c,) = is_gorenstein(circulant(13, {1, 2, 3})).components
    assert c.path == PATH_FULL


def test_components_combine():
    g = disjoint_union(cycle_graph(5), complete_graph(2), complete_graph(1))
    v = is_gorenstein(g)
    assert v.gorenstein
    assert [c.shape for c in v.components] == ["complement-of-cycle(5)", "K2", "K1"]
    assert [c.component for c in v.components] == [[0, 1, 2, 3, 4], [5, 6], [7]]
    bad = is_gorenstein(disjoint_union(cycle_graph(5), cycle_graph(6)))
    assert not bad.gorenstein
    assert bad.components[1].component == [5, 6, 7, 8, 9, 10]


def test_witness_labels_are_original():
    g = disjoint_union(complete_graph(2), cycle_graph(6))
    c = is_gorenstein(g).components[1]
    assert set(c.witness.get("face", [])) <= set(range(2, 8))


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=8))
def test_gorenstein_clauses_consistent(g):
    v = is_gorenstein(g)
    for c in v.components:
        if c.gorenstein and c.shape != "K1":
            assert c.cm and c.euler_ok
            assert c.w2.verdict
    if v.gorenstein:
        assert is_gorenstein(disjoint_union(g, complete_graph(1))).gorenstein
    else:
        assert not is_gorenstein(disjoint_union(g, complete_graph(1))).gorenstein


def test_triangle_free_paths_agree_on_random_graphs():
    # a disagreement would raise ClassificationConflict inside is_gorenstein
    rng = random.Random(5)
    seen = 0
    for _ in range(300):
        n = rng.randint(2, 10)
        g = Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.3])
        if not is_triangle_free(g):
            continue
        seen += 1
        for c in is_gorenstein(g).components:
            if c.path == PATH_TRIANGLE_FREE:
                assert c.gorenstein == c.w2.verdict
    assert seen > 50


def test_fixed_characteristic():
    for p in (0, 2, 3):
        assert is_gorenstein(circulant(13, {1, 5}), p).gorenstein
    assert is_gorenstein(cycle_graph(5), 2).char == 2


def test_json_round_trip():
    for g in [circulant(13, {1, 5}), circulant(8, {1, 2}), disjoint_union(cycle_graph(6), complete_graph(1)),
              path_graph(4), empty_graph(0)]:
        v = is_gorenstein(g)
        again = Verdict.from_json(v.to_json())
        assert again == v
        assert again.to_json() == v.to_json()


def test_json_keys():
    d = is_gorenstein(cycle_graph(5)).to_dict()
    keys = set(d["components"][0])
    assert {"component", "shape", "wellCovered", "w2", "cm", "eulerOk", "linkConditionOk",
            "gorenstein", "path", "witness"} <= keys


def test_cycles_and_complete_graphs():
    assert [n for n in range(3, 10) if is_gorenstein(cycle_graph(n)).gorenstein] == [5]
    assert [n for n in range(1, 7) if is_gorenstein(complete_graph(n)).gorenstein] == [1, 2]
