import pytest
from hypothesis import given, settings, strategies as st

from oracles import backtrack_homs, brute_homs
from univcat.errors import BadParameter, EnumerationTruncated, PinOutOfRange
from univcat.graphs import Digraph, make_standard, subdivide
from univcat.homs import (MAX_STEPS_ENV, EnumLimit, endomorphisms, hom_enumerate, hom_exists,
                          hom_tuples, subgraph_embeddings, walk_depths, INF)


@st.composite
def digraphs(draw, max_n=4, loops=True):
    n = draw(st.integers(0, max_n))
    pairs = [(u, v) for u in range(n) for v in range(n) if loops or u != v]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Digraph(n, frozenset(chosen), loops_allowed=loops)


@settings(max_examples=150, deadline=None)
@given(digraphs(), digraphs())
def test_hom_tuples_match_brute_force(g, h):
    assert list(hom_tuples(g, h)) == brute_homs(g, h)


@settings(max_examples=100, deadline=None)
@given(digraphs(loops=False), digraphs(loops=False))
def test_injective_mode_matches_brute_force(g, h):
    assert list(hom_tuples(g, h, injective=True)) == brute_homs(g, h, injective=True)


@settings(max_examples=60, deadline=None)
@given(digraphs(max_n=6, loops=False), digraphs(max_n=5, loops=False))
def test_larger_instances_match_backtracking(g, h):
    assert list(hom_tuples(g, h)) == backtrack_homs(g, h)


def test_triangle_into_itself_and_path():
    c3 = make_standard("DC", 3)
    assert len(hom_tuples(c3, c3)) == 3
    assert len(hom_tuples(c3, make_standard("DP", 3))) == 0


def test_undirected_clique_embeddings():
    assert len(hom_tuples(make_standard("K", 3), make_standard("K", 4))) == 24


def test_mixed_kinds_rejected():
    with pytest.raises(BadParameter):
        hom_tuples(make_standard("K", 2), make_standard("DP", 2))


def test_pins_restrict_and_validate():
    c3 = make_standard("DC", 3)
    assert list(hom_tuples(c3, c3, {0: 2})) == [(2, 0, 1)]
    with pytest.raises(PinOutOfRange):
        hom_tuples(c3, c3, {3: 0})
    with pytest.raises(PinOutOfRange):
        hom_tuples(c3, c3, {0: 5})


def test_empty_source_has_one_hom():
    empty = Digraph(0, frozenset())
    assert list(hom_tuples(empty, make_standard("DP", 2))) == [()]
    assert list(hom_tuples(empty, empty)) == [()]
    assert list(hom_tuples(make_standard("DP", 1), empty)) == []


def test_max_results_truncates():
    g = Digraph(3, frozenset())
    res = hom_tuples(g, g, limit=EnumLimit(max_results=5))
    assert len(res) == 5 and res.truncated
    full = hom_tuples(g, g, limit=EnumLimit(max_results=27))
    assert len(full) == 27 and not full.truncated


def test_max_steps_truncates_and_exists_raises():
    g = Digraph(4, frozenset())
    res = hom_tuples(g, g, limit=EnumLimit(max_steps=3))
    assert res.truncated
    c5 = make_standard("DC", 5)
    with pytest.raises(EnumerationTruncated):
        hom_exists(c5, make_standard("DC", 3), max_steps=1)


def test_env_var_sets_default_step_budget(monkeypatch):
    monkeypatch.setenv(MAX_STEPS_ENV, "2")
    g = Digraph(4, frozenset())
    assert hom_tuples(g, g).truncated
    monkeypatch.setenv(MAX_STEPS_ENV, "oops")
    with pytest.raises(BadParameter):
        EnumLimit()


def test_hom_enumerate_returns_vertex_maps():
    maps = hom_enumerate(make_standard("DP", 2), make_standard("DP", 3))
    assert [m.images for m in maps] == [(0, 1), (1, 2)]


def test_subgraph_embeddings_of_hexagon():
    hexagon = make_standard("C", 6)
    embs = subgraph_embeddings(subdivide(make_standard("K", 3), 1), hexagon)
    assert len(embs) == 12  # automorphisms of C6


def test_endomorphism_table_of_dicycle():
    endo = endomorphisms(make_standard("DC", 3))
    assert endo.maps == [(0, 1, 2), (1, 2, 0), (2, 0, 1)]
    assert endo.table == [[0, 1, 2], [1, 2, 0], [2, 0, 1]]
    assert endo.identity_index == 0


def test_endomorphism_table_composition_order():
    # on a path with a loop at the end, constant maps are endomorphisms
    g = Digraph(2, frozenset({(0, 1), (1, 1)}), loops_allowed=True)
    endo = endomorphisms(g)
    for i, f in enumerate(endo.maps):
        for j, h in enumerate(endo.maps):
            composite = tuple(f[h[v]] for v in range(g.n))
            assert endo.maps[endo.table[i][j]] == composite


def test_walk_depths():
    assert walk_depths(make_standard("DP", 3).out_adj) == [2, 1, 0]
    assert walk_depths(make_standard("DC", 3).out_adj) == [INF] * 3
