import pytest
from hypothesis import given, strategies as st

from univcat.catalog import arrow_category, discrete_category, monoid_catalog
from univcat.category import monoid_to_category
from univcat.errors import BadParameter, NotAMonoid, SizeBound
from univcat.homs import endomorphisms, hom_tuples
from univcat.representation import (MonoidTable, action_structure, batch_scales,
                                    cross_category_homs, find_monoid_isomorphism,
                                    girth_separation, represent_batch, represent_category,
                                    represent_monoid)

Z2 = ((0, 1), (1, 0))
IDEMPOTENT = ((0, 1), (1, 1))


@pytest.mark.parametrize("sizes,expected", [((3,), [3]), ((3, 2), [3, 4]), ((5, 5, 2), [5, 6, 7])])
def test_girth_separation_examples(sizes, expected):
    assert girth_separation(sizes) == expected


@given(st.lists(st.integers(1, 50), min_size=1, max_size=8))
def test_girth_separation_is_minimal(sizes):
    out = girth_separation(sizes)
    assert all(n >= s for n, s in zip(out, sizes))
    assert all(a < b for a, b in zip(out, out[1:]))
    # each entry is forced by its own size or by its predecessor
    assert all(n == s or (i and n == out[i - 1] + 1) for i, (n, s) in enumerate(zip(out, sizes)))


def test_girth_separation_rejects_bad_input():
    with pytest.raises(BadParameter):
        girth_separation([])
    with pytest.raises(BadParameter):
        girth_separation([0])


def test_monoid_table_validation():
    with pytest.raises(NotAMonoid):
        MonoidTable(2, ((0, 1), (1, 1)), 1)
    with pytest.raises(BadParameter):
        MonoidTable(3, Z2, 0)


def test_action_structure_layers():
    K = monoid_to_category(IDEMPOTENT, 0)
    s = action_structure(K, 0)
    # a o e = a o a = a gives two middle vertices leading to R_a
    assert s.base.n == 2 + 2 + 4
    assert s.colors[(s.middle[(1, 0)], s.right[1])] == 2
    assert s.colors[(s.middle[(1, 1)], s.right[1])] == 2


def test_trivial_monoid_is_rigid():
    r = represent_monoid(MonoidTable(1, ((0,),), 0))
    assert r.verified and len(endomorphisms(r.graphs[0])) == 1


def test_z2_representation():
    r = represent_monoid(MonoidTable(2, Z2, 0))
    endo = endomorphisms(r.graphs[0])
    assert len(endo) == 2
    swap = endo.maps.index(r.correspondence[1])
    assert endo.table[swap][swap] == endo.identity_index


def test_idempotent_representation():
    r = represent_monoid(MonoidTable(2, IDEMPOTENT, 0))
    endo = endomorphisms(r.graphs[0])
    a = endo.maps.index(r.correspondence[1])
    assert len(endo) == 2 and a != endo.identity_index and endo.table[a][a] == a


def test_size_bound():
    big = tuple(tuple((i + j) % 5 for j in range(5)) for i in range(5))
    with pytest.raises(SizeBound):
        represent_monoid(MonoidTable(5, big, 0))


def test_find_monoid_isomorphism_brute_force():
    M = MonoidTable(3, ((0, 1, 2), (1, 1, 1), (2, 1, 2)), 0)
    p = (2, 0, 1)
    relabelled = [[0] * 3 for _ in range(3)]
    for a in range(3):
        for b in range(3):
            relabelled[p[a]][p[b]] = p[M.mul[a][b]]
    phi = find_monoid_isomorphism(M, relabelled, p[0])
    assert phi is not None
    assert all(phi[M.mul[a][b]] == relabelled[phi[a]][phi[b]] for a in range(3) for b in range(3))
    assert find_monoid_isomorphism(M, [[0, 1, 2], [1, 2, 0], [2, 0, 1]], 0) is None


def test_category_and_monoid_paths_agree_on_z2():
    via_cat = represent_category(monoid_to_category(Z2, 0), scale=20)
    via_monoid = represent_monoid(MonoidTable(2, Z2, 0))
    assert via_cat.verified and via_monoid.verified
    assert via_cat.certificate["hom_counts"] == {(0, 0): 2}
    assert len(endomorphisms(via_cat.graphs[0])) == len(endomorphisms(via_monoid.graphs[0]))


def test_discrete_category():
    r = represent_category(discrete_category(2))
    g0, g1 = r.graphs
    assert not hom_tuples(g0, g1) and not hom_tuples(g1, g0)
    assert len(endomorphisms(g0)) == len(endomorphisms(g1)) == 1


def test_arrow_category():
    r = represent_category(arrow_category())
    ga, gb = r.graphs
    assert len(hom_tuples(ga, gb)) == 1 and len(hom_tuples(gb, ga)) == 0
    assert r.correspondence[2] == hom_tuples(ga, gb)[0]


def test_batch_scales_increase():
    cats = [monoid_to_category(Z2, 0), arrow_category()]
    a, b = batch_scales(cats)
    assert b > a


def test_batch_has_no_cross_homs():
    results = represent_batch([monoid_to_category(((0,),), 0), monoid_to_category(Z2, 0)])
    assert cross_category_homs(results) == []


def test_represented_graphs_are_two_degenerate():
    for mul, e in monoid_catalog(2):
        r = represent_monoid(MonoidTable(len(mul), mul, e))
        assert r.degeneracies == [2]
