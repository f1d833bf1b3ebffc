import pytest

from univcat.catalog import oriented_catalog
from univcat.density import (SAMPLE_NOTE, density_profile, find_subdivided_clique, monotone_in_n,
                             replaced_class_profile, subdivided_clique)
from univcat.errors import BadParameter
from univcat.graphs import Graph, is_hom, make_standard, subdivide


def test_hexagon_contains_subdivided_triangle():
    emb = find_subdivided_clique(make_standard("C", 6), 1, 3)
    assert emb is not None and len(set(emb.images)) == 6
    assert is_hom(subdivided_clique(3, 1), make_standard("C", 6), emb.images)
    assert find_subdivided_clique(make_standard("C", 6), 0, 3) is None


def test_bad_clique_size():
    with pytest.raises(BadParameter):
        find_subdivided_clique(make_standard("K", 3), 0, 1)


@pytest.mark.parametrize("p", [0, 1, 2])
@pytest.mark.parametrize("N", [2, 3, 4])
def test_subdivided_clique_profiles_itself(p, N):
    sample = [subdivided_clique(N, p)]
    prof = density_profile(sample, p, N)
    assert prof.table[p] == N
    assert monotone_in_n(prof, sample)


def test_upto_mode_counts_shallower_depths():
    sample = [make_standard("K", 4)]
    strict = density_profile(sample, 1, 4)
    upto = density_profile(sample, 1, 4, upto=True)
    assert strict.table == [4, 2]
    assert upto.table == [4, 4]


def test_path_has_no_dense_entries():
    path = Graph(6, frozenset((i, i + 1) for i in range(5)))
    prof = density_profile([path], 2, 4)
    assert prof.dense_entries() == {}
    assert prof.table == [2, 2, 2]


def test_profile_text_carries_the_sample_caveat():
    text = density_profile([make_standard("K", 3)], 0, 3).format()
    assert SAMPLE_NOTE in text and "0\t3" in text


def test_truncated_cells_are_reported():
    prof = density_profile([subdivide(make_standard("K", 5), 1)], 1, 5, max_steps=1)
    assert prof.truncated


def test_replaced_class_is_two_degenerate():
    rc = replaced_class_profile(list(oriented_catalog()), 1, n_max=3)
    assert max(rc.degeneracies) <= 2
    assert rc.profile.table[1] == 3
