import pytest

from univcat import formats
from univcat.catalog import arrow_category, digraph_corpus, oriented_catalog
from univcat.category import delta_truncation, rt_functor, validate_category
from univcat.errors import ConsistencyError, ParseError
from univcat.gadget import indicator_for_depth, star_replace
from univcat.graphs import Digraph, Graph, make_standard


def test_directed_edge():
    assert formats.loads_graph("D 2 1\n0 1\n") == make_standard("DP", 2)


def test_triangle():
    assert formats.loads_graph("U 3 3\n0 1\n1 2\n0 2\n") == make_standard("K", 3)


def test_out_of_range_vertex():
    with pytest.raises(ConsistencyError) as info:
        formats.loads_graph("D 2 1\n0 2\n")
    assert info.value.line == 2


def test_duplicates_and_loops():
    with pytest.raises(ConsistencyError):
        formats.loads_graph("U 2 2\n0 1\n1 0\n")
    with pytest.raises(ConsistencyError):
        formats.loads_graph("D 1 1\n0 0\n")
    g = formats.loads_graph("DL 1 1\n0 0\n")
    assert g.loops_allowed and g.has_arc(0, 0)


def test_parse_errors_carry_line_numbers():
    with pytest.raises(ParseError) as info:
        formats.loads_graph("# header next\nD 2 x\n")
    assert info.value.line == 2
    with pytest.raises(ParseError):
        formats.loads_graph("D 2 2\n0 1\n")
    with pytest.raises(ParseError):
        formats.loads_graph("X 2 0\n")


def test_comments_and_blank_lines():
    text = "# a path\nD 3 2  # header\n\n1 2\n0 1\n"
    assert formats.loads_graph(text) == make_standard("DP", 3)


def test_serialization_sorts_lines():
    g = Digraph(3, frozenset({(2, 0), (0, 1)}))
    assert formats.dumps_graph(g) == "D 3 2\n0 1\n2 0\n"


def test_round_trip_on_catalogs():
    graphs = list(oriented_catalog()) + list(digraph_corpus()) + [make_standard("C", 5), Graph(0, frozenset())]
    for g in graphs:
        assert formats.loads_graph(formats.dumps_graph(g)) == g


def test_category_round_trip():
    for K in (arrow_category(), delta_truncation(2)):
        back = formats.loads_category(formats.dumps_category(K))
        assert validate_category(back).ok
        assert back.morphisms == K.morphisms
        assert all(back.compose(f, g) == K.compose(f, g) for f, g in K.composable_pairs())


def test_category_consistency():
    with pytest.raises(ConsistencyError):
        formats.loads_category("cat 1 1\nmor 0 0 0\nid 0 0\n")  # missing composite
    with pytest.raises(ConsistencyError):
        formats.loads_category("cat 1 1\nmor 0 0 1\nid 0 0\ncomp 0 0 0\n")
    with pytest.raises(ParseError):
        formats.loads_category("cat 1 1\nmorph 0 0 0\n")


def test_functor_file(tmp_path):
    F = rt_functor(range(3))
    paths = []
    for a, g in enumerate(F.object_images):
        formats.write_graph(g, tmp_path / f"o{a}.txt")
        paths.append(f"o{a}.txt")
    (tmp_path / "f.txt").write_text(formats.dumps_functor(F, paths, "source delta 2"))
    G = formats.read_functor(tmp_path / "f.txt")
    assert G.object_images == F.object_images
    assert [G.image(f) for f in range(len(F.morphism_images))] == \
        [F.image(f) for f in range(len(F.morphism_images))]


def test_functor_file_needs_source(tmp_path):
    formats.write_graph(make_standard("RT", 1), tmp_path / "x.txt")
    with pytest.raises(ParseError):
        formats.loads_functor("obj 0 x.txt\n", tmp_path)


def test_monoid_file():
    M = formats.loads_monoid("monoid 2 0\n0 1\n1 0\n")
    assert M.mul == ((0, 1), (1, 0))
    assert formats.loads_monoid(formats.dumps_monoid(M.mul, M.e)) == M
    with pytest.raises(ConsistencyError):
        formats.loads_monoid("monoid 2 0\n0 0\n1 1\n")  # 0 is not an identity
    with pytest.raises(ParseError):
        formats.loads_monoid("monoid 2 0\n0 1\n")


def test_sidecar_round_trip():
    r = star_replace(make_standard("DC", 3), indicator_for_depth(1))
    principal, copies = formats.loads_sidecar(formats.dumps_sidecar(r))
    assert principal == r.principal and copies == r.copies


def test_dot_directed_edge():
    text = formats.to_dot(make_standard("DP", 2))
    assert text.startswith("digraph") and text.count("->") == 1
    assert "  0;" in text and "  1;" in text


def test_dot_hexagon():
    text = formats.to_dot(make_standard("C", 6))
    assert text.startswith("graph") and text.count("--") == 6
    assert sum(1 for line in text.splitlines() if line.strip().rstrip(";").isdigit()) == 6


def test_dot_highlights_principals(tmp_path):
    r = star_replace(make_standard("DC", 3), indicator_for_depth(1))
    formats.export_dot(r, tmp_path / "r.dot", highlight_principals=True)
    assert (tmp_path / "r.dot").read_text().count("doublecircle") == 3
