from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from oracles import brute_pp_table
from univcat.category import delta_truncation, constant_functor, rt_functor
from univcat.errors import ArityMismatch, BadParameter, NotAHom, NotNonstrict, PreconditionFailed
from univcat.graphs import Digraph, make_standard
from univcat.stability import (OrderVerdict, PPFormula, build_eta, build_nu, check_order_property,
                               classify_matrix, order_matrix, order_witness, pp_eval,
                               shift_strict)


@st.composite
def digraphs(draw, lo, hi):
    n = draw(st.integers(lo, hi))
    pairs = [(u, v) for u in range(n) for v in range(n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Digraph(n, frozenset(chosen), loops_allowed=True)


@settings(max_examples=80, deadline=None)
@given(digraphs(1, 3), digraphs(1, 3), st.data())
def test_pp_eval_matches_brute_force(pattern, model, data):
    x = tuple(data.draw(st.lists(st.integers(0, pattern.n - 1), min_size=1, max_size=2)))
    y = tuple(data.draw(st.lists(st.integers(0, pattern.n - 1), min_size=0, max_size=len(x))))
    if y and len(y) != len(x):
        y = ()
    phi = PPFormula(pattern, x, y)
    sat = brute_pp_table(pattern, x, y, model)
    for xs in product(range(model.n), repeat=len(x)):
        for ys in product(range(model.n), repeat=len(y)):
            assert pp_eval(phi, model, xs, ys) == ((xs, ys) in sat)


def test_nu_says_map_is_a_hom():
    p2 = make_standard("DP", 2)
    nu = build_nu(p2)
    c3 = make_standard("DC", 3)
    assert pp_eval(nu, c3, (0, 1)) and not pp_eval(nu, c3, (1, 0))


def test_eta_requires_homs():
    g0, g1 = make_standard("RT", 1), make_standard("RT", 2)
    build_eta(g0, g1, (0,), (1,))
    with pytest.raises(NotAHom):
        build_eta(make_standard("DP", 2), make_standard("DP", 2), (1, 0), (0, 1))


def test_arity_checks():
    phi = PPFormula(make_standard("DP", 2), (0,), (1,))
    with pytest.raises(ArityMismatch):
        pp_eval(phi, make_standard("DP", 2), (0, 1), (1,))
    with pytest.raises(ArityMismatch):
        PPFormula(make_standard("DP", 2), (0, 1), (1,))
    with pytest.raises(BadParameter):
        PPFormula(make_standard("DP", 2), (2,))


def test_classify_matrix():
    assert classify_matrix([[False, True], [False, False]]) is OrderVerdict.STRICT
    assert classify_matrix([[True, True], [False, True]]) is OrderVerdict.NONSTRICT
    assert classify_matrix([[True, True], [True, True]]) is OrderVerdict.NEITHER


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_tournament_witness_is_nonstrict_and_shifts(n):
    w = order_witness(rt_functor(sorted({0, 1, n})), n)
    assert w.matrix == [[i <= j for j in range(n + 1)] for i in range(n + 1)]
    assert w.witness.tuples == [(j,) for j in range(n + 1)]
    s = shift_strict(w)
    assert s.a_tuples == [(i + 1,) for i in range(n)] and s.b_tuples == [(j,) for j in range(n)]
    assert check_order_property(w.eta, w.witness.model, s.a_tuples, s.b_tuples)
    assert order_matrix(w.eta, w.witness.model, s.a_tuples, s.b_tuples) == s.matrix


def test_degenerate_witness():
    w = order_witness(rt_functor([0, 1]), 0)
    assert w.degenerate and w.verdict is OrderVerdict.NONSTRICT
    with pytest.raises(NotNonstrict):
        shift_strict(w)


def test_order_witness_preconditions():
    with pytest.raises(PreconditionFailed):
        order_witness(rt_functor([0, 2]), 2)
    with pytest.raises(PreconditionFailed):
        order_witness(constant_functor(delta_truncation(1)), 1)
