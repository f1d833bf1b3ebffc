"""Primitive-positive formulas as pinned patterns, and order-property witnesses.

A formula is a pattern digraph whose vertices are the quantified variables;
the free variables are designated pattern vertices. It holds of an
assignment when some homomorphism of the pattern into the model sends each
designated vertex to its assigned value.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from .category import DeltaCategory, GraphFunctor, OrdinalMap, check_graph_functor
from .errors import ArityMismatch, BadParameter, NotAHom, NotNonstrict, PreconditionFailed
from .graphs import Digraph, VertexMap, is_hom
from .homs import hom_exists


@dataclass(frozen=True)
class PPFormula:
    pattern: Digraph
    x_tuple: tuple
    y_tuple: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "x_tuple", tuple(self.x_tuple))
        object.__setattr__(self, "y_tuple", tuple(self.y_tuple))
        for v in self.x_tuple + self.y_tuple:
            if not 0 <= v < self.pattern.n:
                raise BadParameter(f"designated vertex {v} is not a pattern vertex")
        if self.y_tuple and len(self.y_tuple) != len(self.x_tuple):
            raise ArityMismatch("x and y tuples must have equal length")


def build_nu(g0: Digraph) -> PPFormula:
    """The formula saying ``i -> x_i`` is a homomorphism out of ``g0``."""
    return PPFormula(g0, tuple(range(g0.n)), ())


def _values(m) -> tuple:
    return m.images if isinstance(m, VertexMap) else tuple(m)


def build_eta(g0: Digraph, g1: Digraph, phi_s, phi_t) -> PPFormula:
    """Pattern ``g1`` with x pinned along ``phi_s`` and y pinned along ``phi_t``.

    The equalities ``x_i = z_{phi_s(i)}`` become pins rather than atoms.
    """
    s, t = _values(phi_s), _values(phi_t)
    for name, m in (("phi_s", s), ("phi_t", t)):
        if not is_hom(g0, g1, m):
            raise NotAHom(f"{name} = {m} is not a homomorphism")
    return PPFormula(g1, s, t)


def _pins(phi: PPFormula, x_assign: Sequence[int], y_assign: Sequence[int]):
    if len(x_assign) != len(phi.x_tuple) or len(y_assign) != len(phi.y_tuple):
        raise ArityMismatch(
            f"formula takes {len(phi.x_tuple)}+{len(phi.y_tuple)} values, "
            f"got {len(x_assign)}+{len(y_assign)}")
    pins = {}
    for v, val in zip(phi.x_tuple + phi.y_tuple, tuple(x_assign) + tuple(y_assign)):
        if pins.setdefault(v, val) != val:
            return None
    return pins


def pp_eval(phi: PPFormula, model: Digraph, x_assign: Sequence[int],
            y_assign: Sequence[int] = ()) -> bool:
    pins = _pins(phi, x_assign, y_assign)
    if pins is None:
        return False
    if any(not 0 <= val < model.n for val in pins.values()):
        return False
    return hom_exists(phi.pattern, model, pins)


class OrderVerdict(str, Enum):
    STRICT = "STRICT"
    NONSTRICT = "NONSTRICT"
    NEITHER = "NEITHER"


def classify_matrix(matrix: Sequence[Sequence[bool]]) -> OrderVerdict:
    size = len(matrix)
    cells = [(i, j, bool(matrix[i][j])) for i in range(size) for j in range(size)]
    if all(v == (i < j) for i, j, v in cells):
        return OrderVerdict.STRICT
    if all(v == (i <= j) for i, j, v in cells):
        return OrderVerdict.NONSTRICT
    return OrderVerdict.NEITHER


@dataclass
class WitnessTuples:
    model: Digraph
    tuples: list
    arity: int


@dataclass
class OrderWitness:
    eta: PPFormula
    witness: WitnessTuples
    matrix: list
    verdict: OrderVerdict
    n: int

    @property
    def degenerate(self) -> bool:
        """A single tuple cannot separate the strict and non-strict patterns."""
        return self.n == 0


def order_witness(F: GraphFunctor, n: int, check: bool = True) -> OrderWitness:
    """Tuples ``x^j = F(g_j)`` for the n+1 points ``g_j: [0] -> [n]`` and their eta-matrix."""
    K = F.source
    if not isinstance(K, DeltaCategory):
        raise PreconditionFailed("functor source must be a simplicial-category truncation")
    missing = {0, 1, n} - set(K.ordinals)
    if missing:
        raise PreconditionFailed(f"functor does not cover ordinals {sorted(missing)}")
    if check:
        report = check_graph_functor(F, check_full=False)
        if not (report.functorial and report.faithful):
            raise PreconditionFailed(f"functor is not functorial and faithful: {report.witnesses}")
    g0 = F.object_images[K.object_of[0]]
    g1 = F.object_images[K.object_of[1]]
    gn = F.object_images[K.object_of[n]]
    phi_s = F.image(K.morphism_id(OrdinalMap(0, 1, (0,))))
    phi_t = F.image(K.morphism_id(OrdinalMap(0, 1, (1,))))
    eta = build_eta(g0, g1, phi_s, phi_t)
    tuples = [F.image(K.morphism_id(OrdinalMap(0, n, (j,)))) for j in range(n + 1)]
    matrix = [[pp_eval(eta, gn, tuples[i], tuples[j]) for j in range(n + 1)]
              for i in range(n + 1)]
    return OrderWitness(eta, WitnessTuples(gn, tuples, g0.n), matrix, classify_matrix(matrix), n)


@dataclass
class StrictWitness:
    a_tuples: list
    b_tuples: list
    matrix: list


def shift_strict(w: OrderWitness) -> StrictWitness:
    """Turn a non-strict witness on n+1 tuples into a strict one on n pairs.

    ``a_i = x^{i+1}`` and ``b_j = x^j``, so ``eta(a_i, b_j)`` iff ``i+1 <= j`` iff ``i < j``.
    """
    if w.verdict is not OrderVerdict.NONSTRICT:
        raise NotNonstrict(f"verdict is {w.verdict.value}, expected NONSTRICT")
    if w.n < 1:
        raise NotNonstrict("need at least two tuples to shift")
    xs = w.witness.tuples
    a = [xs[i + 1] for i in range(w.n)]
    b = [xs[j] for j in range(w.n)]
    matrix = [[w.matrix[i + 1][j] for j in range(w.n)] for i in range(w.n)]
    return StrictWitness(a, b, matrix)


def order_matrix(phi: PPFormula, model: Digraph, a_tuples: Sequence, b_tuples: Sequence) -> list:
    if len(a_tuples) != len(b_tuples):
        raise ArityMismatch("a and b lists must have the same length")
    return [[pp_eval(phi, model, a, b) for b in b_tuples] for a in a_tuples]


def check_order_property(phi: PPFormula, model: Digraph, a_tuples: Sequence,
                         b_tuples: Sequence) -> bool:
    """``phi(a_i, b_j)`` holds exactly when ``i < j``, for every pair."""
    matrix = order_matrix(phi, model, a_tuples, b_tuples)
    return all(matrix[i][j] == (i < j) for i in range(len(matrix)) for j in range(len(matrix)))
