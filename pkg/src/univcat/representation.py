"""Representing finite monoids and finite categories by digraphs.

Construction, for a category K and an object A:

1. The action structure of A has a left vertex ``L_f`` and a right vertex
   ``R_f`` for every morphism ``f`` with codomain A, and for every ``m`` with
   ``f o m`` defined a middle vertex ``P_{f,m}`` with arcs
   ``L_f -> P_{f,m}`` coloured ``m`` and ``P_{f,m} -> R_{f o m}`` coloured
   ``out``. Colour-preserving maps between action structures are exactly
   post-compositions with morphisms of K (Yoneda).
2. Each colour ``c`` is realised by its own rigid gadget with span
   ``s_c = c + 2`` and length ``L_c = s_c + (c + 1) * B + 1``. The result is
   acyclic and every gadget copy can only land on a copy of the same colour,
   so homomorphisms of the replaced digraphs are the lifts of colour-preserving
   maps.

Claims are not taken on trust: every result carries an exhaustive
enumeration certificate, and a failed certificate raises.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations
from typing import Optional, Sequence

from .category import FinCategory, GraphFunctor, check_graph_functor, check_monoid, monoid_to_category
from .errors import BadParameter, RepresentationFailed, SizeBound
from .gadget import colored_replace, lift_images, make_gadget
from .graphs import Digraph, degeneracy, underlying
from .homs import EnumLimit, endomorphisms, hom_exists

DEFAULT_MAX_ORDER = 4
DEFAULT_MAX_MORPHISMS = 6


@dataclass(frozen=True)
class MonoidTable:
    k: int
    mul: tuple
    e: int

    def __post_init__(self):
        mul = tuple(tuple(int(x) for x in row) for row in self.mul)
        object.__setattr__(self, "mul", mul)
        if len(mul) != self.k:
            raise BadParameter(f"table has {len(mul)} rows for order {self.k}")
        check_monoid(mul, self.e)


def girth_separation(sizes: Sequence[int]) -> list:
    """Least strictly increasing N_1 < N_2 < ... with N_i >= sizes[i]."""
    if not sizes:
        raise BadParameter("need at least one size")
    out = []
    for size in sizes:
        if size < 1:
            raise BadParameter("sizes must be positive")
        out.append(max(size, out[-1] + 1) if out else size)
    return out


@dataclass
class ActionStructure:
    base: Digraph
    colors: dict
    left: dict
    right: dict
    middle: dict
    members: list


def action_structure(K: FinCategory, obj: int) -> ActionStructure:
    """Layered L -> P -> R digraph; colour ``len(K.morphisms)`` marks the P -> R arcs."""
    n_mor = len(K.morphisms)
    members = [f for f in range(n_mor) if K.cod(f) == obj]
    t = len(members)
    left = {f: i for i, f in enumerate(members)}
    right = {f: t + i for i, f in enumerate(members)}
    middle, colors = {}, {}
    nxt = 2 * t
    for f in members:
        for m in range(n_mor):
            if K.cod(m) == K.dom(f):
                middle[(f, m)] = nxt
                colors[(left[f], nxt)] = m
                colors[(nxt, right[K.compose(m, f)])] = n_mor
                nxt += 1
    base = Digraph(nxt, frozenset(colors))
    return ActionStructure(base, colors, left, right, middle, members)


def gadget_family(n_colors: int, scale: int) -> dict:
    if scale < n_colors + 2:
        raise BadParameter(f"scale {scale} too small for {n_colors} colours")
    return {c: make_gadget((c + 2) + (c + 1) * scale + 1, c + 2) for c in range(n_colors)}


def _walk_lengths(n_colors: int, scale: int) -> range:
    """Span of ``s_c + (L_c' - 1 - s_c')`` over all colour pairs."""
    return range(2 + scale, (n_colors + 1) + n_colors * scale + 1)


def batch_scales(categories: Sequence[FinCategory]) -> list:
    """One scale per category so that no gadget of one fits a walk of another."""
    sizes = [2 * (len(K.morphisms) + 1) for K in categories]
    sep = girth_separation(sizes)
    scales, ceiling = [], 0
    for K, N in zip(categories, sep):
        rho = len(K.morphisms) + 1
        scale = max(2 * N, rho + 2, ceiling + 1)
        scales.append(scale)
        ceiling = _walk_lengths(rho, scale).stop - 1
    return scales


@dataclass
class RepresentationResult:
    category: FinCategory
    structures: list
    replaced: list
    functor: GraphFunctor
    correspondence: dict
    verified: bool
    certificate: dict
    scale: int
    gadget_params: dict
    degeneracies: list = field(default_factory=list)
    monoid_iso: Optional[tuple] = None

    @property
    def graphs(self) -> list:
        return [r.result for r in self.replaced]


def represent_category(K: FinCategory, scale: Optional[int] = None,
                       max_morphisms: int = DEFAULT_MAX_MORPHISMS,
                       verify: bool = True) -> RepresentationResult:
    n_mor = len(K.morphisms)
    if n_mor > max_morphisms:
        raise SizeBound(f"{n_mor} morphisms exceed the bound {max_morphisms}")
    if scale is None:
        scale = batch_scales([K])[0]
    gadgets = gadget_family(n_mor + 1, scale)
    structures = [action_structure(K, a) for a in range(K.n_objects)]
    replaced = [colored_replace(s.base, s.colors, gadgets) for s in structures]
    images = []
    for h, (a, b) in enumerate(K.morphisms):
        sa, sb = structures[a], structures[b]
        base_map = [0] * sa.base.n
        for f in sa.members:
            hf = K.compose(f, h)
            base_map[sa.left[f]] = sb.left[hf]
            base_map[sa.right[f]] = sb.right[hf]
            for m in range(n_mor):
                if (f, m) in sa.middle:
                    base_map[sa.middle[(f, m)]] = sb.middle[(hf, m)]
        images.append(lift_images(base_map, replaced[a], replaced[b]))
    F = GraphFunctor(K, [r.result for r in replaced], images)
    params = {c: (g.L, g.s) for c, g in gadgets.items()}
    degs = [degeneracy(underlying(r.result))[0] for r in replaced]
    result = RepresentationResult(K, structures, replaced, F,
                                  {h: F.image(h) for h in range(n_mor)},
                                  False, {}, scale, params, degs)
    if verify:
        report = check_graph_functor(F, limit=EnumLimit.unlimited())
        expected = {(a, b): len(K.hom(a, b)) for a in range(K.n_objects)
                    for b in range(K.n_objects)}
        result.certificate = {"hom_counts": report.hom_counts, "expected": expected,
                              "functorial": report.functorial, "faithful": report.faithful,
                              "full": report.full}
        if not (report.embedding and report.hom_counts == expected):
            raise RepresentationFailed("enumeration certificate failed", report.witnesses)
        result.verified = True
    return result


def represent_batch(categories: Sequence[FinCategory], **kwargs) -> list:
    return [represent_category(K, scale, **kwargs)
            for K, scale in zip(categories, batch_scales(categories))]


def cross_category_homs(results: Sequence[RepresentationResult]) -> list:
    """Every (i, a, j, b) with i != j and a homomorphism from graph a of i to graph b of j."""
    found = []
    for i, ri in enumerate(results):
        for j, rj in enumerate(results):
            if i == j:
                continue
            for a, ga in enumerate(ri.graphs):
                for b, gb in enumerate(rj.graphs):
                    if hom_exists(ga, gb):
                        found.append((i, a, j, b))
    return found


def find_monoid_isomorphism(M: MonoidTable, table: Sequence[Sequence[int]],
                            identity: int) -> Optional[tuple]:
    """A bijection phi with phi(a*b) = table[phi(a)][phi(b)], by brute force over k! candidates."""
    k = M.k
    if len(table) != k:
        return None
    for perm in permutations(range(k)):
        if perm[M.e] != identity:
            continue
        if all(perm[M.mul[a][b]] == table[perm[a]][perm[b]] for a in range(k) for b in range(k)):
            return perm
    return None


def represent_monoid(M: MonoidTable, max_order: int = DEFAULT_MAX_ORDER) -> RepresentationResult:
    """A digraph whose endomorphism monoid is isomorphic to ``M``, with certificate."""
    if M.k > max_order:
        raise SizeBound(f"monoid order {M.k} exceeds the bound {max_order}")
    K = monoid_to_category(M.mul, M.e)
    result = represent_category(K, max_morphisms=max(max_order, DEFAULT_MAX_MORPHISMS))
    graph = result.graphs[0]
    endo = endomorphisms(graph, EnumLimit.unlimited())
    index = {m: i for i, m in enumerate(endo.maps)}
    phi = tuple(index.get(result.correspondence[a], -1) for a in range(M.k))
    ok = (len(endo) == M.k and -1 not in phi and all(
        phi[M.mul[a][b]] == endo.table[phi[a]][phi[b]] for a in range(M.k) for b in range(M.k)))
    iso = phi if ok else find_monoid_isomorphism(M, endo.table, endo.identity_index)
    result.certificate["endomorphisms"] = len(endo)
    result.monoid_iso = iso
    if iso is None:
        extra = [m for m in endo.maps if m not in set(result.correspondence.values())]
        raise RepresentationFailed("End(result) is not isomorphic to the monoid",
                                   extra[:1] or None)
    return result
