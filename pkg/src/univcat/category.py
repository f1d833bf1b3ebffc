"""Finite categories, truncations of the simplicial category, and functors into digraphs.

Composition convention everywhere: ``compose(f, g)`` is ``g o f`` and is
defined when ``cod(f) == dom(g)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations_with_replacement, product
from math import comb
from typing import Iterable, Optional, Sequence

from .errors import BadParameter, NotAMonoid
from .graphs import AnyGraph, Digraph, VertexMap, make_standard
from .homs import EnumLimit, hom_tuples


@dataclass(frozen=True)
class OrdinalMap:
    """A weakly monotone map ``[i] -> [j]`` given by its value array."""

    i: int
    j: int
    values: tuple

    def __post_init__(self):
        values = tuple(self.values)
        object.__setattr__(self, "values", values)
        if len(values) != self.i + 1:
            raise BadParameter(f"map out of [{self.i}] needs {self.i + 1} values")
        if any(not 0 <= x <= self.j for x in values):
            raise BadParameter(f"values {values} leave [{self.j}]")
        if any(x > y for x, y in zip(values, values[1:])):
            raise BadParameter(f"values {values} are not monotone")

    def __call__(self, k: int) -> int:
        return self.values[k]

    def then(self, other: "OrdinalMap") -> "OrdinalMap":
        return OrdinalMap(self.i, other.j, tuple(other.values[x] for x in self.values))


def delta_maps(i: int, j: int) -> list:
    """All weakly monotone maps ``[i] -> [j]`` in lexicographic order."""
    if i < 0 or j < 0:
        raise BadParameter("ordinals are nonnegative")
    return [OrdinalMap(i, j, v) for v in combinations_with_replacement(range(j + 1), i + 1)]


def delta_count(i: int, j: int) -> int:
    return comb(i + j + 1, i + 1)


class FinCategory:
    """A finite category presented by morphism list, identities and composition.

    ``comp[(f, g)] = h`` means ``h = g o f``. Subclasses may compute
    composition instead of storing it; ``compose`` is the access point.
    """

    def __init__(self, n_objects: int, morphisms: Sequence, identities: Sequence,
                 comp: Optional[dict] = None, labels: Optional[Sequence] = None,
                 object_labels: Optional[Sequence] = None):
        self.n_objects = n_objects
        self.morphisms = [tuple(m) for m in morphisms]
        self.identities = list(identities)
        self.comp = dict(comp or {})
        self.labels = list(labels) if labels is not None else None
        self.object_labels = list(object_labels) if object_labels is not None else None
        self._homs = None

    def __repr__(self):
        return f"{type(self).__name__}(objects={self.n_objects}, morphisms={len(self.morphisms)})"

    def dom(self, f: int) -> int:
        return self.morphisms[f][0]

    def cod(self, f: int) -> int:
        return self.morphisms[f][1]

    def hom(self, a: int, b: int) -> list:
        if self._homs is None:
            homs = {}
            for f, (x, y) in enumerate(self.morphisms):
                homs.setdefault((x, y), []).append(f)
            self._homs = homs
        return self._homs.get((a, b), [])

    def compose(self, f: int, g: int) -> int:
        """``g o f``."""
        return self.comp[(f, g)]

    def composable_pairs(self):
        for b in range(self.n_objects):
            into = [f for a in range(self.n_objects) for f in self.hom(a, b)]
            out = [g for c in range(self.n_objects) for g in self.hom(b, c)]
            for f in into:
                for g in out:
                    yield f, g

    def composition_table(self) -> dict:
        return {(f, g): self.compose(f, g) for f, g in self.composable_pairs()}


class DeltaCategory(FinCategory):
    """Full subcategory of the simplicial category on the given ordinals.

    Object ``k`` is the ordinal ``ordinals[k]``; morphisms are ordered by
    (dom, cod) and then lexicographically by value array.
    """

    def __init__(self, ordinals: Iterable[int]):
        ordinals = sorted(set(ordinals))
        if not ordinals or ordinals[0] < 0:
            raise BadParameter("need at least one nonnegative ordinal")
        self.ordinals = ordinals
        self.object_of = {o: k for k, o in enumerate(ordinals)}
        morphisms, labels = [], []
        for a, oa in enumerate(ordinals):
            for b, ob in enumerate(ordinals):
                for m in delta_maps(oa, ob):
                    morphisms.append((a, b))
                    labels.append(m)
        self.index = {(m.i, m.j, m.values): f for f, m in enumerate(labels)}
        identities = [self.index[(o, o, tuple(range(o + 1)))] for o in ordinals]
        super().__init__(len(ordinals), morphisms, identities, None, labels, ordinals)

    def compose(self, f: int, g: int) -> int:
        mf, mg = self.labels[f], self.labels[g]
        if mf.j != mg.i:
            raise KeyError((f, g))
        return self.index[(mf.i, mg.j, tuple(mg.values[x] for x in mf.values))]

    def morphism_id(self, m: OrdinalMap) -> int:
        return self.index[(m.i, m.j, m.values)]


def delta_truncation(n: int) -> DeltaCategory:
    if n < 0:
        raise BadParameter("truncation level must be nonnegative")
    return DeltaCategory(range(n + 1))


@dataclass
class Verdict:
    ok: bool
    law: Optional[str] = None
    witness: Optional[tuple] = None

    def __bool__(self):
        return self.ok


def validate_category(k: FinCategory) -> Verdict:
    """Check typing, totality, identity laws and associativity; report the first failure."""
    t = k.n_objects
    for f, (a, b) in enumerate(k.morphisms):
        if not (0 <= a < t and 0 <= b < t):
            return Verdict(False, "dom/cod", (f,))
    if len(k.identities) != t:
        return Verdict(False, "identity", ())
    for a, e in enumerate(k.identities):
        if not 0 <= e < len(k.morphisms) or k.morphisms[e] != (a, a):
            return Verdict(False, "identity", (a, e))
    for f, g in k.composable_pairs():
        try:
            h = k.compose(f, g)
        except KeyError:
            return Verdict(False, "totality", (f, g))
        if not 0 <= h < len(k.morphisms) or k.morphisms[h] != (k.dom(f), k.cod(g)):
            return Verdict(False, "typing", (f, g, h))
    for f, (a, b) in enumerate(k.morphisms):
        if k.compose(k.identities[a], f) != f:
            return Verdict(False, "right identity", (f,))
        if k.compose(f, k.identities[b]) != f:
            return Verdict(False, "left identity", (f,))
    for f, g in k.composable_pairs():
        gf = k.compose(f, g)
        for h in (x for c in range(t) for x in k.hom(k.cod(g), c)):
            if k.compose(gf, h) != k.compose(f, k.compose(g, h)):
                return Verdict(False, "associativity", (f, g, h))
    return Verdict(True)


def check_monoid(mul: Sequence[Sequence[int]], e: int) -> None:
    k = len(mul)
    if k == 0:
        raise NotAMonoid("empty table")
    if any(len(row) != k for row in mul):
        raise NotAMonoid("table is not square")
    for a, b in product(range(k), repeat=2):
        if not 0 <= mul[a][b] < k:
            raise NotAMonoid(f"entry {a}*{b} out of range", (a, b))
    if not 0 <= e < k:
        raise NotAMonoid(f"identity index {e} out of range", (e,))
    for a in range(k):
        if mul[e][a] != a or mul[a][e] != a:
            raise NotAMonoid(f"{e} is not a two-sided identity for {a}", (a,))
    for a, b, c in product(range(k), repeat=3):
        if mul[mul[a][b]][c] != mul[a][mul[b][c]]:
            raise NotAMonoid(f"associativity fails at ({a}, {b}, {c})", (a, b, c))


def monoid_to_category(mul: Sequence[Sequence[int]], e: int) -> FinCategory:
    """One-object category with ``g o f = mul[g][f]``."""
    check_monoid(mul, e)
    k = len(mul)
    comp = {(f, g): mul[g][f] for f in range(k) for g in range(k)}
    return FinCategory(1, [(0, 0)] * k, [e], comp, labels=list(range(k)))


def graph_category(graphs: Sequence[AnyGraph], limit: Optional[EnumLimit] = None) -> FinCategory:
    """Full subcategory of graphs on the given objects; morphisms are all homomorphisms."""
    morphisms, labels = [], []
    for a, ga in enumerate(graphs):
        for b, gb in enumerate(graphs):
            for m in hom_tuples(ga, gb, None, limit).require_complete("hom-set"):
                morphisms.append((a, b))
                labels.append(m)
    index = {(a, b, m): f for f, ((a, b), m) in enumerate(zip(morphisms, labels))}
    identities = [index[(a, a, tuple(range(g.n)))] for a, g in enumerate(graphs)]
    comp = {}
    for f, (a, b) in enumerate(morphisms):
        for g in (x for x, (bb, _) in enumerate(morphisms) if bb == b):
            c = morphisms[g][1]
            comp[(f, g)] = index[(a, c, tuple(labels[g][x] for x in labels[f]))]
    return FinCategory(len(graphs), morphisms, identities, comp, labels, list(graphs))


@dataclass
class GraphFunctor:
    """Objects to digraphs, morphisms to vertex maps between the object images."""

    source: FinCategory
    object_images: list
    morphism_images: list

    def __post_init__(self):
        if len(self.object_images) != self.source.n_objects:
            raise BadParameter("one image per object required")
        if len(self.morphism_images) != len(self.source.morphisms):
            raise BadParameter("one image per morphism required")
        images = []
        for f, m in enumerate(self.morphism_images):
            a, b = self.source.morphisms[f]
            ga, gb = self.object_images[a], self.object_images[b]
            values = m.images if isinstance(m, VertexMap) else tuple(m)
            # validates the hom contract
            images.append(VertexMap(ga, gb, values))
        self.morphism_images = images

    def image(self, f: int) -> tuple:
        return self.morphism_images[f].images


@dataclass
class FunctorReport:
    functorial: bool
    faithful: bool
    full: bool
    witnesses: dict = field(default_factory=dict)
    hom_counts: dict = field(default_factory=dict)

    @property
    def embedding(self) -> bool:
        return self.functorial and self.faithful and self.full


def check_graph_functor(F: GraphFunctor, check_full: bool = True,
                        limit: Optional[EnumLimit] = None) -> FunctorReport:
    """Functoriality, faithfulness and (optionally) fullness, all exhaustive.

    Fullness compares each hom-set image with the full hom enumeration
    between the object images.
    """
    K = F.source
    imgs = [m.images for m in F.morphism_images]
    witnesses = {}
    functorial = True
    for a, e in enumerate(K.identities):
        if imgs[e] != tuple(range(F.object_images[a].n)):
            functorial = False
            witnesses.setdefault("identity", (a, e))
            break
    if functorial:
        for f, g in K.composable_pairs():
            fi, gi = imgs[f], imgs[g]
            if imgs[K.compose(f, g)] != tuple(gi[x] for x in fi):
                functorial = False
                witnesses["composition"] = (f, g)
                break
    faithful = True
    for a in range(K.n_objects):
        for b in range(K.n_objects):
            hs = K.hom(a, b)
            if len({imgs[f] for f in hs}) != len(hs):
                faithful = False
                witnesses.setdefault("faithful", (a, b))
    full = True
    counts = {}
    if check_full:
        for a in range(K.n_objects):
            for b in range(K.n_objects):
                all_homs = hom_tuples(F.object_images[a], F.object_images[b], None, limit)
                counts[(a, b)] = len(all_homs)
                covered = {imgs[f] for f in K.hom(a, b)}
                if all_homs.truncated or any(h not in covered for h in all_homs):
                    full = False
                    witnesses.setdefault("full", (a, b))
    return FunctorReport(functorial, faithful, full and check_full, witnesses, counts)


def rt_functor(ordinals: Iterable[int]) -> GraphFunctor:
    """``[k] -> RT_{k+1}``, a monotone map acting on vertices by its values."""
    K = DeltaCategory(ordinals)
    objects = [make_standard("RT", o + 1) for o in K.ordinals]
    return GraphFunctor(K, objects, [m.values for m in K.labels])


def constant_functor(K: FinCategory) -> GraphFunctor:
    """Everything to one looped vertex; faithful only when every hom-set is tiny."""
    point = Digraph(1, frozenset({(0, 0)}), True)
    return GraphFunctor(K, [point] * K.n_objects, [(0,)] * len(K.morphisms))


def replacement_functor(graphs: Sequence[Digraph], gadget) -> GraphFunctor:
    """``G -> G*I`` and ``g -> lift(g)`` on the full subcategory spanned by ``graphs``."""
    from .gadget import lift_hom, star_replace

    K = graph_category(graphs)
    replaced = [star_replace(g, gadget) for g in graphs]
    images = []
    for f, (a, b) in enumerate(K.morphisms):
        g = VertexMap(graphs[a], graphs[b], K.labels[f])
        images.append(lift_hom(g, src=replaced[a], tgt=replaced[b]))
    return GraphFunctor(K, [r.result for r in replaced], images)
