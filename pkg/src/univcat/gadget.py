"""Arc replacement by a rigid oriented cycle and the induced correspondence of homs.

``star_replace(G, I)`` glues one copy of the gadget ``(I, a, b)`` onto every
arc ``(u, v)`` of ``G`` with ``a = u`` and ``b = v``. When the gadget is rigid
and long enough, homomorphisms of the replaced digraphs are exactly the lifts
of homomorphisms of the originals; ``verify_full_faithful_pair`` checks this
by enumerating both sides.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Optional, Sequence

from .errors import BadParameter, EmbeddingFailed, NotInduced, NotOriented, NotRigid
from .graphs import Digraph, Graph, VertexMap, make_standard, subdivide, underlying, cycles_upto
from .homs import EnumLimit, endomorphisms, hom_tuples


@dataclass(frozen=True)
class IndicatorGadget:
    I: Digraph
    a: int
    b: int
    L: int
    s: int

    @property
    def depth(self) -> Optional[int]:
        """The subdivision depth ``d`` when the gadget has length 3(d+1) and span d+1."""
        if self.L == 3 * self.s and self.s >= 2:
            return self.s - 1
        return None


def make_gadget(L: int, s: int) -> IndicatorGadget:
    """Cycle 0->1->...->L-1 closed by the single reversed arc 0->L-1; a=0, b=s."""
    if L < 3:
        raise BadParameter(f"gadget length must be at least 3, got {L}")
    if not 1 <= s <= L - 2:
        raise BadParameter(f"span must satisfy 1 <= s <= L-2, got s={s}, L={L}")
    arcs = {(i, i + 1) for i in range(L - 1)} | {(0, L - 1)}
    I = Digraph(L, frozenset(arcs))
    endo = endomorphisms(I, EnumLimit.unlimited())
    if endo.maps != [tuple(range(L))]:
        raise NotRigid(f"gadget L={L} s={s} has {len(endo)} endomorphisms")
    return IndicatorGadget(I, 0, s, L, s)


def indicator_for_depth(d: int) -> IndicatorGadget:
    if d < 1:
        raise BadParameter(f"depth must be at least 1, got {d}")
    return make_gadget(3 * (d + 1), d + 1)


@dataclass(frozen=True)
class ReplacedDigraph:
    """``base * gadget`` with its bookkeeping.

    ``copies[k][i]`` is the result vertex carrying gadget vertex ``i`` in the
    copy glued onto ``base_arcs[k]``. ``gadgets[k]`` is that copy's gadget;
    ``gadget`` is set only for a plain star replacement.
    """

    result: Digraph
    base: Digraph
    gadgets: tuple
    principal: tuple
    base_arcs: tuple
    copies: tuple
    colors: Optional[tuple] = None
    gadget: Optional[IndicatorGadget] = None
    _arc_index: dict = field(default=None, compare=False, repr=False)
    _principal_inv: dict = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "_arc_index", {arc: k for k, arc in enumerate(self.base_arcs)})
        object.__setattr__(self, "_principal_inv", {p: u for u, p in enumerate(self.principal)})

    def arc_index(self, arc) -> int:
        return self._arc_index[tuple(arc)]

    def base_vertex(self, v: int) -> Optional[int]:
        """Base vertex whose principal is ``v``, or None."""
        return self._principal_inv.get(v)


def _replace(g: Digraph, arc_gadget: Sequence[IndicatorGadget], colors=None,
             uniform=None) -> ReplacedDigraph:
    if not g.is_oriented():
        raise NotOriented("arc replacement needs an oriented graph (no loops, no 2-cycles)")
    base_arcs = tuple(g.sorted_arcs)
    principal = tuple(range(g.n))
    nxt = g.n
    arcs = set()
    copies = []
    for (u, v), gad in zip(base_arcs, arc_gadget):
        local = []
        for i in range(gad.L):
            if i == gad.a:
                local.append(u)
            elif i == gad.b:
                local.append(v)
            else:
                local.append(nxt)
                nxt += 1
        for x, y in gad.I.arcs:
            arcs.add((local[x], local[y]))
        copies.append(tuple(local))
    result = Digraph(nxt, frozenset(arcs))
    return ReplacedDigraph(result, g, tuple(arc_gadget), principal, base_arcs, tuple(copies),
                           colors, uniform)


def star_replace(g: Digraph, gadget: IndicatorGadget) -> ReplacedDigraph:
    """Replace every arc of the oriented graph ``g`` by a copy of ``gadget``.

    Principals keep the base indices; copy-local vertices follow in sorted-arc
    order, each copy listing its vertices by increasing gadget index.
    """
    return _replace(g, [gadget] * len(g.arcs), None, gadget)


def colored_replace(g: Digraph, colors: Mapping, gadgets: Mapping) -> ReplacedDigraph:
    """Like ``star_replace`` but arc ``e`` receives ``gadgets[colors[e]]``."""
    arcs = g.sorted_arcs
    missing = [e for e in arcs if e not in colors]
    if missing:
        raise BadParameter(f"arcs without a colour: {missing[:3]}")
    col = tuple(colors[e] for e in arcs)
    return _replace(g, [gadgets[c] for c in col], col)


def lift_images(g_images: Sequence[int], src: ReplacedDigraph, tgt: ReplacedDigraph) -> tuple:
    out = [0] * src.result.n
    for u, p in enumerate(src.principal):
        out[p] = tgt.principal[g_images[u]]
    for k, (u, v) in enumerate(src.base_arcs):
        image_arc = (g_images[u], g_images[v])
        try:
            j = tgt.arc_index(image_arc)
        except KeyError:
            raise NotInduced(f"base map sends arc {(u, v)} to non-arc {image_arc}")
        if src.gadgets[k] != tgt.gadgets[j]:
            raise NotInduced(f"arc {(u, v)} and its image {image_arc} carry different gadgets")
        for x, y in zip(src.copies[k], tgt.copies[j]):
            out[x] = y
    return tuple(out)


def lift_hom(g: VertexMap, gadget: Optional[IndicatorGadget] = None, *,
             src: Optional[ReplacedDigraph] = None,
             tgt: Optional[ReplacedDigraph] = None) -> VertexMap:
    """Canonical lift of ``g: G -> H`` to ``G*I -> H*I``."""
    src = src if src is not None else star_replace(g.source, gadget)
    tgt = tgt if tgt is not None else star_replace(g.target, gadget)
    return VertexMap(src.result, tgt.result, lift_images(g.images, src, tgt))


def project_images(f_images: Sequence[int], src: ReplacedDigraph, tgt: ReplacedDigraph) -> tuple:
    g_images = []
    for u, p in enumerate(src.principal):
        w = tgt.base_vertex(f_images[p])
        if w is None:
            raise NotInduced(f"principal {p} goes to non-principal {f_images[p]}")
        g_images.append(w)
    if lift_images(g_images, src, tgt) != tuple(f_images):
        raise NotInduced("map is not the lift of its projection")
    return tuple(g_images)


def project_hom(f: VertexMap, src: ReplacedDigraph, tgt: ReplacedDigraph) -> VertexMap:
    """Recover the base homomorphism ``g`` with ``f = lift_hom(g)``."""
    if f.source != src.result or f.target != tgt.result:
        raise NotInduced("map does not run between the given replaced digraphs")
    return VertexMap(src.base, tgt.base, project_images(f.images, src, tgt))


@dataclass
class FullFaithfulReport:
    hom_base: int
    hom_replaced: int
    lift_injective: bool
    unprojectable: list
    truncated: bool = False

    @property
    def bijection(self) -> bool:
        return (not self.truncated and self.hom_base == self.hom_replaced
                and self.lift_injective and not self.unprojectable)


def verify_full_faithful_pair(g: Digraph, h: Digraph, gadget: IndicatorGadget,
                              limit: Optional[EnumLimit] = None) -> FullFaithfulReport:
    src, tgt = star_replace(g, gadget), star_replace(h, gadget)
    base = hom_tuples(g, h, None, limit)
    replaced = hom_tuples(src.result, tgt.result, None, limit)
    lifts = {lift_images(m, src, tgt) for m in base}
    bad = []
    for f in replaced:
        try:
            project_images(f, src, tgt)
        except NotInduced:
            bad.append(f)
    return FullFaithfulReport(len(base), len(replaced), len(lifts) == len(base), bad,
                              base.truncated or replaced.truncated)


@dataclass
class ShortCycleVerdict:
    ok: bool
    bound: int
    cycles: list
    offending: list


def short_cycle_copies_check(r: ReplacedDigraph) -> ShortCycleVerdict:
    """Are all cycles of length <= L in the underlying graph gadget copies?"""
    if r.gadget is not None:
        bound = r.gadget.L
    else:
        bound = max((g.L for g in r.gadgets), default=3)
    cycles = cycles_upto(underlying(r.result), max(bound, 3))
    copy_sets = {frozenset(c) for c in r.copies}
    offending = [c for c in cycles if frozenset(c) not in copy_sets or len(c) != len(set(c))]
    return ShortCycleVerdict(not offending, bound, cycles, offending)


def embed_in_subdivided_clique(r: ReplacedDigraph) -> VertexMap:
    """Embed ``underlying(r.result)`` into ``Sub_d(K_{n+m})``.

    Arc ``k = (u, v)`` gets the fresh branch vertex ``w = n + k``; its copy is
    routed around the subdivided triangle u-v-w with the a->b path on u-v.
    """
    gad = r.gadget
    if gad is None or gad.depth is None:
        raise BadParameter("embedding needs a star replacement built by indicator_for_depth")
    n, m = r.base.n, len(r.base_arcs)
    d = gad.depth
    N = n + m
    clique = make_standard("K", N) if N >= 1 else Graph(0, frozenset())
    host = subdivide(clique, d)
    edge_pos = {e: k for k, e in enumerate(clique.sorted_edges)}

    def route(x, y):
        """Vertices of the subdivided edge from branch x to branch y, inclusive."""
        e = edge_pos[(min(x, y), max(x, y))]
        inner = [N + e * d + k for k in range(d)]
        if x > y:
            inner.reverse()
        return [x] + inner + [y]

    images = [0] * r.result.n
    for u in range(n):
        images[r.principal[u]] = u
    for k, (u, v) in enumerate(r.base_arcs):
        w = n + k
        walk = route(u, v) + route(v, w)[1:] + route(w, u)[1:-1]
        copy = r.copies[k]
        if len(walk) != len(copy):
            raise EmbeddingFailed(f"route of length {len(walk)} for a copy of length {len(copy)}")
        for x, y in zip(copy, walk):
            images[x] = y
    source = underlying(r.result)
    try:
        return VertexMap(source, host, tuple(images), injective=True)
    except Exception as exc:
        raise EmbeddingFailed(str(exc)) from exc
