"""Homomorphism and subgraph-embedding enumeration.

The engine is a backtracking CSP over bitmask domains: one Python int per
source vertex, bit ``x`` set when target vertex ``x`` is still a candidate.
Domains are made arc consistent once up front, then each assignment
forward-checks the neighbours. Variables are chosen smallest-domain first,
ties by index. Results are re-sorted lexicographically, so the search order
never leaks into the output.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Mapping, Optional, Sequence

from .errors import BadParameter, EnumerationTruncated, PinOutOfRange
from .graphs import AnyGraph, Digraph, Graph, VertexMap

MAX_STEPS_ENV = "UNIVCAT_MAX_STEPS"
INF = float("inf")
TABLE_THRESHOLD = 64


def _env_max_steps() -> Optional[int]:
    raw = os.environ.get(MAX_STEPS_ENV)
    if raw is None or raw == "":
        return None
    try:
        value = int(raw)
    except ValueError:
        raise BadParameter(f"{MAX_STEPS_ENV} must be an integer, got {raw!r}")
    return value if value > 0 else None


@dataclass(frozen=True)
class EnumLimit:
    max_results: Optional[int] = None
    max_steps: Optional[int] = field(default_factory=_env_max_steps)

    @classmethod
    def unlimited(cls) -> "EnumLimit":
        return cls(None, None)


class Enumeration(list):
    """A list of results that remembers whether a limit cut it short."""

    def __init__(self, items=(), truncated: bool = False, steps: int = 0):
        super().__init__(items)
        self.truncated = truncated
        self.steps = steps

    def require_complete(self, what: str = "enumeration") -> "Enumeration":
        if self.truncated:
            raise EnumerationTruncated(f"{what} hit its limit after {self.steps} steps")
        return self


def _as_digraph(g: AnyGraph) -> Digraph:
    return g if g.directed else g.as_symmetric_digraph()


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def walk_depths(adj: Sequence[Sequence[int]]) -> list:
    """Longest directed walk leaving each vertex along ``adj``; ``INF`` if unbounded."""
    n = len(adj)
    depth = [INF] * n
    pending = [len(a) for a in adj]
    rev = [[] for _ in range(n)]
    for u, a in enumerate(adj):
        for w in a:
            rev[w].append(u)
    ready = [u for u in range(n) if not pending[u]]
    while ready:
        w = ready.pop()
        depth[w] = max((depth[x] + 1 for x in adj[w]), default=0)
        for u in rev[w]:
            pending[u] -= 1
            if not pending[u]:
                ready.append(u)
    return depth


def _at_least(src_depth: Sequence, tgt_depth: Sequence) -> dict:
    """Map each source depth to the mask of target vertices whose depth is at least as large."""
    by_depth = {}
    for x, t in enumerate(tgt_depth):
        by_depth[t] = by_depth.get(t, 0) | (1 << x)
    levels = sorted(by_depth, reverse=True)
    out, acc, i = {}, 0, 0
    for k in sorted(set(src_depth), reverse=True):
        while i < len(levels) and levels[i] >= k:
            acc |= by_depth[levels[i]]
            i += 1
        out[k] = acc
    return out


def _byte_table(masks) -> list:
    """``table[c][b]`` is the union of ``masks[8c + i]`` over the set bits i of byte b."""
    table = []
    for c in range(0, len(masks), 8):
        row = [0] * 256
        for b in range(1, 256):
            low = b & -b
            i = c + low.bit_length() - 1
            row[b] = row[b ^ low] | (masks[i] if i < len(masks) else 0)
        table.append(row)
    return table


class _Problem:
    def __init__(self, src: Digraph, tgt: Digraph, injective: bool):
        self.src = src
        self.tgt = tgt
        self.injective = injective
        m = tgt.n
        self.out_mask = [0] * m
        self.in_mask = [0] * m
        loop_mask = 0
        for x, y in tgt.arcs:
            self.out_mask[x] |= 1 << y
            self.in_mask[y] |= 1 << x
            if x == y:
                loop_mask |= 1 << x
        self.loop_mask = loop_mask
        self.full = (1 << m) - 1
        self.nbytes = (m + 7) // 8
        big = m > TABLE_THRESHOLD
        self.out_table = _byte_table(self.out_mask) if big else None
        self.in_table = _byte_table(self.in_mask) if big else None
        self.out_nb = [tuple(w for w in src.out_adj[u] if w != u) for u in range(src.n)]
        self.in_nb = [tuple(w for w in src.in_adj[u] if w != u) for u in range(src.n)]

    def initial_domains(self, pins: Mapping[int, int]):
        src, tgt = self.src, self.tgt
        has_out = 0
        has_in = 0
        for x in range(tgt.n):
            if self.out_mask[x]:
                has_out |= 1 << x
            if self.in_mask[x]:
                has_in |= 1 << x
        if self.injective:
            out_deg = [len(set(tgt.out_adj[x]) - {x}) for x in range(tgt.n)]
            in_deg = [len(set(tgt.in_adj[x]) - {x}) for x in range(tgt.n)]
        # a hom carries a directed walk of length k onto one of length k
        sd_out, sd_in = walk_depths(src.out_adj), walk_depths(src.in_adj)
        ok_out = _at_least(sd_out, walk_depths(tgt.out_adj))
        ok_in = _at_least(sd_in, walk_depths(tgt.in_adj))
        doms = []
        for u in range(src.n):
            d = self.full & ok_out[sd_out[u]] & ok_in[sd_in[u]]
            if (u, u) in src.arcs:
                d &= self.loop_mask
            if src.out_adj[u]:
                d &= has_out
            if src.in_adj[u]:
                d &= has_in
            if self.injective:
                ou, iu = len(self.out_nb[u]), len(self.in_nb[u])
                for x in _bits(d):
                    if out_deg[x] < ou or in_deg[x] < iu:
                        d &= ~(1 << x)
            doms.append(d)
        for u, x in pins.items():
            doms[u] &= 1 << x
        return doms

    def _support(self, dom: int, masks, table) -> int:
        acc = 0
        if table is None or dom.bit_count() <= self.nbytes:
            for x in _bits(dom):
                acc |= masks[x]
            return acc
        for c, byte in enumerate(dom.to_bytes(self.nbytes, "little")):
            if byte:
                acc |= table[c][byte]
        return acc

    def arc_consistency(self, doms) -> bool:
        """Prune to a fixpoint; return False when some domain empties."""
        n = self.src.n
        queue = list(range(n))
        queued = [True] * n
        while queue:
            u = queue.pop()
            queued[u] = False
            if not doms[u]:
                return False
            fwd = self._support(doms[u], self.out_mask, self.out_table)
            for w in self.out_nb[u]:
                nd = doms[w] & fwd
                if nd != doms[w]:
                    if not nd:
                        return False
                    doms[w] = nd
                    if not queued[w]:
                        queued[w] = True
                        queue.append(w)
            back = self._support(doms[u], self.in_mask, self.in_table)
            for w in self.in_nb[u]:
                nd = doms[w] & back
                if nd != doms[w]:
                    if not nd:
                        return False
                    doms[w] = nd
                    if not queued[w]:
                        queued[w] = True
                        queue.append(w)
        return all(doms)

    def assign(self, doms, assigned: int, u: int, x: int):
        """Forward-check ``u -> x``; return the child domains or None."""
        new = list(doms)
        new[u] = 1 << x
        om, im = self.out_mask[x], self.in_mask[x]
        for w in self.out_nb[u]:
            if not (assigned >> w) & 1:
                nd = new[w] & om
                if not nd:
                    return None
                new[w] = nd
        for w in self.in_nb[u]:
            if not (assigned >> w) & 1:
                nd = new[w] & im
                if not nd:
                    return None
                new[w] = nd
        if self.injective:
            clear = ~(1 << x)
            for w in range(len(new)):
                if w != u and not (assigned >> w) & 1:
                    nd = new[w] & clear
                    if not nd:
                        return None
                    new[w] = nd
        return new

    def solve(self, pins: Mapping[int, int], limit: EnumLimit) -> Enumeration:
        n = self.src.n
        results = []
        steps = 0
        doms = self.initial_domains(pins)
        if n == 0:
            return Enumeration([()], False, 0)
        if not all(doms) or not self.arc_consistency(doms):
            return Enumeration([], False, 0)
        max_steps = limit.max_steps
        max_results = limit.max_results
        truncated = False
        # frame: [doms, assigned_mask, var, remaining candidate bits]
        stack = []

        def push(doms, assigned):
            best, best_size = -1, None
            for v in range(n):
                if not (assigned >> v) & 1:
                    size = doms[v].bit_count()
                    if best_size is None or size < best_size:
                        best, best_size = v, size
                        if size == 1:
                            break
            stack.append([doms, assigned, best, doms[best]])

        push(doms, 0)
        full_assigned = (1 << n) - 1
        while stack:
            frame = stack[-1]
            doms, assigned, u, remaining = frame
            if not remaining:
                stack.pop()
                continue
            low = remaining & -remaining
            frame[3] = remaining ^ low
            x = low.bit_length() - 1
            steps += 1
            if max_steps is not None and steps > max_steps:
                truncated = True
                break
            child = self.assign(doms, assigned, u, x)
            if child is None:
                continue
            child_assigned = assigned | (1 << u)
            if child_assigned == full_assigned:
                results.append(tuple(d.bit_length() - 1 for d in child))
                if max_results is not None and len(results) >= max_results:
                    truncated = any(f[3] for f in stack)
                    break
                continue
            push(child, child_assigned)
        results.sort()
        return Enumeration(results, truncated, steps)


def _check_pins(g: AnyGraph, h: AnyGraph, pins: Optional[Mapping[int, int]]) -> dict:
    pins = dict(pins or {})
    for u, x in pins.items():
        if not 0 <= u < g.n:
            raise PinOutOfRange(f"pin names source vertex {u}, but source has {g.n} vertices")
        if not 0 <= x < h.n:
            raise PinOutOfRange(f"pin sends {u} to {x}, but target has {h.n} vertices")
    return pins


def hom_tuples(g: AnyGraph, h: AnyGraph, pins: Optional[Mapping[int, int]] = None,
               limit: Optional[EnumLimit] = None, injective: bool = False) -> Enumeration:
    """Raw image tuples of all homomorphisms ``g -> h`` extending ``pins``."""
    if g.directed != h.directed:
        raise BadParameter("cannot map between a directed and an undirected graph")
    pins = _check_pins(g, h, pins)
    limit = limit if limit is not None else EnumLimit()
    if h.n == 0:
        return Enumeration([()] if g.n == 0 else [], False, 0)
    return _Problem(_as_digraph(g), _as_digraph(h), injective).solve(pins, limit)


def hom_enumerate(g: AnyGraph, h: AnyGraph, pins: Optional[Mapping[int, int]] = None,
                  limit: Optional[EnumLimit] = None) -> Enumeration:
    """All homomorphisms ``g -> h`` extending ``pins``, lexicographically ordered."""
    raw = hom_tuples(g, h, pins, limit)
    return Enumeration((VertexMap(g, h, t) for t in raw), raw.truncated, raw.steps)


def hom_exists(g: AnyGraph, h: AnyGraph, pins: Optional[Mapping[int, int]] = None,
               max_steps: Optional[int] = None) -> bool:
    limit = EnumLimit(max_results=1, max_steps=max_steps)
    raw = hom_tuples(g, h, pins, limit)
    if not raw and raw.truncated:
        raise EnumerationTruncated("existence search hit its step limit")
    return bool(raw)


def subgraph_embeddings(pattern: Graph, host: Graph,
                        limit: Optional[EnumLimit] = None) -> Enumeration:
    """All injective edge-preserving maps ``pattern -> host`` (not induced)."""
    raw = hom_tuples(pattern, host, None, limit, injective=True)
    return Enumeration((VertexMap(pattern, host, t, injective=True) for t in raw),
                       raw.truncated, raw.steps)


@dataclass
class EndomorphismMonoid:
    """All endomorphisms of a graph with their composition table.

    ``table[i][j]`` is the index of ``maps[i] o maps[j]`` (apply ``j`` first).
    """

    graph: AnyGraph
    maps: list
    table: list

    @property
    def identity_index(self) -> int:
        return self.maps.index(tuple(range(self.graph.n)))

    def __len__(self):
        return len(self.maps)

    def vertex_maps(self) -> list:
        return [VertexMap(self.graph, self.graph, m) for m in self.maps]


def endomorphisms(g: AnyGraph, limit: Optional[EnumLimit] = None) -> EndomorphismMonoid:
    maps = list(hom_tuples(g, g, None, limit).require_complete("endomorphism enumeration"))
    index = {m: i for i, m in enumerate(maps)}
    table = [[index[tuple(a[x] for x in b)] for b in maps] for a in maps]
    return EndomorphismMonoid(g, maps, table)
