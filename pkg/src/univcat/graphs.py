"""Finite digraphs and graphs on vertices ``0..n-1`` plus standard constructions.

Both classes are immutable; derived adjacency data is cached on first use.
"""

from __future__ import annotations

import enum
import heapq
from dataclasses import dataclass
from functools import cached_property
from itertools import permutations
from typing import Iterable, Sequence, Union

from .errors import BadParameter, EmptyGraph, NotAHom


@dataclass(frozen=True)
class Digraph:
    n: int
    arcs: frozenset
    loops_allowed: bool = False

    def __post_init__(self):
        if self.n < 0:
            raise BadParameter("vertex count must be nonnegative")
        arcs = frozenset((int(u), int(v)) for u, v in self.arcs)
        for u, v in arcs:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise BadParameter(f"arc {(u, v)} out of range for n={self.n}")
            if u == v and not self.loops_allowed:
                raise BadParameter(f"loop at {u} but loops are not allowed")
        object.__setattr__(self, "arcs", arcs)

    @classmethod
    def from_arcs(cls, n: int, arcs: Iterable, loops_allowed: bool = False) -> "Digraph":
        return cls(n, frozenset(arcs), loops_allowed)

    @property
    def directed(self) -> bool:
        return True

    @cached_property
    def sorted_arcs(self) -> list:
        return sorted(self.arcs)

    @cached_property
    def out_adj(self) -> tuple:
        adj = [[] for _ in range(self.n)]
        for u, v in self.sorted_arcs:
            adj[u].append(v)
        return tuple(tuple(a) for a in adj)

    @cached_property
    def in_adj(self) -> tuple:
        adj = [[] for _ in range(self.n)]
        for u, v in self.sorted_arcs:
            adj[v].append(u)
        return tuple(tuple(a) for a in adj)

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self.arcs

    def has_loops(self) -> bool:
        return any(u == v for u, v in self.arcs)

    def is_oriented(self) -> bool:
        """No loops and no pair of opposite arcs."""
        return all(u != v and (v, u) not in self.arcs for u, v in self.arcs)

    def isolated_vertices(self) -> list:
        return [v for v in range(self.n) if not self.out_adj[v] and not self.in_adj[v]]

    def __repr__(self):
        tag = "DL" if self.loops_allowed else "D"
        return f"Digraph({tag} n={self.n} arcs={self.sorted_arcs})"


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset

    def __post_init__(self):
        if self.n < 0:
            raise BadParameter("vertex count must be nonnegative")
        edges = set()
        for u, v in self.edges:
            u, v = int(u), int(v)
            if u == v:
                raise BadParameter(f"loop at {u} in undirected graph")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise BadParameter(f"edge {(u, v)} out of range for n={self.n}")
            edges.add((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", frozenset(edges))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable) -> "Graph":
        return cls(n, frozenset(edges))

    @property
    def directed(self) -> bool:
        return False

    @cached_property
    def sorted_edges(self) -> list:
        return sorted(self.edges)

    @cached_property
    def adj(self) -> tuple:
        adj = [[] for _ in range(self.n)]
        for u, v in self.sorted_edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def as_symmetric_digraph(self) -> Digraph:
        arcs = set(self.edges) | {(v, u) for u, v in self.edges}
        return Digraph(self.n, frozenset(arcs))

    def __repr__(self):
        return f"Graph(n={self.n} edges={self.sorted_edges})"


AnyGraph = Union[Digraph, Graph]


def _preserves(source: AnyGraph, target: AnyGraph, images: Sequence[int]) -> bool:
    if source.directed:
        return all((images[u], images[v]) in target.arcs for u, v in source.arcs)
    return all(target.has_edge(images[u], images[v]) for u, v in source.edges)


@dataclass(frozen=True)
class VertexMap:
    """A total map between vertex sets, checked to be a homomorphism.

    With ``injective=True`` the map must also be injective (an embedding in
    the subgraph sense).
    """

    source: AnyGraph
    target: AnyGraph
    images: tuple
    injective: bool = False

    def __post_init__(self):
        images = tuple(int(x) for x in self.images)
        object.__setattr__(self, "images", images)
        if self.source.directed != self.target.directed:
            raise NotAHom("source and target must both be directed or both undirected")
        if len(images) != self.source.n:
            raise NotAHom(f"map has {len(images)} values for {self.source.n} source vertices")
        if any(not 0 <= x < self.target.n for x in images):
            raise NotAHom("image outside target vertex range")
        if not _preserves(self.source, self.target, images):
            raise NotAHom(f"map {images} does not preserve adjacency")
        if self.injective and len(set(images)) != len(images):
            raise NotAHom(f"map {images} is not injective")

    def __call__(self, v: int) -> int:
        return self.images[v]

    def __len__(self):
        return len(self.images)

    def then(self, other: "VertexMap") -> "VertexMap":
        """Apply ``self`` first and ``other`` second."""
        if other.source != self.target:
            raise NotAHom("maps are not composable")
        return VertexMap(self.source, other.target,
                         tuple(other.images[x] for x in self.images),
                         self.injective and other.injective)

    @classmethod
    def identity(cls, g: AnyGraph) -> "VertexMap":
        return cls(g, g, tuple(range(g.n)))


def is_hom(source: AnyGraph, target: AnyGraph, images: Sequence[int]) -> bool:
    if len(images) != source.n or any(not 0 <= x < target.n for x in images):
        return False
    return _preserves(source, target, images)


class Kind(enum.Enum):
    COMPLETE = "K"
    CYCLE = "C"
    DICYCLE = "DC"
    DIPATH = "DP"
    RT = "RT"


def make_standard(kind, n: int) -> AnyGraph:
    """Build K_n, C_n, directed C_n, directed path on n vertices, or RT_n.

    RT_n is the reflexive transitive tournament: arcs (i, j) for all i <= j.
    """
    kind = Kind(kind) if not isinstance(kind, Kind) else kind
    if n < 1:
        raise BadParameter("n must be at least 1")
    if kind is Kind.COMPLETE:
        return Graph(n, frozenset((i, j) for i in range(n) for j in range(i + 1, n)))
    if kind is Kind.CYCLE:
        if n < 3:
            raise BadParameter("cycles need n >= 3")
        return Graph(n, frozenset((i, (i + 1) % n) for i in range(n)))
    if kind is Kind.DICYCLE:
        if n < 3:
            raise BadParameter("cycles need n >= 3")
        return Digraph(n, frozenset((i, (i + 1) % n) for i in range(n)))
    if kind is Kind.DIPATH:
        return Digraph(n, frozenset((i, i + 1) for i in range(n - 1)))
    return Digraph(n, frozenset((i, j) for i in range(n) for j in range(i, n)), True)


def subdivide(g: Graph, p: int) -> Graph:
    """Replace every edge by a path with ``p`` fresh internal vertices.

    Fresh vertices are numbered ``n + e*p + k`` where ``e`` is the edge's
    position in sorted order and ``k`` counts from the smaller endpoint.
    """
    if p < 0:
        raise BadParameter("p must be nonnegative")
    if p == 0:
        return g
    edges = []
    for e, (u, v) in enumerate(g.sorted_edges):
        path = [u] + [g.n + e * p + k for k in range(p)] + [v]
        edges.extend(zip(path, path[1:]))
    return Graph(g.n + p * len(g.edges), frozenset(edges))


def subdivision_vertex(n: int, edge_index: int, p: int, k: int) -> int:
    """Index of the k-th internal vertex (0-based) on the given edge of a subdivision."""
    return n + edge_index * p + k


def underlying(d: Digraph) -> Graph:
    return Graph(d.n, frozenset((u, v) for u, v in d.arcs if u != v))


def cycles_upto(g: Graph, max_len: int) -> list:
    """Every simple cycle of length <= max_len, as canonical vertex tuples.

    The canonical form starts at the least vertex and walks toward the smaller
    of its two cycle neighbours. The list is sorted by (length, tuple).
    """
    if max_len < 3:
        raise BadParameter("cycle length bound must be at least 3")
    adj = g.adj
    found = []
    for s in range(g.n):
        path = [s]
        on_path = {s}

        def extend(v):
            for w in adj[v]:
                if w == s and len(path) >= 3 and path[1] < path[-1]:
                    found.append(tuple(path))
                elif w > s and w not in on_path and len(path) < max_len:
                    path.append(w)
                    on_path.add(w)
                    extend(w)
                    path.pop()
                    on_path.discard(w)

        extend(s)
    found.sort(key=lambda c: (len(c), c))
    return found


def degeneracy(g: Graph):
    """Return ``(k, order)``: the degeneracy and a min-degree elimination order.

    Ties are broken by the smaller vertex index.
    """
    if g.n == 0:
        raise EmptyGraph("degeneracy of the empty graph is undefined")
    deg = [len(a) for a in g.adj]
    heap = [(d, v) for v, d in enumerate(deg)]
    heapq.heapify(heap)
    removed = [False] * g.n
    order = []
    k = 0
    while heap:
        d, v = heapq.heappop(heap)
        if removed[v] or d != deg[v]:
            continue
        removed[v] = True
        order.append(v)
        k = max(k, d)
        for w in g.adj[v]:
            if not removed[w]:
                deg[w] -= 1
                heapq.heappush(heap, (deg[w], w))
    return k, order


def relabel(g: AnyGraph, perm: Sequence[int]) -> AnyGraph:
    """Image of ``g`` under the vertex bijection ``v -> perm[v]``."""
    if g.directed:
        return Digraph(g.n, frozenset((perm[u], perm[v]) for u, v in g.arcs), g.loops_allowed)
    return Graph(g.n, frozenset((perm[u], perm[v]) for u, v in g.edges))


def _edge_set(g: AnyGraph) -> frozenset:
    return g.arcs if g.directed else g.edges


def canonical_form(g: AnyGraph):
    """Brute-force canonical key; only meant for graphs with a handful of vertices."""
    best = None
    for perm in permutations(range(g.n)):
        key = tuple(sorted(_edge_set(relabel(g, perm))))
        if best is None or key < best:
            best = key
    return (g.directed, g.n, best)


def is_isomorphic(g: AnyGraph, h: AnyGraph) -> bool:
    if g.directed != h.directed or g.n != h.n or len(_edge_set(g)) != len(_edge_set(h)):
        return False
    return canonical_form(g) == canonical_form(h)
