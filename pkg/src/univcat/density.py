"""Probing finite samples for subdivided cliques.

Everything here is evidence about the graphs handed in. A finite sample
cannot decide whether a class is nowhere dense; the profile only records
which ``Sub_p(K_N)`` were found.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional, Sequence

from .errors import BadParameter
from .gadget import indicator_for_depth, star_replace
from .graphs import Digraph, Graph, VertexMap, degeneracy, make_standard, subdivide, underlying
from .homs import EnumLimit, subgraph_embeddings

SAMPLE_NOTE = "sample evidence only: no class-level density classification is implied"


@lru_cache(maxsize=None)
def subdivided_clique(N: int, p: int) -> Graph:
    return subdivide(make_standard("K", N), p)


def find_subdivided_clique(g: Graph, p: int, N: int,
                           max_steps: Optional[int] = None) -> Optional[VertexMap]:
    """An embedding of ``Sub_p(K_N)`` into ``g`` as a subgraph, or None.

    A search cut short by ``max_steps`` also yields None; ``density_profile``
    records such cells as truncated.
    """
    found, _ = _search(g, p, N, max_steps)
    return found


def _search(g: Graph, p: int, N: int, max_steps: Optional[int]):
    if N < 2:
        raise BadParameter("N must be at least 2")
    pattern = subdivided_clique(N, p)
    if pattern.n > g.n or len(pattern.edges) > len(g.edges):
        return None, False
    res = subgraph_embeddings(pattern, g, EnumLimit(max_results=1, max_steps=max_steps))
    if res:
        return res[0], False
    return None, res.truncated


@dataclass
class DensityProfile:
    p_max: int
    n_max: int
    table: list
    witnesses: dict = field(default_factory=dict)
    truncated: set = field(default_factory=set)
    upto: bool = False
    note: str = SAMPLE_NOTE

    def dense_entries(self) -> dict:
        """Entries with N >= 3; K_2 subdivisions are paths and say nothing about density."""
        return {p: N for p, N in enumerate(self.table) if N is not None and N >= 3}

    def format(self) -> str:
        lines = [f"# {self.note}", "p\tN"]
        for p, N in enumerate(self.table):
            cell = "none" if N is None else str(N)
            if any(c[0] == p for c in self.truncated):
                cell += " (truncated)"
            lines.append(f"{p}\t{cell}")
        return "\n".join(lines)


def density_profile(sample: Sequence[Graph], p_max: int, n_max: int, upto: bool = False,
                    max_steps: Optional[int] = None) -> DensityProfile:
    """For each p <= p_max, the largest N <= n_max with Sub_p(K_N) in some sample member.

    With ``upto`` a cell also counts Sub_q(K_N) for q < p. N is tried from
    ``n_max`` downward and the first hit ends the row.
    """
    table, witnesses, truncated = [], {}, set()
    for p in range(p_max + 1):
        best = None
        depths = range(p + 1) if upto else (p,)
        for N in range(n_max, 1, -1):
            for k, g in enumerate(sample):
                for q in depths:
                    emb, cut = _search(g, q, N, max_steps)
                    if cut:
                        truncated.add((p, N))
                    if emb is not None:
                        best = N
                        witnesses[(p, N)] = (k, q, emb)
                        break
                if best is not None:
                    break
            if best is not None:
                break
        table.append(best)
    return DensityProfile(p_max, n_max, table, witnesses, truncated, upto)


def monotone_in_n(profile: DensityProfile, sample: Sequence[Graph]) -> bool:
    """Every N' between 2 and the recorded N is also found (Sub_p(K_N') lies in Sub_p(K_N))."""
    for p, N in enumerate(profile.table):
        if N is None:
            continue
        depths = range(p + 1) if profile.upto else (p,)
        for n2 in range(2, N):
            if not any(find_subdivided_clique(g, q, n2) is not None
                       for g in sample for q in depths):
                return False
    return True


@dataclass
class ReplacedClassProfile:
    members: list
    profile: DensityProfile
    degeneracies: list


def replaced_class_profile(bases: Sequence[Digraph], d: int, p_max: Optional[int] = None,
                           n_max: int = 4) -> ReplacedClassProfile:
    """Profile the underlying graphs of ``G * I_d`` and report each one's degeneracy."""
    gadget = indicator_for_depth(d)
    members = [underlying(star_replace(g, gadget).result) for g in bases]
    p_max = d if p_max is None else p_max
    profile = density_profile(members, p_max, n_max)
    degs = [degeneracy(m)[0] if m.n else 0 for m in members]
    return ReplacedClassProfile(members, profile, degs)
