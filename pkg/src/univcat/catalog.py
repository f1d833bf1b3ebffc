"""Bundled catalogs, generated by exhaustive enumeration and isomorphism dedup."""

from __future__ import annotations

import random
from functools import lru_cache
from itertools import combinations, permutations, product

from .category import FinCategory
from .graphs import Digraph, canonical_form

CORPUS_SEED = 20240601


def _dedup(graphs) -> list:
    seen, out = set(), []
    for g in graphs:
        key = canonical_form(g)
        if key not in seen:
            seen.add(key)
            out.append(g)
    return out


@lru_cache(maxsize=None)
def oriented_catalog(max_n: int = 3) -> tuple:
    """Every oriented graph on 1..max_n vertices, one per isomorphism class.

    Order: by vertex count, then arc count, then sorted arc list.
    """
    out = []
    for n in range(1, max_n + 1):
        pairs = list(combinations(range(n), 2))
        found = []
        # each unordered pair: absent, forward or backward
        for choice in product((None, 0, 1), repeat=len(pairs)):
            arcs = frozenset((u, v) if c == 0 else (v, u)
                             for (u, v), c in zip(pairs, choice) if c is not None)
            found.append(Digraph(n, arcs))
        found.sort(key=lambda g: (len(g.arcs), g.sorted_arcs))
        out.extend(_dedup(found))
    return tuple(out)


def _all_digraphs(n: int, loops: bool):
    pairs = [(u, v) for u in range(n) for v in range(n) if loops or u != v]
    for bits in range(1 << len(pairs)):
        yield Digraph(n, frozenset(p for i, p in enumerate(pairs) if bits >> i & 1), loops)


@lru_cache(maxsize=None)
def digraph_corpus(seed: int = CORPUS_SEED, n_random: int = 24) -> tuple:
    """Small digraphs for oracle tests.

    All digraphs (loops allowed) on at most 2 vertices, all loopless digraphs
    on 3 vertices up to isomorphism, and ``n_random`` seeded random digraphs
    on 3 or 4 vertices that may carry loops.
    """
    out = [Digraph(0, frozenset())]
    for n in (1, 2):
        out.extend(_dedup(_all_digraphs(n, True)))
    out.extend(_dedup(_all_digraphs(3, False)))
    rng = random.Random(seed)
    for _ in range(n_random):
        n = rng.choice((3, 4))
        arcs = frozenset((u, v) for u in range(n) for v in range(n)
                         if rng.random() < (0.15 if u == v else 0.35))
        out.append(Digraph(n, arcs, loops_allowed=True))
    return tuple(out)


def _is_monoid(mul, k: int) -> bool:
    return all(mul[mul[a][b]][c] == mul[a][mul[b][c]]
               for a in range(k) for b in range(k) for c in range(k))


def _monoid_key(mul, k: int) -> tuple:
    """Lexicographically least table over relabellings fixing the identity 0."""
    best = None
    for rest in permutations(range(1, k)):
        p = (0,) + rest
        inv = [0] * k
        for i, x in enumerate(p):
            inv[x] = i
        table = tuple(tuple(p[mul[inv[a]][inv[b]]] for b in range(k)) for a in range(k))
        if best is None or table < best:
            best = table
    return best


@lru_cache(maxsize=None)
def monoid_catalog(max_order: int = 3) -> tuple:
    """All monoids of order 1..max_order up to isomorphism, as ``(mul, e)`` with ``e = 0``."""
    out = []
    for k in range(1, max_order + 1):
        free = [(a, b) for a in range(1, k) for b in range(1, k)]
        seen = set()
        for values in product(range(k), repeat=len(free)):
            mul = [[b if a == 0 else (a if b == 0 else 0) for b in range(k)] for a in range(k)]
            for (a, b), v in zip(free, values):
                mul[a][b] = v
            if not _is_monoid(mul, k):
                continue
            key = _monoid_key(mul, k)
            if key not in seen:
                seen.add(key)
                out.append((key, 0))
    return tuple(out)


def discrete_category(t: int) -> FinCategory:
    """``t`` objects and identities only."""
    return FinCategory(t, [(a, a) for a in range(t)], list(range(t)),
                       {(a, a): a for a in range(t)})


def arrow_category() -> FinCategory:
    """Objects 0 and 1, identities 0 and 1, and one morphism 2: 0 -> 1."""
    comp = {(0, 0): 0, (1, 1): 1, (0, 2): 2, (2, 1): 2}
    return FinCategory(2, [(0, 0), (1, 1), (0, 1)], [0, 1], comp)
