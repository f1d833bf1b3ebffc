"""Independent reference implementations used as test oracles.

Nothing here calls the search engine; the code is deliberately naive.
"""

from itertools import product


def arc_set(g):
    if g.directed:
        return set(g.arcs)
    return set(g.edges) | {(v, u) for u, v in g.edges}


def preserves(g, h, images):
    target = arc_set(h)
    return all((images[u], images[v]) in target for u, v in arc_set(g))


def brute_homs(g, h, injective=False):
    """Every map V(g) -> V(h) filtered by arc preservation, in lexicographic order."""
    out = []
    for images in product(range(h.n), repeat=g.n):
        if injective and len(set(images)) != len(images):
            continue
        if preserves(g, h, images):
            out.append(images)
    return out


def backtrack_homs(g, h):
    """Plain vertex-by-vertex backtracking, for instances too big for ``brute_homs``."""
    src, tgt = arc_set(g), arc_set(h)
    out_nb = [[v for (x, v) in src if x == u] for u in range(g.n)]
    in_nb = [[x for (x, v) in src if v == u] for u in range(g.n)]
    found = []
    images = [None] * g.n

    def ok(u, y):
        for v in out_nb[u]:
            if images[v] is not None and (y, images[v]) not in tgt:
                return False
            if v == u and (y, y) not in tgt:
                return False
        for v in in_nb[u]:
            if images[v] is not None and (images[v], y) not in tgt:
                return False
        return True

    def go(u):
        if u == g.n:
            found.append(tuple(images))
            return
        for y in range(h.n):
            if ok(u, y):
                images[u] = y
                go(u + 1)
                images[u] = None

    go(0)
    return sorted(found)


def brute_monotone(i, j):
    return [v for v in product(range(j + 1), repeat=i + 1)
            if all(v[k] <= v[k + 1] for k in range(i))]


def brute_pp_table(pattern, x_tuple, y_tuple, model):
    """Set of free-variable assignments (x values, y values) satisfying the formula."""
    sat = set()
    for images in brute_homs(pattern, model):
        sat.add((tuple(images[v] for v in x_tuple), tuple(images[v] for v in y_tuple)))
    return sat


def brute_degeneracy(g):
    """max over nonempty vertex subsets of the minimum induced degree."""
    best = 0
    for mask in range(1, 1 << g.n):
        verts = [v for v in range(g.n) if mask >> v & 1]
        degs = [sum(1 for w in g.adj[v] if mask >> w & 1) for v in verts]
        best = max(best, min(degs))
    return best
