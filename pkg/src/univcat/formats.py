"""Plain-text file formats and DOT export.

Graph files::

    D n m        # or U n m, or DL n m for digraphs with loops
    u v          # m lines, sorted on output

Category files::

    cat t k
    mor <id> <dom> <cod>
    id <object> <morphism>
    comp <f> <g> <h>          # h = g o f

Functor files name their source category on a ``source`` line, either
``source delta <n>`` or ``source cat <path>``, followed by
``obj <object> <graphfile>`` and ``mor <id> <v0> <v1> ...`` lines.
Relative paths are resolved against the functor file's directory.
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterable, Optional, Sequence, Union

from .category import FinCategory, GraphFunctor, delta_truncation, validate_category
from .errors import BadParameter, ConsistencyError, NotAMonoid, ParseError
from .gadget import ReplacedDigraph
from .graphs import AnyGraph, Digraph, Graph

PathLike = Union[str, Path]


def _records(text: str):
    """Yield ``(line number, tokens)`` for non-blank lines with comments stripped."""
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield no, line.split()


def _ints(tokens: Sequence[str], no: int) -> list:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(f"expected integers, got {' '.join(tokens)!r}", no) from None


# graphs

def dumps_graph(g: AnyGraph) -> str:
    if g.directed:
        kind = "DL" if g.loops_allowed else "D"
        pairs = g.sorted_arcs
    else:
        kind = "U"
        pairs = g.sorted_edges
    lines = [f"{kind} {g.n} {len(pairs)}"]
    lines += [f"{u} {v}" for u, v in pairs]
    return "\n".join(lines) + "\n"


def loads_graph(text: str) -> AnyGraph:
    records = list(_records(text))
    if not records:
        raise ParseError("empty graph file", 1)
    no, head = records[0]
    if len(head) != 3 or head[0] not in ("D", "U", "DL"):
        raise ParseError("header must be 'D n m', 'U n m' or 'DL n m'", no)
    kind = head[0]
    n, m = _ints(head[1:], no)
    if n < 0 or m < 0:
        raise ParseError("negative size in header", no)
    body = records[1:]
    if len(body) != m:
        raise ParseError(f"header announces {m} lines, found {len(body)}", no)
    seen = set()
    for no, tokens in body:
        if len(tokens) != 2:
            raise ParseError("expected 'u v'", no)
        u, v = _ints(tokens, no)
        if not (0 <= u < n and 0 <= v < n):
            raise ConsistencyError(f"vertex out of range 0..{n - 1}", no)
        if u == v and kind != "DL":
            raise ConsistencyError(f"loop at {u} not allowed in a {kind} file", no)
        key = (min(u, v), max(u, v)) if kind == "U" else (u, v)
        if key in seen:
            raise ConsistencyError(f"duplicate entry {u} {v}", no)
        seen.add(key)
    if kind == "U":
        return Graph(n, frozenset(seen))
    return Digraph(n, frozenset(seen), loops_allowed=kind == "DL")


def read_graph(path: PathLike) -> AnyGraph:
    return loads_graph(Path(path).read_text())


def write_graph(g: AnyGraph, path: PathLike) -> None:
    Path(path).write_text(dumps_graph(g))


# categories

def dumps_category(K: FinCategory) -> str:
    lines = [f"cat {K.n_objects} {len(K.morphisms)}"]
    lines += [f"mor {f} {a} {b}" for f, (a, b) in enumerate(K.morphisms)]
    lines += [f"id {a} {f}" for a, f in enumerate(K.identities)]
    for f in range(len(K.morphisms)):
        for g in range(len(K.morphisms)):
            if K.cod(f) == K.dom(g):
                lines.append(f"comp {f} {g} {K.compose(f, g)}")
    return "\n".join(lines) + "\n"


def loads_category(text: str) -> FinCategory:
    records = list(_records(text))
    if not records or records[0][1][0] != "cat" or len(records[0][1]) != 3:
        raise ParseError("header must be 'cat t k'", records[0][0] if records else 1)
    no, head = records[0]
    t, k = _ints(head[1:], no)
    morphisms: list = [None] * k
    identities: list = [None] * t
    comp = {}
    for no, tokens in records[1:]:
        tag, vals = tokens[0], _ints(tokens[1:], no)
        if tag == "mor" and len(vals) == 3:
            f, a, b = vals
            if not 0 <= f < k or not (0 <= a < t and 0 <= b < t):
                raise ConsistencyError("morphism or object out of range", no)
            if morphisms[f] is not None:
                raise ConsistencyError(f"morphism {f} declared twice", no)
            morphisms[f] = (a, b)
        elif tag == "id" and len(vals) == 2:
            a, f = vals
            if not (0 <= a < t and 0 <= f < k):
                raise ConsistencyError("identity out of range", no)
            if identities[a] is not None:
                raise ConsistencyError(f"identity of object {a} given twice", no)
            identities[a] = f
        elif tag == "comp" and len(vals) == 3:
            f, g, h = vals
            if not all(0 <= x < k for x in vals):
                raise ConsistencyError("morphism out of range", no)
            if (f, g) in comp:
                raise ConsistencyError(f"composite of {f}, {g} given twice", no)
            comp[(f, g)] = h
        else:
            raise ParseError(f"unrecognised record {' '.join(tokens)!r}", no)
    if None in morphisms:
        raise ConsistencyError(f"morphism {morphisms.index(None)} never declared")
    if None in identities:
        raise ConsistencyError(f"object {identities.index(None)} has no identity")
    K = FinCategory(t, morphisms, identities, comp)
    verdict = validate_category(K)
    if not verdict:
        raise ConsistencyError(f"category law '{verdict.law}' fails at {verdict.witness}")
    return K


def read_category(path: PathLike) -> FinCategory:
    return loads_category(Path(path).read_text())


# functors

def dumps_functor(F: GraphFunctor, graph_paths: Sequence[str], source_line: str) -> str:
    lines = [source_line]
    lines += [f"obj {a} {p}" for a, p in enumerate(graph_paths)]
    for f in range(len(F.source.morphisms)):
        lines.append("mor " + " ".join(str(v) for v in (f, *F.image(f))))
    return "\n".join(lines) + "\n"


def loads_functor(text: str, base_dir: PathLike = ".") -> GraphFunctor:
    base_dir = Path(base_dir)
    source: Optional[FinCategory] = None
    objects, images = {}, {}
    for no, tokens in _records(text):
        tag = tokens[0]
        if tag == "source":
            if len(tokens) == 3 and tokens[1] == "delta":
                source = delta_truncation(_ints(tokens[2:], no)[0])
            elif len(tokens) == 3 and tokens[1] == "cat":
                source = read_category(base_dir / tokens[2])
            else:
                raise ParseError("expected 'source delta <n>' or 'source cat <path>'", no)
        elif tag == "obj" and len(tokens) == 3:
            a = _ints(tokens[1:2], no)[0]
            if a in objects:
                raise ConsistencyError(f"object {a} given twice", no)
            objects[a] = (no, read_graph(base_dir / tokens[2]))
        elif tag == "mor" and len(tokens) >= 2:
            vals = _ints(tokens[1:], no)
            if vals[0] in images:
                raise ConsistencyError(f"morphism {vals[0]} given twice", no)
            images[vals[0]] = (no, tuple(vals[1:]))
        else:
            raise ParseError(f"unrecognised record {' '.join(tokens)!r}", no)
    if source is None:
        raise ParseError("functor file has no 'source' line")
    if sorted(objects) != list(range(source.n_objects)):
        raise ConsistencyError(f"need images of objects 0..{source.n_objects - 1}")
    if sorted(images) != list(range(len(source.morphisms))):
        raise ConsistencyError(f"need images of morphisms 0..{len(source.morphisms) - 1}")
    try:
        return GraphFunctor(source, [objects[a][1] for a in range(source.n_objects)],
                            [images[f][1] for f in range(len(source.morphisms))])
    except (BadParameter, ValueError) as exc:
        raise ConsistencyError(str(exc)) from exc


def read_functor(path: PathLike) -> GraphFunctor:
    path = Path(path)
    return loads_functor(path.read_text(), path.parent)


# monoids

def dumps_monoid(mul: Sequence[Sequence[int]], e: int) -> str:
    lines = [f"monoid {len(mul)} {e}"]
    lines += [" ".join(str(x) for x in row) for row in mul]
    return "\n".join(lines) + "\n"


def loads_monoid(text: str):
    """Return ``(mul, e)``; the table is checked for associativity and identity."""
    from .representation import MonoidTable

    records = list(_records(text))
    if not records or records[0][1][0] != "monoid" or len(records[0][1]) != 3:
        raise ParseError("header must be 'monoid k e'", records[0][0] if records else 1)
    no, head = records[0]
    k, e = _ints(head[1:], no)
    rows = records[1:]
    if len(rows) != k:
        raise ParseError(f"expected {k} table rows, found {len(rows)}", no)
    mul = []
    for no, tokens in rows:
        row = _ints(tokens, no)
        if len(row) != k:
            raise ParseError(f"row has {len(row)} entries, expected {k}", no)
        if any(not 0 <= x < k for x in row):
            raise ConsistencyError(f"entry out of range 0..{k - 1}", no)
        mul.append(row)
    if not 0 <= e < k:
        raise ConsistencyError("identity index out of range", records[0][0])
    try:
        return MonoidTable(k, mul, e)
    except NotAMonoid as exc:
        raise ConsistencyError(str(exc)) from exc


def read_monoid(path: PathLike):
    return loads_monoid(Path(path).read_text())


# replacement provenance

def dumps_sidecar(r: ReplacedDigraph) -> str:
    lines = ["principal " + " ".join(str(p) for p in r.principal)]
    for k, copy in enumerate(r.copies):
        lines.append(f"copy {k} " + " ".join(str(v) for v in copy))
    return "\n".join(lines) + "\n"


def loads_sidecar(text: str):
    """Return ``(principal, copies)`` as tuples."""
    principal, copies = None, {}
    for no, tokens in _records(text):
        vals = _ints(tokens[1:], no)
        if tokens[0] == "principal":
            principal = tuple(vals)
        elif tokens[0] == "copy" and vals:
            copies[vals[0]] = tuple(vals[1:])
        else:
            raise ParseError(f"unrecognised record {tokens[0]!r}", no)
    if principal is None:
        raise ParseError("sidecar has no 'principal' line")
    if sorted(copies) != list(range(len(copies))):
        raise ConsistencyError("copy indices must be 0..m-1")
    return principal, tuple(copies[k] for k in range(len(copies)))


# DOT

def to_dot(g: AnyGraph, highlight: Iterable[int] = (), name: str = "G") -> str:
    marked = set(highlight)
    keyword, edge_op = ("digraph", "->") if g.directed else ("graph", "--")
    pairs = g.sorted_arcs if g.directed else g.sorted_edges
    lines = [f"{keyword} {name} {{"]
    for v in range(g.n):
        style = ' [style=filled, fillcolor="lightblue", shape=doublecircle]' if v in marked else ""
        lines.append(f"  {v}{style};")
    lines += [f"  {u} {edge_op} {v};" for u, v in pairs]
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_dot(g: Union[AnyGraph, ReplacedDigraph], path: PathLike,
               highlight_principals: bool = False) -> None:
    if isinstance(g, ReplacedDigraph):
        marked = g.principal if highlight_principals else ()
        text = to_dot(g.result, marked)
    else:
        text = to_dot(g)
    Path(path).write_text(text)
