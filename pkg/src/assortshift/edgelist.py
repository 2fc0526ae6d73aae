"""Edge-list files: whitespace-separated pairs, ``#``/``%`` comments.

Tokens may be arbitrary strings; they are remapped to dense ids. Files
whose tokens are all integers keep numeric order (so ``0 1`` style
files round-trip with identity ids); anything else is mapped in order
of first appearance. The original tokens are preserved as labels and
written back out verbatim.
"""

from __future__ import annotations

import os
from typing import Iterable

from .errors import DuplicateEdgeError, ParseError, SelfLoopError
from .graph import Graph, edge_key


def read_edge_list(path: str | os.PathLike) -> Graph:
    token_pairs: list[tuple[str, str, int]] = []  # (u, v, line_no)
    with open(path, "r", encoding="utf-8") as fh:
        for line_no, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#") or line.startswith("%"):
                continue
            parts = line.split()
            if len(parts) < 2:
                raise ParseError(f"expected two node tokens, got {line!r}",
                                 line=line_no)
            token_pairs.append((parts[0], parts[1], line_no))

    tokens: list[str] = []
    seen: set[str] = set()
    for u, v, _ in token_pairs:
        for t in (u, v):
            if t not in seen:
                seen.add(t)
                tokens.append(t)
    if tokens and all(_is_int(t) for t in tokens):
        tokens.sort(key=int)
    index = {t: i for i, t in enumerate(tokens)}

    g = Graph(len(tokens), labels=tokens)
    for u, v, line_no in token_pairs:
        a, b = index[u], index[v]
        if a == b:
            raise SelfLoopError(u, line=line_no)
        if g.has_edge(a, b):
            raise DuplicateEdgeError(u, v, line=line_no)
        g.add_edge(a, b)
    return g


def _is_int(token: str) -> bool:
    try:
        int(token)
    except ValueError:
        return False
    return True


def write_edge_list(g: Graph, path: str | os.PathLike,
                    header: Iterable[str] = ()) -> None:
    """Write edges in canonical order using the graph's labels.

    Isolated nodes are not representable in an edge list and are
    dropped; the written graph is always simple by construction.
    """
    with open(path, "w", encoding="utf-8") as fh:
        for line in header:
            fh.write(f"# {line}\n")
        for u, v in g.edges:
            fh.write(f"{g.label_of(u)} {g.label_of(v)}\n")


def label_edge_set(g: Graph) -> set[tuple[str, str]]:
    """Edges as canonicalized label pairs, for round-trip comparison."""
    out = set()
    for u, v in g.edges:
        lu, lv = g.label_of(u), g.label_of(v)
        out.add((lu, lv) if lu <= lv else (lv, lu))
    return out


def graph_stats(g: Graph) -> dict:
    """The summary row the stats command prints: node count, edge count,
    mean degree, and the assortativity coefficient (None if undefined)."""
    from .errors import DegenerateDegreesError, EmptyGraphError
    from .graph import assortativity

    try:
        r = assortativity(g)
    except (DegenerateDegreesError, EmptyGraphError):
        r = None
    mean_degree = 2 * g.edge_count / g.node_count if g.node_count else 0.0
    return {
        "nodes": g.node_count,
        "edges": g.edge_count,
        "mean_degree": mean_degree,
        "assortativity": r,
    }
