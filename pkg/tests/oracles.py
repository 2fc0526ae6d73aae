"""Independent test oracles, written deliberately apart from the
production code paths they check: plain loops, no numpy, no shared
helpers."""

from __future__ import annotations

import itertools

from assortshift.graph import Graph
from assortshift.rewiring import Orientation, RewiringCandidate, Sign


def brute_force_enumerate(g: Graph, sign: Sign) -> list[RewiringCandidate]:
    """Every sign-matching move by exhaustive pairing of edges.

    O(M^2) double loop with explicit membership checks; mirrors the
    definition, not the production enumerator.
    """
    edges = sorted(g.edges)
    out = []
    for a_idx in range(len(edges)):
        for b_idx in range(a_idx + 1, len(edges)):
            i, j = edges[a_idx]
            k, l = edges[b_idx]
            if len({i, j, k, l}) != 4:
                continue
            deg = g.degree
            for orientation in (Orientation.CROSS, Orientation.STRAIGHT):
                if orientation is Orientation.CROSS:
                    created = [(i, k), (j, l)]
                    value = (deg[i] * deg[k] + deg[j] * deg[l]) \
                        - (deg[i] * deg[j] + deg[k] * deg[l])
                else:
                    created = [(i, l), (j, k)]
                    value = (deg[i] * deg[l] + deg[j] * deg[k]) \
                        - (deg[i] * deg[j] + deg[k] * deg[l])
                if any(g.has_edge(u, v) for u, v in created):
                    continue
                if sign is Sign.POSITIVE and value <= 0:
                    continue
                if sign is Sign.NEGATIVE and value >= 0:
                    continue
                out.append(RewiringCandidate((i, j), (k, l), orientation, value))
    return out


def candidate_key(c: RewiringCandidate) -> tuple:
    return (c.edge_a, c.edge_b, int(c.orientation), c.value)


def pairwise_conflicts(cands: list[RewiringCandidate]) -> set[tuple[int, int]]:
    """All conflicting index pairs by direct set intersection of the
    original edges and of the created edges."""
    olds = [set(c.old_edges) for c in cands]
    news = [set(c.new_edges) for c in cands]
    out = set()
    for a, b in itertools.combinations(range(len(cands)), 2):
        if olds[a] & olds[b] or news[a] & news[b]:
            out.add((a, b))
    return out


def random_simple_graph(rng, n_lo=8, n_hi=12, extra_edges=None) -> Graph:
    """Connected-ish sparse random graph for oracle comparisons: a
    random spanning tree plus a few extra edges."""
    n = rng.randint(n_lo, n_hi)
    g = Graph(n)
    nodes = list(range(n))
    rng.shuffle(nodes)
    for a, b in zip(nodes, nodes[1:]):
        g.add_edge(a, b)
    extra = extra_edges if extra_edges is not None else rng.randint(0, n // 2 + 2)
    attempts = 0
    while extra > 0 and attempts < 200:
        attempts += 1
        u = rng.randrange(n)
        v = rng.randrange(n)
        if u == v or g.has_edge(u, v):
            continue
        g.add_edge(u, v)
        extra -= 1
    return g
