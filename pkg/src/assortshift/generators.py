"""Seeded synthetic graphs: uniform G(n, M), small-world ring rewiring,
and preferential attachment."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import BadParametersError
from .graph import Graph


@dataclass(frozen=True)
class GeneratorSpec:
    """Parsed form of a generator string like ``er:1000:5000``."""

    model: str                  # er | ws | ba
    n: int
    m_edges: int | None = None      # er: exact edge count
    k_ring: int | None = None       # ws: ring neighbors per node (even)
    beta: float = 0.1               # ws: rewiring probability
    m_attach: int | None = None     # ba: edges added per new node


def parse_generator_spec(text: str) -> GeneratorSpec:
    """Parse ``er:N:M``, ``ws:N:K[:BETA]`` or ``ba:N:M_ATTACH``."""
    parts = text.lower().split(":")
    model = parts[0]
    try:
        if model == "er" and len(parts) == 3:
            return GeneratorSpec("er", int(parts[1]), m_edges=int(parts[2]))
        if model == "ws" and len(parts) in (3, 4):
            beta = float(parts[3]) if len(parts) == 4 else 0.1
            return GeneratorSpec("ws", int(parts[1]), k_ring=int(parts[2]), beta=beta)
        if model == "ba" and len(parts) == 3:
            return GeneratorSpec("ba", int(parts[1]), m_attach=int(parts[2]))
    except ValueError as exc:
        raise BadParametersError(f"bad generator spec {text!r}: {exc}") from exc
    raise BadParametersError(f"bad generator spec {text!r}")


def generate(spec: GeneratorSpec, seed: int = 0) -> Graph:
    if spec.model == "er":
        return erdos_renyi_gnm(spec.n, spec.m_edges, seed)
    if spec.model == "ws":
        return watts_strogatz(spec.n, spec.k_ring, spec.beta, seed)
    if spec.model == "ba":
        return barabasi_albert(spec.n, spec.m_attach, seed)
    raise BadParametersError(f"unknown model {spec.model!r}")


def erdos_renyi_gnm(n: int, m: int, seed: int = 0) -> Graph:
    """Uniform simple graph with exactly ``m`` edges."""
    if n < 0 or m < 0 or m > n * (n - 1) // 2:
        raise BadParametersError(f"G(n={n}, M={m}) is infeasible")
    rng = random.Random(seed)
    g = Graph(n)
    while g.edge_count < m:
        u = rng.randrange(n)
        v = rng.randrange(n)
        if u == v or g.has_edge(u, v):
            continue
        g.add_edge(u, v)
    return g


def watts_strogatz(n: int, k: int, beta: float = 0.1, seed: int = 0) -> Graph:
    """Ring lattice with ``k`` neighbors per node, each right-hand edge
    rewired to a uniform target with probability ``beta``. Self-loops
    and duplicates are redrawn, so the edge count stays ``n*k/2``."""
    if k % 2 or k <= 0 or k >= n:
        raise BadParametersError(f"ring degree {k} must be even and in (0, n)")
    if not 0.0 <= beta <= 1.0:
        raise BadParametersError(f"beta {beta} outside [0, 1]")
    rng = random.Random(seed)
    g = Graph(n)
    half = k // 2
    for u in range(n):
        for off in range(1, half + 1):
            g.add_edge(u, (u + off) % n)
    for u in range(n):
        for off in range(1, half + 1):
            v = (u + off) % n
            if rng.random() >= beta:
                continue
            if g.degree[u] >= n - 1:
                continue  # no room for a different endpoint
            while True:
                w = rng.randrange(n)
                if w != u and not g.has_edge(u, w):
                    break
            g.remove_edge(u, v)
            g.add_edge(u, w)
    return g


def barabasi_albert(n: int, m: int, seed: int = 0) -> Graph:
    """Preferential attachment: ``m`` initially isolated seed nodes, so
    the first arrival attaches uniformly and every one of the ``n - m``
    arrivals contributes exactly ``m`` edges."""
    if m < 1 or m >= n:
        raise BadParametersError(f"attachment count {m} must be in [1, n)")
    rng = random.Random(seed)
    g = Graph(n)
    repeated: list[int] = []  # nodes repeated once per incident edge
    for new in range(m, n):
        targets: set[int] = set()
        while len(targets) < m:
            if repeated:
                pick = repeated[rng.randrange(len(repeated))]
            else:
                pick = rng.randrange(new)  # first arrival: uniform over seeds
            targets.add(pick)
        for t in sorted(targets):
            g.add_edge(new, t)
            repeated.append(new)
            repeated.append(t)
    return g
