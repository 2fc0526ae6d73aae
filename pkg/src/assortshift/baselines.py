"""Comparison rewiring strategies: targeted, random, and degree-difference.

All three share the same reconnection rule: given two edges with four
distinct endpoints, sort the endpoints by degree k1 >= k2 >= k3 >= k4
(ties broken by node id) and reconnect (k1,k2)+(k3,k4) in assortative
mode or (k1,k4)+(k2,k3) in disassortative mode. They differ only in how
edge pairs are picked. Unlike the greedy attack they operate on the
live graph with no precomputed pool, so a draw is simply rejected when
its reconnection is impossible.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .graph import Graph, assortativity_sums, edge_key
from .greedy import AttackResult, TraceStep, _finish
from .rewiring import Edge, Mode, Orientation, make_candidate, r_from_delta


@dataclass
class BaselineConfig:
    mode: Mode
    budget_pairs: int
    rng_seed: int = 0
    diff_fraction: float = 0.3
    max_attempts: int | None = None  # defaults to 100 * budget_pairs

    @property
    def attempts(self) -> int:
        if self.max_attempts is not None:
            return self.max_attempts
        return 100 * self.budget_pairs


def _degree_pairing(g: Graph, e1: Edge, e2: Edge, mode: Mode) -> tuple[Edge, Edge]:
    """New edges from the degree-sorted reconnection rule."""
    nodes = sorted([e1[0], e1[1], e2[0], e2[1]],
                   key=lambda u: (-g.degree[u], u))
    n1, n2, n3, n4 = nodes
    if mode is Mode.ASSORTATIVE:
        return edge_key(n1, n2), edge_key(n3, n4)
    return edge_key(n1, n4), edge_key(n2, n3)


def _try_reconnect(g: Graph, e1: Edge, e2: Edge, mode: Mode):
    """Apply the reconnection rule if legal on the current graph.

    Returns the applied move as a RewiringCandidate, or None when the
    new edges already exist (which also covers the no-op case where the
    pairing reproduces the removed edges).
    """
    if len({e1[0], e1[1], e2[0], e2[1]}) != 4:
        return None
    new1, new2 = _degree_pairing(g, e1, e2, mode)
    if g.has_edge(*new1) or g.has_edge(*new2):
        return None
    for orient in (Orientation.CROSS, Orientation.STRAIGHT):
        cand = make_candidate(g, e1, e2, orient)
        if set(cand.new_edges) == {new1, new2}:
            g.remove_edge(*e1)
            g.remove_edge(*e2)
            g.add_edge(*new1)
            g.add_edge(*new2)
            return cand
    return None


def random_rewiring(g: Graph, cfg: BaselineConfig) -> AttackResult:
    """Uniformly drawn edge pairs, degree-sorted reconnection.

    Draws two distinct edges from the current graph each attempt and
    redraws on any rejection; stops after the budget is met or
    ``cfg.attempts`` draws, whichever comes first.
    """
    base = assortativity_sums(g)
    work = g.copy()
    rng = random.Random(cfg.rng_seed)
    edge_list = work.edges  # in-place snapshot; M never changes
    m = len(edge_list)
    selected = []
    trace = []
    dp = 0
    attempts = 0
    while len(selected) < cfg.budget_pairs and attempts < cfg.attempts:
        attempts += 1
        if m < 2:
            break
        i1 = rng.randrange(m)
        i2 = rng.randrange(m)
        while i2 == i1:
            i2 = rng.randrange(m)
        e1, e2 = edge_list[i1], edge_list[i2]
        cand = _try_reconnect(work, e1, e2, cfg.mode)
        if cand is None:
            continue
        # e1 and e2 are gone; keep the sample array current in place
        edge_list[i1], edge_list[i2] = cand.new_edges
        dp += cand.value
        selected.append(cand)
        trace.append(TraceStep(len(selected), dp, r_from_delta(base, dp)))
    return _finish(work, base, selected, trace,
                   len(selected) < cfg.budget_pairs)


def target_rewiring(g: Graph, cfg: BaselineConfig) -> AttackResult:
    """Deterministic strategy aimed at the highest-degree endpoints.

    Edges of the input graph are ranked by the degree of their
    higher-degree endpoint (ties: endpoint degree sum, then edge id).
    Repeatedly take the best-ranked unused edge and the next unused edge
    sharing no endpoint with it, attempt the reconnection rule, and mark
    both used whether or not the attempt was legal.
    """
    base = assortativity_sums(g)
    work = g.copy()
    ranked = sorted(
        g.edges,
        key=lambda e: (-max(g.degree[e[0]], g.degree[e[1]]),
                       -(g.degree[e[0]] + g.degree[e[1]]), e))
    used = [False] * len(ranked)
    selected = []
    trace = []
    dp = 0
    while len(selected) < cfg.budget_pairs:
        first = next((i for i, u in enumerate(used) if not u), None)
        if first is None:
            break
        e1 = ranked[first]
        second = next(
            (j for j in range(first + 1, len(ranked))
             if not used[j] and not (set(ranked[j]) & set(e1))), None)
        if second is None:
            used[first] = True
            continue
        e2 = ranked[second]
        used[first] = used[second] = True
        cand = _try_reconnect(work, e1, e2, cfg.mode)
        if cand is None:
            continue
        dp += cand.value
        selected.append(cand)
        trace.append(TraceStep(len(selected), dp, r_from_delta(base, dp)))
    return _finish(work, base, selected, trace,
                   len(selected) < cfg.budget_pairs)


def degree_diff_rewiring(g: Graph, cfg: BaselineConfig) -> AttackResult:
    """Random pairs drawn from the extreme slice of the degree-difference
    ranking.

    Edges of the input graph are sorted by |deg(u) - deg(v)| descending.
    Assortative mode samples pairs from the top ``diff_fraction`` of the
    list, disassortative from the bottom slice. The slice is fixed at
    the start; a drawn edge that was already rewired away is rejected
    like any other bad draw.
    """
    base = assortativity_sums(g)
    work = g.copy()
    rng = random.Random(cfg.rng_seed)
    by_diff = sorted(
        g.edges,
        key=lambda e: (-abs(g.degree[e[0]] - g.degree[e[1]]), e))
    cut = max(2, int(cfg.diff_fraction * len(by_diff)))
    if cfg.mode is Mode.ASSORTATIVE:
        slice_edges = by_diff[:cut]
    else:
        slice_edges = by_diff[-cut:]
    selected = []
    trace = []
    dp = 0
    attempts = 0
    while len(selected) < cfg.budget_pairs and attempts < cfg.attempts:
        attempts += 1
        if len(slice_edges) < 2:
            break
        e1, e2 = rng.sample(slice_edges, 2)
        if not (work.has_edge(*e1) and work.has_edge(*e2)):
            continue
        cand = _try_reconnect(work, e1, e2, cfg.mode)
        if cand is None:
            continue
        dp += cand.value
        selected.append(cand)
        trace.append(TraceStep(len(selected), dp, r_from_delta(base, dp)))
    return _finish(work, base, selected, trace,
                   len(selected) < cfg.budget_pairs)
