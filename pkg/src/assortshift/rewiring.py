"""Degree-preserving rewiring moves and candidate enumeration.

A move takes two edges (i,j) and (k,l) with four distinct endpoints and
replaces them with one of the two alternative perfect matchings on the
same endpoints, so every node keeps its degree. Each move carries an
exact integer ``value``: the change it causes in the degree-product sum,
which is the only part of the assortativity coefficient a
degree-preserving move can shift.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum, IntEnum
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import InfeasibleRewiringError
from .graph import AssortativitySums, Edge, Graph, assortativity_from_sums, edge_key


class Orientation(IntEnum):
    """Which alternative matching of the four endpoints is used.

    For edges (i,j) and (k,l): CROSS creates (i,k) and (j,l), STRAIGHT
    creates (i,l) and (j,k).
    """

    CROSS = 0
    STRAIGHT = 1


class Sign(Enum):
    POSITIVE = "positive"
    NEGATIVE = "negative"


class Mode(Enum):
    ASSORTATIVE = "assortative"
    DISASSORTATIVE = "disassortative"

    @property
    def sign(self) -> Sign:
        return Sign.POSITIVE if self is Mode.ASSORTATIVE else Sign.NEGATIVE


def candidate_value(d_i: int, d_j: int, d_k: int, d_l: int,
                    orientation: Orientation) -> int:
    """Exact change in the degree-product sum for one move.

    ``d_i, d_j`` are the degrees of the first edge's endpoints and
    ``d_k, d_l`` of the second's. Depends only on these four degrees and
    the orientation, never on the rest of the graph.
    """
    if orientation is Orientation.CROSS:
        return (d_i * d_k + d_j * d_l) - (d_i * d_j + d_k * d_l)
    return (d_i * d_l + d_j * d_k) - (d_i * d_j + d_k * d_l)


@dataclass(frozen=True)
class RewiringCandidate:
    """One feasible move: an unordered pair of endpoint-disjoint edges
    plus the orientation to apply, with its precomputed value."""

    edge_a: Edge
    edge_b: Edge
    orientation: Orientation
    value: int

    @property
    def new_edges(self) -> tuple[Edge, Edge]:
        """The two edges the move creates, each canonical, sorted."""
        i, j = self.edge_a
        k, l = self.edge_b
        if self.orientation is Orientation.CROSS:
            pair = (edge_key(i, k), edge_key(j, l))
        else:
            pair = (edge_key(i, l), edge_key(j, k))
        return tuple(sorted(pair))  # type: ignore[return-value]

    @property
    def old_edges(self) -> tuple[Edge, Edge]:
        return (self.edge_a, self.edge_b)


def make_candidate(g: Graph, edge_a: Edge, edge_b: Edge,
                   orientation: Orientation) -> RewiringCandidate:
    """Candidate for two existing edges of ``g`` with the value computed
    from current degrees. Raises if the edges share an endpoint."""
    i, j = edge_key(*edge_a)
    k, l = edge_key(*edge_b)
    if (i, j) > (k, l):
        # orientation is unaffected: with canonical edges, CROSS always
        # matches the two lower endpoints together
        (i, j), (k, l) = (k, l), (i, j)
    if len({i, j, k, l}) != 4:
        raise ValueError("edges share an endpoint")
    d = g.degree
    value = candidate_value(d[i], d[j], d[k], d[l], orientation)
    return RewiringCandidate((i, j), (k, l), orientation, value)


def is_feasible(g: Graph, c: RewiringCandidate) -> bool:
    """True iff both original edges still exist in ``g`` and both edges
    the move would create are absent from ``g``."""
    if not (g.has_edge(*c.edge_a) and g.has_edge(*c.edge_b)):
        return False
    n1, n2 = c.new_edges
    return not g.has_edge(*n1) and not g.has_edge(*n2)


def apply_rewiring(g: Graph, c: RewiringCandidate) -> Graph:
    """Apply the move in place; degrees are untouched and the
    degree-product sum changes by exactly ``c.value``."""
    if not is_feasible(g, c):
        raise InfeasibleRewiringError(
            f"cannot rewire {c.edge_a}, {c.edge_b} ({c.orientation.name})")
    g.remove_edge(*c.edge_a)
    g.remove_edge(*c.edge_b)
    n1, n2 = c.new_edges
    g.add_edge(*n1)
    g.add_edge(*n2)
    return g


def delta_p(selected: Iterable[RewiringCandidate]) -> int:
    """Total change in the degree-product sum of a move sequence."""
    return sum(c.value for c in selected)


def r_from_delta(base: AssortativitySums, dp: int) -> float:
    """Assortativity of the rewired graph straight from the original
    sums and the exact total change in the degree-product sum."""
    return assortativity_from_sums(base, dp)


class CandidatePool:
    """Sign-filtered, sorted enumeration of all feasible moves.

    Backed by flat numpy arrays (edge indices into a canonical edge
    snapshot, orientation, value) so large graphs stay cheap; candidates
    materialize lazily via :meth:`candidate`. The positive pool is
    sorted by descending value, the negative pool ascending, ties broken
    by (edge_a, edge_b, orientation) lexicographically.
    """

    def __init__(self, sign: Sign, edges: np.ndarray, ea: np.ndarray,
                 eb: np.ndarray, orient: np.ndarray, value: np.ndarray):
        self.sign = sign
        self.edges = edges          # (M, 2) snapshot, lexicographically sorted
        self.ea = ea                # index of first edge, ea < eb
        self.eb = eb
        self.orient = orient
        self.value = value

    def __len__(self) -> int:
        return len(self.value)

    def candidate(self, idx: int) -> RewiringCandidate:
        a = self.edges[self.ea[idx]]
        b = self.edges[self.eb[idx]]
        return RewiringCandidate(
            (int(a[0]), int(a[1])), (int(b[0]), int(b[1])),
            Orientation(int(self.orient[idx])), int(self.value[idx]))

    def __getitem__(self, idx: int) -> RewiringCandidate:
        return self.candidate(idx)

    def __iter__(self) -> Iterator[RewiringCandidate]:
        for idx in range(len(self)):
            yield self.candidate(idx)

    def __repr__(self) -> str:
        return f"CandidatePool({self.sign.value}, {len(self)} candidates)"


def _sorted_membership(keys: np.ndarray, queries: np.ndarray) -> np.ndarray:
    """Vectorized membership of ``queries`` in the sorted array ``keys``."""
    pos = np.searchsorted(keys, queries)
    pos_clipped = np.minimum(pos, len(keys) - 1)
    return keys[pos_clipped] == queries


def enumerate_candidates(g: Graph, sign: Sign,
                         max_candidates: int | None = None) -> CandidatePool:
    """Enumerate every feasible move of the requested value sign.

    Scans all unordered pairs of endpoint-disjoint edges and both
    orientations, keeps those whose created edges are absent from ``g``
    and whose value matches ``sign`` (strictly positive or strictly
    negative; zero-value moves belong to neither pool), and returns them
    deterministically sorted. ``max_candidates`` keeps only the
    strongest moves by absolute value, bounding memory on dense graphs.
    """
    def empty_pool() -> CandidatePool:
        return CandidatePool(
            sign, np.zeros((0, 2), dtype=np.int64), np.zeros(0, dtype=np.int64),
            np.zeros(0, dtype=np.int64), np.zeros(0, dtype=np.uint8),
            np.zeros(0, dtype=np.int64))

    m = g.edge_count
    if m < 2:
        return empty_pool()

    edges = np.asarray(g.edges, dtype=np.int64)  # sorted canonically
    deg = np.asarray(g.degree, dtype=np.int64)
    n = g.node_count
    edge_keys = np.sort(edges[:, 0] * n + edges[:, 1])

    d1 = deg[edges[:, 0]]  # degree of lower endpoint per edge
    d2 = deg[edges[:, 1]]
    want_positive = sign is Sign.POSITIVE

    parts_ea: list[np.ndarray] = []
    parts_eb: list[np.ndarray] = []
    parts_or: list[np.ndarray] = []
    parts_val: list[np.ndarray] = []
    kept = 0

    block = max(1, min(256, (1 << 22) // max(m, 1)))
    j_index = np.arange(m)
    for i0 in range(0, m - 1, block):
        i1 = min(i0 + block, m - 1)
        rows = np.arange(i0, i1)
        a1 = edges[rows, 0][:, None]
        a2 = edges[rows, 1][:, None]
        da1 = d1[rows][:, None]
        da2 = d2[rows][:, None]
        b1 = edges[None, :, 0]
        b2 = edges[None, :, 1]
        base = (j_index[None, :] > rows[:, None])
        base &= (b1 != a1) & (b1 != a2) & (b2 != a1) & (b2 != a2)
        if not base.any():
            continue
        db1 = d1[None, :]
        db2 = d2[None, :]
        for orient in (Orientation.CROSS, Orientation.STRAIGHT):
            if orient is Orientation.CROSS:
                # creates (a1, b1) and (a2, b2)
                val = (da1 - db2) * (db1 - da2)
                p1, q1 = a1, b1
                p2, q2 = a2, b2
            else:
                # creates (a1, b2) and (a2, b1)
                val = (da1 - db1) * (db2 - da2)
                p1, q1 = a1, b2
                p2, q2 = a2, b1
            mask = base & ((val > 0) if want_positive else (val < 0))
            if not mask.any():
                continue
            k1 = np.minimum(p1, q1) * n + np.maximum(p1, q1)
            k2 = np.minimum(p2, q2) * n + np.maximum(p2, q2)
            r_idx, c_idx = np.nonzero(mask)
            ok = ~_sorted_membership(edge_keys, k1[r_idx, c_idx])
            ok &= ~_sorted_membership(edge_keys, k2[r_idx, c_idx])
            if not ok.any():
                continue
            parts_ea.append((r_idx[ok] + i0).astype(np.int64))
            parts_eb.append(c_idx[ok].astype(np.int64))
            parts_or.append(np.full(int(ok.sum()), int(orient), dtype=np.uint8))
            parts_val.append(val[r_idx, c_idx][ok].astype(np.int64))
            kept += int(ok.sum())
        # bound memory when a cap is requested
        if max_candidates is not None and kept > 4 * max_candidates:
            ea, eb, orient_arr, value = _compact(parts_ea, parts_eb, parts_or, parts_val)
            order = _pool_order(value, ea, eb, orient_arr, want_positive)[:max_candidates]
            parts_ea = [ea[order]]
            parts_eb = [eb[order]]
            parts_or = [orient_arr[order]]
            parts_val = [value[order]]
            kept = len(order)

    if not parts_ea:
        return empty_pool()
    ea, eb, orient_arr, value = _compact(parts_ea, parts_eb, parts_or, parts_val)
    order = _pool_order(value, ea, eb, orient_arr, want_positive)
    if max_candidates is not None:
        order = order[:max_candidates]
    return CandidatePool(sign, edges, ea[order], eb[order],
                         orient_arr[order], value[order])


def _compact(parts_ea, parts_eb, parts_or, parts_val):
    return (np.concatenate(parts_ea), np.concatenate(parts_eb),
            np.concatenate(parts_or), np.concatenate(parts_val))


def _pool_order(value, ea, eb, orient, want_positive: bool) -> np.ndarray:
    primary = -value if want_positive else value
    return np.lexsort((orient, eb, ea, primary))


def enumerate_for_mode(g: Graph, mode: Mode,
                       max_candidates: int | None = None) -> CandidatePool:
    return enumerate_candidates(g, mode.sign, max_candidates=max_candidates)
