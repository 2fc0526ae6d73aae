"""Undirected simple graph with exact assortativity bookkeeping.

Degrees and all sums entering the assortativity coefficient are kept as
Python integers, so the coefficient is computed exactly up to the single
final division. Node ids are dense ``0..N-1``; an optional ``labels``
list maps dense ids back to the tokens seen in an input file.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

from .errors import (
    DegenerateDegreesError,
    DuplicateEdgeError,
    EmptyGraphError,
    MissingEdgeError,
    SelfLoopError,
)

Edge = tuple[int, int]


def edge_key(u: int, v: int) -> Edge:
    """Canonical form of an undirected edge: smaller endpoint first."""
    return (u, v) if u < v else (v, u)


class Graph:
    """Mutable undirected simple graph.

    Single writer: mutate from one thread only. Reads (degree lookups,
    membership, sums) are safe while no mutation is in flight.
    """

    __slots__ = ("node_count", "degree", "adjacency", "_edge_set", "labels")

    def __init__(self, node_count: int, edges: Iterable[Edge] = (), labels: list[str] | None = None):
        if node_count < 0:
            raise ValueError("node_count must be non-negative")
        self.node_count = node_count
        self.degree: list[int] = [0] * node_count
        self.adjacency: list[set[int]] = [set() for _ in range(node_count)]
        self._edge_set: set[Edge] = set()
        self.labels = labels
        for u, v in edges:
            self.add_edge(u, v)

    # -- basic accessors -------------------------------------------------

    @property
    def edge_count(self) -> int:
        return len(self._edge_set)

    @property
    def edges(self) -> list[Edge]:
        """All edges in canonical lexicographic order."""
        return sorted(self._edge_set)

    def has_edge(self, u: int, v: int) -> bool:
        return edge_key(u, v) in self._edge_set

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(self.degree))

    def label_of(self, node: int) -> str:
        if self.labels is not None:
            return self.labels[node]
        return str(node)

    # -- mutation ---------------------------------------------------------

    def _check_node(self, u: int) -> None:
        if not 0 <= u < self.node_count:
            raise ValueError(f"node {u} out of range 0..{self.node_count - 1}")

    def add_edge(self, u: int, v: int) -> None:
        self._check_node(u)
        self._check_node(v)
        if u == v:
            raise SelfLoopError(u)
        key = edge_key(u, v)
        if key in self._edge_set:
            raise DuplicateEdgeError(*key)
        self._edge_set.add(key)
        self.adjacency[u].add(v)
        self.adjacency[v].add(u)
        self.degree[u] += 1
        self.degree[v] += 1

    def remove_edge(self, u: int, v: int) -> None:
        key = edge_key(u, v)
        if key not in self._edge_set:
            raise MissingEdgeError(u, v)
        self._edge_set.remove(key)
        self.adjacency[u].discard(v)
        self.adjacency[v].discard(u)
        self.degree[u] -= 1
        self.degree[v] -= 1

    def copy(self) -> "Graph":
        g = Graph.__new__(Graph)
        g.node_count = self.node_count
        g.degree = list(self.degree)
        g.adjacency = [set(a) for a in self.adjacency]
        g._edge_set = set(self._edge_set)
        g.labels = list(self.labels) if self.labels is not None else None
        return g

    # -- dunder -----------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.node_count == other.node_count and self._edge_set == other._edge_set

    def __hash__(self):  # mutable; identity hashing only
        return id(self)

    def __iter__(self) -> Iterator[Edge]:
        return iter(self.edges)

    def __repr__(self) -> str:
        return f"Graph(N={self.node_count}, M={self.edge_count})"


def build_graph(edge_list: Iterable[Edge], node_count: int | None = None,
                labels: list[str] | None = None) -> Graph:
    """Build a validated Graph from integer node-id pairs.

    Node count defaults to ``max id + 1``; isolated nodes can be kept by
    passing an explicit ``node_count``. Self-loops and duplicate pairs
    (in either orientation) are rejected.
    """
    pairs = [(int(u), int(v)) for u, v in edge_list]
    for u, v in pairs:
        if u == v:
            raise SelfLoopError(u)
        if u < 0 or v < 0:
            raise ValueError(f"negative node id in edge ({u}, {v})")
    if node_count is None:
        node_count = max((max(u, v) for u, v in pairs), default=-1) + 1
    return Graph(node_count, pairs, labels=labels)


@dataclass(frozen=True)
class AssortativitySums:
    """The three edge sums behind the assortativity coefficient.

    Stored doubled where halves appear, so every field is an exact
    integer: ``half_plus_x2`` is twice the sum of (j+k)/2 per edge and
    ``half_sq_x2`` twice the sum of (j^2+k^2)/2. ``sum_jk`` is the
    degree-product sum, the only quantity a degree-preserving rewiring
    can change.
    """

    sum_jk: int
    half_plus_x2: int
    half_sq_x2: int
    edge_count: int

    @property
    def sum_half_plus(self) -> Fraction:
        return Fraction(self.half_plus_x2, 2)

    @property
    def sum_half_sq(self) -> Fraction:
        return Fraction(self.half_sq_x2, 2)


def assortativity_sums(g: Graph) -> AssortativitySums:
    """Scan all edges and accumulate the three sums exactly."""
    if g.edge_count == 0:
        raise EmptyGraphError("graph has no edges")
    deg = g.degree
    s_jk = 0
    s_plus = 0  # sum of (j + k), i.e. twice the half-sum
    s_sq = 0    # sum of (j^2 + k^2)
    for u, v in g._edge_set:
        du = deg[u]
        dv = deg[v]
        s_jk += du * dv
        s_plus += du + dv
        s_sq += du * du + dv * dv
    return AssortativitySums(s_jk, s_plus, s_sq, g.edge_count)


def assortativity_from_sums(sums: AssortativitySums, extra_jk: int = 0) -> float:
    """Coefficient from precomputed sums, optionally shifted by an exact
    change ``extra_jk`` in the degree-product sum.

    Clearing denominators of the usual formula gives

        r = (4*M*sum_jk - S2^2) / (2*M*S3 - S2^2)

    with S2 = sum of (j+k) and S3 = sum of (j^2+k^2) over edges. Both
    sides are integers; the division is the only inexact step.
    """
    m = sums.edge_count
    s2 = sums.half_plus_x2
    denom = 2 * m * sums.half_sq_x2 - s2 * s2
    if denom == 0:
        raise DegenerateDegreesError(
            "all edges join equal-degree endpoints; assortativity undefined")
    num = 4 * m * (sums.sum_jk + extra_jk) - s2 * s2
    return num / denom


def assortativity(g: Graph) -> float:
    """Degree assortativity coefficient of ``g``, in [-1, 1]."""
    return assortativity_from_sums(assortativity_sums(g))


def degree_product_sum(g: Graph) -> int:
    """Sum of degree products over all edges (0 for an empty edge set)."""
    deg = g.degree
    return sum(deg[u] * deg[v] for u, v in g._edge_set)
