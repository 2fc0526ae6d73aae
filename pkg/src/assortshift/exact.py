"""Exact optimum for the budgeted rewiring problem.

Selecting moves from the original graph's pool is a weighted
set-packing problem: each original edge may be used by at most one
selected move, each potential new edge may be created by at most one,
and at most ``k`` moves may be chosen. Because a move's value depends
only on endpoint degrees, which never change, the objective is a plain
sum of constants and the whole thing is a small 0/1 integer program,
solved here with HiGHS branch-and-bound via scipy.

``brute_force_optimum`` re-solves tiny instances by exhaustive subset
enumeration and exists purely as an independent check on the solver.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np
import scipy.optimize
import scipy.sparse

from .errors import TooLargeError
from .graph import Edge, Graph
from .rewiring import CandidatePool, Mode, enumerate_candidates

DEFAULT_NODE_LIMIT = 100_000_000
DEFAULT_TIME_LIMIT = 300.0


@dataclass
class ExactProblem:
    """Candidate pool plus the two conflict-constraint families.

    ``original_edge_conflicts[e]`` lists the candidate indices whose
    moves consume original edge ``e``; ``new_edge_conflicts[e]`` those
    that would create ``e``. Every candidate appears in exactly two
    groups of each family.
    """

    pool: CandidatePool
    budget: int
    original_edge_conflicts: dict[Edge, list[int]] = field(default_factory=dict)
    new_edge_conflicts: dict[Edge, list[int]] = field(default_factory=dict)
    # per-candidate group ids, flattened for the solver hot path
    cand_groups: list[tuple[int, int, int, int]] = field(default_factory=list)
    group_count: int = 0


@dataclass
class ExactSolution:
    selected: tuple[int, ...]
    objective: int
    proven_optimal: bool
    nodes_explored: int


def build_exact_problem(g: Graph, k: int, mode: Mode, *,
                        pool: CandidatePool | None = None,
                        max_candidates: int | None = None) -> ExactProblem:
    """Construct the conflict structure for the sign-filtered pool."""
    if k < 0:
        raise ValueError("budget must be non-negative")
    if pool is None:
        pool = enumerate_candidates(g, mode.sign, max_candidates=max_candidates)
    orig: dict[Edge, list[int]] = {}
    new: dict[Edge, list[int]] = {}
    group_ids: dict[tuple[str, Edge], int] = {}
    cand_groups: list[tuple[int, int, int, int]] = []

    def gid(kind: str, e: Edge) -> int:
        key = (kind, e)
        if key not in group_ids:
            group_ids[key] = len(group_ids)
        return group_ids[key]

    for idx in range(len(pool)):
        c = pool.candidate(idx)
        n1, n2 = c.new_edges
        orig.setdefault(c.edge_a, []).append(idx)
        orig.setdefault(c.edge_b, []).append(idx)
        new.setdefault(n1, []).append(idx)
        new.setdefault(n2, []).append(idx)
        cand_groups.append((gid("o", c.edge_a), gid("o", c.edge_b),
                            gid("n", n1), gid("n", n2)))
    return ExactProblem(pool, k, orig, new, cand_groups, len(group_ids))


def solve_exact(problem: ExactProblem, *,
                node_limit: int = DEFAULT_NODE_LIMIT,
                time_limit: float = DEFAULT_TIME_LIMIT) -> ExactSolution:
    """Exact optimum of the conflict-constrained selection problem.

    Solved as a 0/1 integer program (one binary per candidate, one
    at-most-one row per conflict group, one budget row) through scipy's
    MILP interface, which drives the HiGHS branch-and-bound. Values are
    single-signed per pool, so both variants are posed as maximization
    and the objective is reported with the pool's sign. The objective is
    recomputed from the selected integers, so the result is exact.

    Hits of the node or time limit return the incumbent with
    ``proven_optimal=False``.
    """
    pool = problem.pool
    n = len(pool)
    k = min(problem.budget, n)
    if problem.budget < 0:
        raise ValueError("budget must be non-negative")
    values = [abs(int(v)) for v in pool.value]
    sign = -1 if (n and int(pool.value[0]) < 0) else 1
    if n == 0 or k == 0:
        return ExactSolution((), 0, True, 0)

    rows = []
    cols = []
    n_rows = 0
    for group in itertools.chain(problem.original_edge_conflicts.values(),
                                 problem.new_edge_conflicts.values()):
        if len(group) < 2:
            continue  # a singleton row can never bind
        for idx in group:
            rows.append(n_rows)
            cols.append(idx)
        n_rows += 1
    budget_row = n_rows
    for idx in range(n):
        rows.append(budget_row)
        cols.append(idx)
    n_rows += 1

    matrix = scipy.sparse.csr_matrix(
        (np.ones(len(rows)), (rows, cols)), shape=(n_rows, n))
    constraints = scipy.optimize.LinearConstraint(
        matrix, -np.inf, np.concatenate([np.ones(n_rows - 1), [k]]))
    res = scipy.optimize.milp(
        c=-np.asarray(values, dtype=float),
        constraints=constraints,
        integrality=np.ones(n),
        bounds=scipy.optimize.Bounds(0, 1),
        options={"time_limit": time_limit, "node_limit": node_limit},
    )
    nodes = int(getattr(res, "mip_node_count", 0) or 0)
    if res.x is None:
        return ExactSolution((), 0, False, nodes)
    selected = tuple(int(i) for i in np.flatnonzero(res.x > 0.5))
    objective = sum(values[i] for i in selected)
    proven = bool(res.status == 0)
    return ExactSolution(tuple(sorted(selected)), sign * objective, proven, nodes)


def _subsets_within_budget(n: int, k: int) -> int:
    total = 0
    term = 1
    for t in range(1, k + 1):
        term = term * (n - t + 1) // t
        total += term
    return total


def brute_force_optimum(g: Graph, k: int, mode: Mode, *,
                        pool: CandidatePool | None = None,
                        subset_limit: int = 10_000_000) -> ExactSolution:
    """Exhaustively check every candidate subset of size at most ``k``
    against the conflict constraints. Independent of the branch-and-bound
    search path; intended only for tiny instances."""
    if pool is None:
        pool = enumerate_candidates(g, mode.sign)
    n = len(pool)
    if k < 0:
        raise ValueError("budget must be non-negative")
    if _subsets_within_budget(n, min(k, n)) > subset_limit:
        raise TooLargeError(
            f"{n} candidates with budget {k} exceeds {subset_limit} subsets")

    cands = [pool.candidate(i) for i in range(n)]
    orig_pairs = [c.old_edges for c in cands]
    new_pairs = [c.new_edges for c in cands]
    best: tuple[int, ...] = ()
    best_abs = 0
    examined = 0
    for size in range(1, min(k, n) + 1):
        for combo in itertools.combinations(range(n), size):
            examined += 1
            used_orig: set[Edge] = set()
            used_new: set[Edge] = set()
            ok = True
            for idx in combo:
                o1, o2 = orig_pairs[idx]
                n1, n2 = new_pairs[idx]
                if (o1 in used_orig or o2 in used_orig
                        or n1 in used_new or n2 in used_new):
                    ok = False
                    break
                used_orig.update((o1, o2))
                used_new.update((n1, n2))
            if not ok:
                continue
            total = sum(abs(cands[idx].value) for idx in combo)
            if total > best_abs:
                best_abs = total
                best = combo
    sign = -1 if (n and cands[0].value < 0) else 1
    return ExactSolution(tuple(best), sign * best_abs, True, examined)
