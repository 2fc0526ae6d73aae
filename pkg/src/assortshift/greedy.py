"""Greedy rewiring attacks on the assortativity coefficient.

``greedy_attack`` walks the candidate pool of the original graph once,
in value order, applying every move that is still feasible, up to the
budget. ``renew_greedy_attack`` instead rebuilds the pool from the
current graph after every applied move, so edges created along the way
can be rewired again.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import AssortativitySums, Graph, assortativity_sums
from .rewiring import (
    CandidatePool,
    Mode,
    RewiringCandidate,
    apply_rewiring,
    enumerate_candidates,
    is_feasible,
    r_from_delta,
)


@dataclass(frozen=True)
class TraceStep:
    """State after one applied move: cumulative change in the
    degree-product sum and the resulting coefficient."""

    step: int
    dp: int
    r: float


@dataclass
class AttackResult:
    """Outcome of one attack run.

    ``pool_exhausted`` is set when fewer moves than the budget could be
    applied. ``graph`` is the mutated copy the run operated on; the
    input graph is never modified.
    """

    selected: list[RewiringCandidate]
    trace: list[TraceStep]
    initial_r: float
    final_r: float
    pool_exhausted: bool
    graph: Graph
    base_sums: AssortativitySums | None = field(repr=False, default=None)

    @property
    def dp(self) -> int:
        return sum(c.value for c in self.selected)


def _finish(result_graph: Graph, base: AssortativitySums, selected, trace,
            exhausted: bool) -> AttackResult:
    initial_r = r_from_delta(base, 0)
    final_r = trace[-1].r if trace else initial_r
    return AttackResult(selected, trace, initial_r, final_r, exhausted,
                        result_graph, base)


def greedy_attack(g: Graph, k: int, mode: Mode, *,
                  pool: CandidatePool | None = None,
                  max_candidates: int | None = None) -> AttackResult:
    """Budgeted greedy attack: best remaining move from the original
    graph's pool, skipping moves that became infeasible, never
    revisiting a skipped move.

    ``k`` counts applied moves (edge pairs). A prebuilt ``pool`` for the
    same graph and mode can be passed to amortize enumeration across
    runs.
    """
    if k < 0:
        raise ValueError("budget must be non-negative")
    base = assortativity_sums(g)
    if pool is None:
        pool = enumerate_candidates(g, mode.sign, max_candidates=max_candidates)
    work = g.copy()
    selected: list[RewiringCandidate] = []
    trace: list[TraceStep] = []
    dp = 0
    for idx in range(len(pool)):
        if len(selected) >= k:
            break
        cand = pool.candidate(idx)
        if not is_feasible(work, cand):
            continue
        apply_rewiring(work, cand)
        dp += cand.value
        selected.append(cand)
        trace.append(TraceStep(len(selected), dp, r_from_delta(base, dp)))
    return _finish(work, base, selected, trace, len(selected) < k)


def renew_greedy_attack(g: Graph, k: int | None, mode: Mode, *,
                        max_candidates: int | None = None) -> AttackResult:
    """Greedy attack that re-enumerates the pool from the current graph
    after every applied move. ``k=None`` means unlimited budget: run
    until no move of the requested sign remains."""
    if k is not None and k < 0:
        raise ValueError("budget must be non-negative")
    base = assortativity_sums(g)
    work = g.copy()
    selected: list[RewiringCandidate] = []
    trace: list[TraceStep] = []
    dp = 0
    while k is None or len(selected) < k:
        pool = enumerate_candidates(work, mode.sign, max_candidates=max_candidates)
        if len(pool) == 0:
            break
        cand = pool.candidate(0)
        apply_rewiring(work, cand)
        dp += cand.value
        selected.append(cand)
        trace.append(TraceStep(len(selected), dp, r_from_delta(base, dp)))
    exhausted = k is None or len(selected) < k
    return _finish(work, base, selected, trace, exhausted)


def extremal_assortativity(g: Graph, mode: Mode) -> float:
    """Terminal coefficient of the unlimited-budget renewing greedy run:
    a degree-preserving local optimum, used as the reference line for
    how far the coefficient can be pushed. Not a proven global extreme."""
    return renew_greedy_attack(g, None, mode).final_r


def apply_sequence(g: Graph, candidates: list[RewiringCandidate]) -> AttackResult:
    """Apply an externally chosen move sequence (e.g. an exact solver's
    selection) and report it in the same shape as an attack run."""
    base = assortativity_sums(g)
    work = g.copy()
    trace: list[TraceStep] = []
    dp = 0
    for i, cand in enumerate(candidates, start=1):
        apply_rewiring(work, cand)
        dp += cand.value
        trace.append(TraceStep(i, dp, r_from_delta(base, dp)))
    return _finish(work, base, list(candidates), trace, False)
