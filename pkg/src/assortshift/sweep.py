"""Budget-sweep experiment harness.

Runs a set of strategies over a grid of budget fractions, repeating
stochastic strategies with derived per-run seeds, and emits one CSV row
per run plus mean and standard-deviation aggregate rows. Per-run seeds
are content-addressed: splitmix64 applied to the master seed xor an
FNV-1a hash of ``"strategy|fraction|run"``, so adding strategies,
fractions, or runs never perturbs the seeds of existing rows.
"""

from __future__ import annotations

import csv
import os
import time
from dataclasses import dataclass
from statistics import fmean, pstdev

from .baselines import (
    BaselineConfig,
    degree_diff_rewiring,
    random_rewiring,
    target_rewiring,
)
from .exact import build_exact_problem, solve_exact
from .graph import Graph
from .greedy import AttackResult, apply_sequence, greedy_attack, renew_greedy_attack
from .rewiring import CandidatePool, Mode, enumerate_candidates

CSV_HEADER = ["strategy", "fraction", "pairs", "run", "seed",
              "r_initial", "r_final", "dp", "wall_ms", "status"]

STRATEGIES = ("gars", "gdrs", "renew-gars", "renew-gdrs", "exact",
              "tars", "tdrs", "rars", "rdrs", "dars", "ddrs")
STOCHASTIC = frozenset({"rars", "rdrs", "dars", "ddrs"})

_MODE_OF = {
    "gars": Mode.ASSORTATIVE, "gdrs": Mode.DISASSORTATIVE,
    "renew-gars": Mode.ASSORTATIVE, "renew-gdrs": Mode.DISASSORTATIVE,
    "tars": Mode.ASSORTATIVE, "tdrs": Mode.DISASSORTATIVE,
    "rars": Mode.ASSORTATIVE, "rdrs": Mode.DISASSORTATIVE,
    "dars": Mode.ASSORTATIVE, "ddrs": Mode.DISASSORTATIVE,
}

_MASK64 = (1 << 64) - 1


def splitmix64(x: int) -> int:
    x = (x + 0x9E3779B97F4A7C15) & _MASK64
    z = x
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


def _fnv1a64(text: str) -> int:
    h = 0xCBF29CE484222325
    for byte in text.encode("utf-8"):
        h = ((h ^ byte) * 0x100000001B3) & _MASK64
    return h


def derive_seed(master: int, strategy: str, fraction: float, run: int) -> int:
    key = _fnv1a64(f"{strategy}|{fraction!r}|{run}")
    return splitmix64((master & _MASK64) ^ key)


def pairs_for_fraction(fraction: float, edge_count: int) -> int:
    """Budget in edge pairs: a fraction f of edges corresponds to
    floor(f * M / 2) pairs, so the attack touches about f * M edges."""
    return int(fraction * edge_count / 2)


@dataclass
class SweepRecord:
    strategy: str
    fraction: float
    pairs: int
    run: int
    seed: int
    r_initial: float
    r_final: float
    dp: float
    wall_ms: int
    status: str

    def to_row(self) -> list[str]:
        return [self.strategy, repr(self.fraction), str(self.pairs),
                str(self.run), str(self.seed), repr(self.r_initial),
                repr(self.r_final), repr(self.dp) if isinstance(self.dp, float)
                else str(self.dp), str(self.wall_ms), self.status]

    @classmethod
    def from_row(cls, row: list[str]) -> "SweepRecord":
        try:
            dp: float = int(row[7])
        except ValueError:
            dp = float(row[7])
        return cls(row[0], float(row[1]), int(row[2]), int(row[3]),
                   int(row[4]), float(row[5]), float(row[6]), dp,
                   int(row[8]), row[9])


def run_strategy(g: Graph, strategy: str, pairs: int, seed: int = 0, *,
                 pool_cache: dict | None = None,
                 max_candidates: int | None = None) -> AttackResult:
    """Run one named strategy with a pair budget on a copy of ``g``."""
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}")
    if strategy == "exact":
        # the bare id means the maximizing variant; the CLI exposes both
        mode = Mode.ASSORTATIVE
        pool = _cached_pool(g, mode, pool_cache, max_candidates)
        problem = build_exact_problem(g, pairs, mode, pool=pool)
        solution = solve_exact(problem)
        cands = [pool.candidate(i) for i in solution.selected]
        return apply_sequence(g, cands)
    if strategy in ("gars", "gdrs"):
        mode = _MODE_OF[strategy]
        pool = _cached_pool(g, mode, pool_cache, max_candidates)
        return greedy_attack(g, pairs, mode, pool=pool)
    if strategy.startswith("renew-"):
        return renew_greedy_attack(g, pairs, _MODE_OF[strategy],
                                   max_candidates=max_candidates)
    cfg = BaselineConfig(mode=_MODE_OF[strategy], budget_pairs=pairs,
                         rng_seed=seed)
    if strategy in ("tars", "tdrs"):
        return target_rewiring(g, cfg)
    if strategy in ("rars", "rdrs"):
        return random_rewiring(g, cfg)
    return degree_diff_rewiring(g, cfg)


def _cached_pool(g: Graph, mode: Mode, cache: dict | None,
                 max_candidates: int | None) -> CandidatePool:
    if cache is None:
        return enumerate_candidates(g, mode.sign, max_candidates=max_candidates)
    key = (id(g), mode.sign, max_candidates)
    if key not in cache:
        cache[key] = enumerate_candidates(g, mode.sign,
                                          max_candidates=max_candidates)
    return cache[key]


def run_sweep(g: Graph, strategies: list[str], fractions: list[float],
              runs: int = 100, master_seed: int = 0, *,
              max_candidates: int | None = None) -> list[SweepRecord]:
    """One record per (strategy, fraction, run) plus aggregate rows.

    Deterministic strategies always use a single run. Aggregates carry
    run -1 (mean) and run -2 (population standard deviation); failures
    are recorded per-row in the status column and skipped in aggregates.
    """
    records: list[SweepRecord] = []
    pool_cache: dict = {}
    for strategy in strategies:
        if strategy not in STRATEGIES:
            raise ValueError(f"unknown strategy {strategy!r}")
        n_runs = runs if strategy in STOCHASTIC else 1
        for fraction in fractions:
            pairs = pairs_for_fraction(fraction, g.edge_count)
            group: list[SweepRecord] = []
            for run in range(n_runs):
                seed = derive_seed(master_seed, strategy, fraction, run)
                t0 = time.perf_counter()
                try:
                    result = run_strategy(g, strategy, pairs, seed,
                                          pool_cache=pool_cache,
                                          max_candidates=max_candidates)
                    wall_ms = int((time.perf_counter() - t0) * 1000)
                    status = "ok" if not result.pool_exhausted or pairs == 0 \
                        else "exhausted"
                    rec = SweepRecord(strategy, fraction, pairs, run, seed,
                                      result.initial_r, result.final_r,
                                      result.dp, wall_ms, status)
                except Exception as exc:  # keep sweeping on per-run failure
                    wall_ms = int((time.perf_counter() - t0) * 1000)
                    rec = SweepRecord(strategy, fraction, pairs, run, seed,
                                      float("nan"), float("nan"), 0, wall_ms,
                                      f"error:{type(exc).__name__}")
                group.append(rec)
                records.append(rec)
            good = [r for r in group if not r.status.startswith("error")]
            if good:
                records.append(_aggregate(good, -1, "mean"))
                records.append(_aggregate(good, -2, "std"))
    return records


def _aggregate(group: list[SweepRecord], run_id: int, kind: str) -> SweepRecord:
    proto = group[0]
    if kind == "mean":
        r_final = fmean(r.r_final for r in group)
        dp = fmean(float(r.dp) for r in group)
    else:
        r_final = pstdev(r.r_final for r in group) if len(group) > 1 else 0.0
        dp = pstdev(float(r.dp) for r in group) if len(group) > 1 else 0.0
    wall = int(fmean(r.wall_ms for r in group))
    return SweepRecord(proto.strategy, proto.fraction, proto.pairs, run_id, 0,
                       proto.r_initial, r_final, dp, wall, kind)


def write_records_csv(records: list[SweepRecord], path: str | os.PathLike) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(CSV_HEADER)
        for rec in records:
            writer.writerow(rec.to_row())


def read_records_csv(path: str | os.PathLike) -> list[SweepRecord]:
    with open(path, "r", encoding="utf-8", newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader)
        if header != CSV_HEADER:
            raise ValueError(f"unexpected CSV header {header}")
        return [SweepRecord.from_row(row) for row in reader]
