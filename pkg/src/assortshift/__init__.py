"""Degree-preserving rewiring attacks on the assortativity coefficient.

The package revolves around one move: pick two edges with four distinct
endpoints and swap their endpoints one of two ways, which preserves
every node degree while shifting the degree-product sum by an exact,
precomputable integer. On top of that move sit a greedy attack, an
exact branch-and-bound optimizer, three baseline strategies, synthetic
generators, and a sweep harness.
"""

from .baselines import (
    BaselineConfig,
    degree_diff_rewiring,
    random_rewiring,
    target_rewiring,
)
from .errors import (
    AssortshiftError,
    BadParametersError,
    DegenerateDegreesError,
    DuplicateEdgeError,
    EmptyGraphError,
    InfeasibleRewiringError,
    MissingEdgeError,
    ParseError,
    SelfLoopError,
    TooLargeError,
)
from .exact import (
    ExactProblem,
    ExactSolution,
    brute_force_optimum,
    build_exact_problem,
    solve_exact,
)
from .edgelist import read_edge_list, write_edge_list
from .generators import (
    GeneratorSpec,
    barabasi_albert,
    erdos_renyi_gnm,
    generate,
    parse_generator_spec,
    watts_strogatz,
)
from .graph import (
    AssortativitySums,
    Graph,
    assortativity,
    assortativity_from_sums,
    assortativity_sums,
    build_graph,
    degree_product_sum,
)
from .greedy import (
    AttackResult,
    TraceStep,
    apply_sequence,
    extremal_assortativity,
    greedy_attack,
    renew_greedy_attack,
)
from .rewiring import (
    CandidatePool,
    Mode,
    Orientation,
    RewiringCandidate,
    Sign,
    apply_rewiring,
    candidate_value,
    delta_p,
    enumerate_candidates,
    is_feasible,
    make_candidate,
    r_from_delta,
)
from .sweep import SweepRecord, pairs_for_fraction, run_strategy, run_sweep

__version__ = "0.1.0"

__all__ = [
    "AssortativitySums",
    "AssortshiftError",
    "AttackResult",
    "BadParametersError",
    "BaselineConfig",
    "CandidatePool",
    "DegenerateDegreesError",
    "DuplicateEdgeError",
    "EmptyGraphError",
    "ExactProblem",
    "ExactSolution",
    "GeneratorSpec",
    "Graph",
    "InfeasibleRewiringError",
    "MissingEdgeError",
    "Mode",
    "Orientation",
    "ParseError",
    "RewiringCandidate",
    "SelfLoopError",
    "Sign",
    "SweepRecord",
    "TooLargeError",
    "TraceStep",
    "apply_rewiring",
    "apply_sequence",
    "assortativity",
    "assortativity_from_sums",
    "assortativity_sums",
    "barabasi_albert",
    "brute_force_optimum",
    "build_exact_problem",
    "build_graph",
    "candidate_value",
    "degree_diff_rewiring",
    "degree_product_sum",
    "delta_p",
    "enumerate_candidates",
    "erdos_renyi_gnm",
    "extremal_assortativity",
    "generate",
    "greedy_attack",
    "is_feasible",
    "make_candidate",
    "pairs_for_fraction",
    "parse_generator_spec",
    "r_from_delta",
    "random_rewiring",
    "read_edge_list",
    "renew_greedy_attack",
    "run_strategy",
    "run_sweep",
    "solve_exact",
    "target_rewiring",
    "watts_strogatz",
    "write_edge_list",
]
