"""Swap-stable seat assignments on graphs.

Agents with binary approval preferences are assigned bijectively to the
vertices of a seat graph.  Two agents block an assignment when both would
strictly gain by trading seats; verdicts are parameterized by how far
apart blocking partners may sit.  The package provides solvers for cycle,
path, and leafy seat graphs, an exhaustive oracle, swap dynamics, named
counterexample families, and a JSON command-line front end.
"""

from .core import (
    Assignment,
    Instance,
    PreferenceGraph,
    SeatGraph,
    SHAPE_CUSTOM,
    SHAPE_CYCLE,
    SHAPE_PATH,
    neighbors,
)
from .cycle import (
    CoapproverTriple,
    ImprovementStep,
    find_coapprover_triple,
    improve_partition,
    solve_by_partition,
    solve_cycle,
    solve_with_triple,
)
from .dynamics import DynamicsTrace, adjacent_blocking_pairs, run_dynamics
from .errors import (
    BadParameter,
    BudgetExceeded,
    InputError,
    InsufficientLeaves,
    InternalError,
    LimitError,
    MalformedDocument,
    NoInsertionPoint,
    NotACycle,
    NotAcyclic,
    NotAPath,
    SameAgent,
    SeatSwapError,
    SelfLoop,
    ShapeMismatch,
    SizeMismatch,
    TooLarge,
    TypeTwoDetected,
    UnknownAgent,
)
from .formats import (
    assignment_from_document,
    assignment_to_document,
    dot_preferences,
    dot_seats,
    instance_from_document,
    instance_to_document,
    parse_assignment,
    parse_instance,
    report_to_document,
    serialize_assignment,
    serialize_instance,
    trace_to_document,
)
from .general import (
    DfvsResult,
    leaves,
    minimum_feedback_set,
    sink_order,
    solve_general,
)
from .generators import (
    gen_example1,
    gen_ktt,
    gen_oscillator,
    gen_random,
    gen_two_triangles,
)
from .oracle import oracle_search, vertex_transitive
from .partition import (
    DirectedPath,
    PathPartition,
    assignment_from_partition,
    clockwise_approvals,
    initial_minimal_partition,
    insert_agent,
    maximal_path_from,
    minimalize,
)
from .path import solve_path
from .stability import (
    BlockingWitness,
    StabilityReport,
    UNBOUNDED,
    approves_neighbor,
    check,
    envies,
    is_blocking_pair,
    pair_cannot_block,
    utility,
)

__version__ = "1.0.0"

__all__ = [
    "Assignment",
    "BadParameter",
    "BlockingWitness",
    "BudgetExceeded",
    "CoapproverTriple",
    "DfvsResult",
    "DirectedPath",
    "DynamicsTrace",
    "ImprovementStep",
    "InputError",
    "Instance",
    "InsufficientLeaves",
    "InternalError",
    "LimitError",
    "MalformedDocument",
    "NoInsertionPoint",
    "NotACycle",
    "NotAPath",
    "NotAcyclic",
    "PathPartition",
    "PreferenceGraph",
    "SHAPE_CUSTOM",
    "SHAPE_CYCLE",
    "SHAPE_PATH",
    "SameAgent",
    "SeatGraph",
    "SeatSwapError",
    "SelfLoop",
    "ShapeMismatch",
    "SizeMismatch",
    "StabilityReport",
    "TooLarge",
    "TypeTwoDetected",
    "UNBOUNDED",
    "UnknownAgent",
    "adjacent_blocking_pairs",
    "approves_neighbor",
    "assignment_from_document",
    "assignment_from_partition",
    "assignment_to_document",
    "check",
    "clockwise_approvals",
    "dot_preferences",
    "dot_seats",
    "envies",
    "find_coapprover_triple",
    "gen_example1",
    "gen_ktt",
    "gen_oscillator",
    "gen_random",
    "gen_two_triangles",
    "improve_partition",
    "initial_minimal_partition",
    "insert_agent",
    "instance_from_document",
    "instance_to_document",
    "is_blocking_pair",
    "leaves",
    "maximal_path_from",
    "minimalize",
    "minimum_feedback_set",
    "neighbors",
    "oracle_search",
    "pair_cannot_block",
    "parse_assignment",
    "parse_instance",
    "report_to_document",
    "run_dynamics",
    "serialize_assignment",
    "serialize_instance",
    "sink_order",
    "solve_by_partition",
    "solve_cycle",
    "solve_general",
    "solve_path",
    "solve_with_triple",
    "trace_to_document",
    "utility",
    "vertex_transitive",
]
