"""Instance generators: named counterexample families and seeded random instances."""

from __future__ import annotations

import random

from .core import Assignment, Instance, PreferenceGraph, SeatGraph
from .errors import BadParameter

RANDOM_SHAPES = ("cycle", "path", "star", "custom")


def gen_ktt(t: int) -> Instance:
    """Complete-bipartite family with no neighborhood-stable assignment.

    Agents s{i}_{j} for i in {1, 2}, j in 1..t sit on the complete bipartite
    seat graph with t seats per side.  Each pair s1_j, s2_j approves each
    other, and each row wraps around in a directed t-cycle, so the
    preference graph is t disjoint two-cycles plus two disjoint t-cycles
    and every agent has out-degree exactly two.  Requires odd t >= 3.
    """
    if t < 3 or t % 2 == 0:
        raise BadParameter("the bipartite family needs an odd t >= 3")
    labels = [f"s{i}_{j}" for i in (1, 2) for j in range(1, t + 1)]
    agents = tuple(sorted(labels))
    index = {lab: k for k, lab in enumerate(agents)}
    arcs: set[tuple[int, int]] = set()
    for j in range(1, t + 1):
        arcs.add((index[f"s1_{j}"], index[f"s2_{j}"]))
        arcs.add((index[f"s2_{j}"], index[f"s1_{j}"]))
    for i in (1, 2):
        for j in range(1, t + 1):
            nxt = 1 if j == t else j + 1
            arcs.add((index[f"s{i}_{j}"], index[f"s{i}_{nxt}"]))
    edges = [(u, t + v) for u in range(t) for v in range(t)]
    return Instance(
        agents,
        PreferenceGraph.from_arcs(2 * t, arcs),
        SeatGraph.custom(2 * t, edges),
    )


def gen_two_triangles() -> Instance:
    """Two disjoint triangle seat graphs under a directed six-cycle of approvals.

    Every assignment is neighborhood stable (adjacent agents share a
    triangle, and swapping inside a triangle changes nobody's neighborhood)
    yet none is stable outright.
    """
    agents = tuple("abcdef")
    arcs = [(k, (k + 1) % 6) for k in range(6)]
    edges = [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)]
    return Instance(
        agents, PreferenceGraph.from_arcs(6, arcs), SeatGraph.custom(6, edges)
    )


def gen_oscillator() -> tuple[Instance, Assignment]:
    """Four agents on a square whose swap dynamics never converge.

    From the bundled start assignment (a, b, c, d clockwise) the unique
    adjacent blocking pair alternates between (b, c) and (a, d), returning
    to the start after four swaps under any selection policy.  The instance
    still admits a neighborhood-stable assignment.
    """
    agents = tuple("abcd")
    a, b, c, d = range(4)
    arcs = [(a, b), (b, d), (d, c), (c, a), (a, d)]
    inst = Instance(agents, PreferenceGraph.from_arcs(4, arcs), SeatGraph.cycle(4))
    start = Assignment((0, 1, 2, 3))
    return inst, start


def gen_example1() -> tuple[Instance, Assignment]:
    """Four agents on a path with a known adjacent blocking pair.

    Agents a and c approve each other, as do b and d; b also approves a and
    d also approves c.  In the bundled assignment (a, d, b, c along the
    path) agents b and d block; after they swap the assignment is stable.
    """
    agents = tuple("abcd")
    a, b, c, d = range(4)
    arcs = [(a, c), (c, a), (b, d), (d, b), (b, a), (d, c)]
    inst = Instance(agents, PreferenceGraph.from_arcs(4, arcs), SeatGraph.path(4))
    start = Assignment((0, 2, 3, 1))  # a@v0, d@v1, b@v2, c@v3
    return inst, start


def gen_random(
    n: int,
    p: float,
    shape: str = "cycle",
    seed: int = 0,
    edges: list[tuple[int, int]] | None = None,
) -> Instance:
    """Seeded random instance: each ordered pair is an arc with probability p.

    The generator is deterministic: the same arguments produce an identical
    instance.  Shapes: cycle, path, star (hub at seat 0), or custom with an
    explicit edge list.
    """
    if n < 1:
        raise BadParameter("need at least one agent")
    if not 0.0 <= p <= 1.0:
        raise BadParameter("arc probability must lie in [0, 1]")
    if shape not in RANDOM_SHAPES:
        raise BadParameter(f"unknown shape {shape!r}; pick one of {RANDOM_SHAPES}")
    rng = random.Random(seed)
    arcs = [
        (i, j)
        for i in range(n)
        for j in range(n)
        if i != j and rng.random() < p
    ]
    if shape == "cycle":
        seats = SeatGraph.cycle(n)
    elif shape == "path":
        seats = SeatGraph.path(n)
    elif shape == "star":
        seats = SeatGraph.custom(n, [(0, v) for v in range(1, n)])
    else:
        if edges is None:
            raise BadParameter("custom shape needs an explicit edge list")
        seats = SeatGraph.custom(n, edges)
    agents = tuple(f"a{i:03d}" for i in range(n))
    return Instance(agents, PreferenceGraph.from_arcs(n, arcs), seats)
