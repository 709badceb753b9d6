"""Assignments on arbitrary seat graphs via feedback sets and leaf seats.

If the preference graph can be made acyclic by deleting a set X of agents
no larger than the seat graph's number of leaves, a neighborhood-stable
assignment exists: park X on leaves, then seat the remaining agents in
repeated-sink order, each picking the free seat with the most already
seated approved neighbors.  An agent seated this way never envies anyone
seated after it, and an agent swapping onto a leaf gains nothing, so no
adjacent pair blocks.  With X empty the argument needs no leaves at all
and the result is stable at every distance.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .core import Assignment, Instance, PreferenceGraph, SeatGraph
from .errors import BudgetExceeded, InsufficientLeaves, NotAcyclic

DEFAULT_FEEDBACK_BUDGET = 20


@dataclass(frozen=True)
class DfvsResult:
    """A vertex set whose removal leaves the preference graph acyclic."""

    vertices: frozenset[int]
    exact: bool


def leaves(seats: SeatGraph) -> frozenset[int]:
    """Seats of degree exactly one."""
    return frozenset(v for v in range(seats.n) if seats.degree(v) == 1)


def _is_acyclic_without(prefs: PreferenceGraph, removed: frozenset[int]) -> bool:
    """Kahn's peeling on the subgraph induced by the remaining agents."""
    remaining = [v for v in range(prefs.n) if v not in removed]
    alive = set(remaining)
    indeg = {v: sum(1 for u in prefs.in_sets[v] if u in alive) for v in remaining}
    queue = [v for v in remaining if indeg[v] == 0]
    seen = 0
    while queue:
        v = queue.pop()
        seen += 1
        for w in prefs.out_sets[v]:
            if w in alive:
                indeg[w] -= 1
                if indeg[w] == 0:
                    queue.append(w)
    return seen == len(remaining)


def _cycle_vertices(prefs: PreferenceGraph) -> list[int]:
    """Vertices lying on some directed cycle: members of non-trivial
    strongly connected components (there are no self-loops)."""
    n = prefs.n
    order: list[int] = []
    seen = [False] * n
    for root in range(n):
        if seen[root]:
            continue
        stack: list[tuple[int, int]] = [(root, 0)]
        seen[root] = True
        while stack:
            v, _ = stack[-1]
            advanced = False
            for w in prefs.out_sets[v]:
                if not seen[w]:
                    seen[w] = True
                    stack.append((w, 0))
                    advanced = True
                    break
            if not advanced:
                order.append(v)
                stack.pop()
    comp = [-1] * n
    label = 0
    for v in reversed(order):
        if comp[v] >= 0:
            continue
        stack2 = [v]
        comp[v] = label
        members = 1
        while stack2:
            u = stack2.pop()
            for w in prefs.in_sets[u]:
                if comp[w] < 0:
                    comp[w] = label
                    members += 1
                    stack2.append(w)
        label += 1
    sizes: dict[int, int] = {}
    for c in comp:
        sizes[c] = sizes.get(c, 0) + 1
    return [v for v in range(n) if sizes[comp[v]] >= 2]


def minimum_feedback_set(
    prefs: PreferenceGraph, budget: int = DEFAULT_FEEDBACK_BUDGET
) -> DfvsResult:
    """Exact minimum feedback vertex set by subset enumeration.

    Subsets are enumerated in increasing size, lexicographically within a
    size, so the first hit is the lexicographically smallest minimum set.
    Exact search is exponential, hence the agent-count budget; beyond it
    the caller must supply a set externally rather than silently receive a
    heuristic with weaker guarantees.
    """
    if prefs.n > budget:
        raise BudgetExceeded(
            f"{prefs.n} agents exceed the exact-search budget of {budget}; "
            "supply a feedback set explicitly"
        )
    if _is_acyclic_without(prefs, frozenset()):
        return DfvsResult(frozenset(), True)
    # A minimum feedback set only contains vertices that lie on a cycle.
    candidates = sorted(_cycle_vertices(prefs))
    for size in range(1, len(candidates) + 1):
        for combo in combinations(candidates, size):
            removed = frozenset(combo)
            if _is_acyclic_without(prefs, removed):
                return DfvsResult(removed, True)
    raise AssertionError("removing every cycle vertex must leave an acyclic graph")


def sink_order(prefs: PreferenceGraph, excluded: Iterable[int]) -> list[int]:
    """Repeatedly remove a sink of the subgraph induced outside `excluded`.

    Arcs into excluded or already-removed agents do not count, so each
    emitted agent approves only excluded agents and agents emitted before
    it.  Ties are broken by smallest agent index.
    """
    banned = set(excluded)
    remaining = {v for v in range(prefs.n) if v not in banned}
    order: list[int] = []
    while remaining:
        sink = min(
            (v for v in remaining if not (prefs.out_sets[v] & remaining)),
            default=None,
        )
        if sink is None:
            raise NotAcyclic(
                "the preference graph minus the excluded agents still has a cycle"
            )
        order.append(sink)
        remaining.discard(sink)
    return order


def solve_general(
    inst: Instance,
    supplied_dfvs: Iterable[int] | None = None,
    budget: int = DEFAULT_FEEDBACK_BUDGET,
) -> Assignment:
    """Neighborhood-stable assignment whenever the feedback set fits the leaves.

    Uses `supplied_dfvs` when given (validated), else computes the exact
    minimum within `budget`.  Feedback agents go on leaf seats in index
    order; the rest are seated in sink order, each taking the free seat
    with the most already-seated approved neighbors (ties: smallest seat).
    When the feedback set is empty the output is stable at every distance.
    """
    prefs, seats = inst.prefs, inst.seats
    if supplied_dfvs is None:
        feedback = sorted(minimum_feedback_set(prefs, budget).vertices)
    else:
        feedback = sorted(set(supplied_dfvs))
    leaf_seats = sorted(leaves(seats))
    if len(feedback) > len(leaf_seats):
        raise InsufficientLeaves(
            f"feedback set of size {len(feedback)} but only "
            f"{len(leaf_seats)} leaf seats; no guarantee is offered"
        )
    order = sink_order(prefs, feedback)

    seat_of = [-1] * inst.n
    occupant = [-1] * inst.n
    for agent, seat in zip(feedback, leaf_seats):
        seat_of[agent] = seat
        occupant[seat] = agent
    for agent in order:
        approved = prefs.out_sets[agent]
        best_seat = -1
        best_score = -1
        for v in range(inst.n):
            if occupant[v] >= 0:
                continue
            score = sum(
                1 for w in seats.adj[v] if occupant[w] >= 0 and occupant[w] in approved
            )
            if score > best_score:
                best_seat, best_score = v, score
        seat_of[agent] = best_seat
        occupant[best_seat] = agent
    return Assignment(tuple(seat_of))
