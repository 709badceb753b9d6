"""Core domain types: preference graphs, seat graphs, instances, assignments.

Agents are addressed by 0-based index in label-sorted order everywhere in
this package; string labels appear only at the I/O boundary.  All types are
immutable after construction and safe to share across threads; operations
on them are pure functions.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .errors import (
    MalformedDocument,
    SameAgent,
    SelfLoop,
    ShapeMismatch,
    SizeMismatch,
    UnknownAgent,
)

SHAPE_CYCLE = "cycle"
SHAPE_PATH = "path"
SHAPE_CUSTOM = "custom"

# All-pairs seat distances are cached up to this vertex count; beyond it
# every query runs a fresh breadth-first search.
_DISTANCE_TABLE_LIMIT = 512


def canonical_cycle_edges(n: int) -> frozenset[tuple[int, int]]:
    """Edge set of the cycle v0-v1-...-v(n-1)-v0, normalized low-high."""
    return frozenset(tuple(sorted((i, (i + 1) % n))) for i in range(n))  # type: ignore[misc]


def canonical_path_edges(n: int) -> frozenset[tuple[int, int]]:
    """Edge set of the path v0-v1-...-v(n-1)."""
    return frozenset((i, i + 1) for i in range(n - 1))


@dataclass(frozen=True)
class PreferenceGraph:
    """Directed approval graph: arc (i, j) means agent i approves agent j."""

    n: int
    arcs: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise MalformedDocument("agent count must be non-negative")
        for i, j in self.arcs:
            if i == j:
                raise SelfLoop(f"agent {i} cannot approve itself")
            if not (0 <= i < self.n and 0 <= j < self.n):
                raise UnknownAgent(f"arc ({i}, {j}) references an unknown agent")

    @staticmethod
    def from_arcs(n: int, arcs: Iterable[tuple[int, int]]) -> "PreferenceGraph":
        return PreferenceGraph(n, frozenset((int(i), int(j)) for i, j in arcs))

    def has_arc(self, i: int, j: int) -> bool:
        return (i, j) in self.arcs

    @cached_property
    def out_sets(self) -> tuple[frozenset[int], ...]:
        outs: list[set[int]] = [set() for _ in range(self.n)]
        for i, j in self.arcs:
            outs[i].add(j)
        return tuple(frozenset(s) for s in outs)

    @cached_property
    def in_sets(self) -> tuple[frozenset[int], ...]:
        ins: list[set[int]] = [set() for _ in range(self.n)]
        for i, j in self.arcs:
            ins[j].add(i)
        return tuple(frozenset(s) for s in ins)


@dataclass(frozen=True)
class SeatGraph:
    """Simple undirected graph of seats with a shape tag used for dispatch.

    Cycle and path shapes are canonically numbered along the cycle or path;
    custom shapes keep whatever numbering the caller supplied.  Edges are
    stored as (low, high) pairs.
    """

    n: int
    edges: frozenset[tuple[int, int]]
    shape_tag: str

    def __post_init__(self) -> None:
        if self.shape_tag not in (SHAPE_CYCLE, SHAPE_PATH, SHAPE_CUSTOM):
            raise ShapeMismatch(f"unknown seat-graph shape {self.shape_tag!r}")
        for u, v in self.edges:
            if u == v:
                raise SelfLoop(f"seat {u} cannot neighbor itself")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise UnknownAgent(f"edge ({u}, {v}) references an unknown seat")
            if u > v:
                raise MalformedDocument("seat edges must be stored as (low, high)")
        if self.shape_tag == SHAPE_CYCLE:
            if self.n < 3:
                raise ShapeMismatch("a cycle seat graph needs at least 3 seats")
            if self.edges != canonical_cycle_edges(self.n):
                raise ShapeMismatch("edges do not form the canonical cycle")
        elif self.shape_tag == SHAPE_PATH:
            if self.n < 1:
                raise ShapeMismatch("a path seat graph needs at least 1 seat")
            if self.edges != canonical_path_edges(self.n):
                raise ShapeMismatch("edges do not form the canonical path")
        else:
            if self.n < 1:
                raise ShapeMismatch("a custom seat graph needs at least 1 seat")

    @staticmethod
    def cycle(n: int) -> "SeatGraph":
        if n < 3:
            raise ShapeMismatch("a cycle seat graph needs at least 3 seats")
        return SeatGraph(n, canonical_cycle_edges(n), SHAPE_CYCLE)

    @staticmethod
    def path(n: int) -> "SeatGraph":
        if n < 1:
            raise ShapeMismatch("a path seat graph needs at least 1 seat")
        return SeatGraph(n, canonical_path_edges(n), SHAPE_PATH)

    @staticmethod
    def custom(n: int, edges: Iterable[tuple[int, int]]) -> "SeatGraph":
        normalized = frozenset(tuple(sorted((int(u), int(v)))) for u, v in edges)  # type: ignore[misc]
        return SeatGraph(n, normalized, SHAPE_CUSTOM)

    @cached_property
    def adj(self) -> tuple[tuple[int, ...], ...]:
        """Sorted neighbor lists, indexed by seat."""
        lists: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            lists[u].append(v)
            lists[v].append(u)
        return tuple(tuple(sorted(neigh)) for neigh in lists)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    @cached_property
    def _distance_rows(self) -> dict[int, list[int]]:
        return {}

    def _bfs_row(self, source: int) -> list[int]:
        row = [-1] * self.n
        row[source] = 0
        queue = deque([source])
        while queue:
            u = queue.popleft()
            for w in self.adj[u]:
                if row[w] < 0:
                    row[w] = row[u] + 1
                    queue.append(w)
        return row

    def distance(self, u: int, v: int) -> int | None:
        """Breadth-first seat distance; None when u and v are disconnected."""
        if u == v:
            return 0
        if self.n <= _DISTANCE_TABLE_LIMIT:
            row = self._distance_rows.get(u)
            if row is None:
                row = self._bfs_row(u)
                self._distance_rows[u] = row
        else:
            row = self._bfs_row(u)
        d = row[v]
        return d if d >= 0 else None


@dataclass(frozen=True)
class Instance:
    """A complete problem instance: labeled agents, approvals, and seats."""

    agents: tuple[str, ...]
    prefs: PreferenceGraph
    seats: SeatGraph

    def __post_init__(self) -> None:
        if any(not isinstance(lab, str) or not lab for lab in self.agents):
            raise MalformedDocument("agent labels must be non-empty strings")
        if len(set(self.agents)) != len(self.agents):
            raise MalformedDocument("agent labels must be unique")
        if list(self.agents) != sorted(self.agents):
            raise MalformedDocument("agents must be listed in label-sorted order")
        if not (len(self.agents) == self.prefs.n == self.seats.n):
            raise SizeMismatch(
                f"{len(self.agents)} agents but preference graph of size "
                f"{self.prefs.n} and seat graph of size {self.seats.n}"
            )

    @property
    def n(self) -> int:
        return len(self.agents)

    @cached_property
    def _index(self) -> dict[str, int]:
        return {lab: k for k, lab in enumerate(self.agents)}

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise UnknownAgent(f"unknown agent label {label!r}") from None

    def label(self, agent: int) -> str:
        return self.agents[agent]


@dataclass(frozen=True)
class Assignment:
    """Bijection from agent index to seat index, stored as a flat tuple."""

    seat_of: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.seat_of) != list(range(len(self.seat_of))):
            raise MalformedDocument("assignment must be a permutation of the seats")

    @property
    def n(self) -> int:
        return len(self.seat_of)

    @cached_property
    def agent_at(self) -> tuple[int, ...]:
        """Inverse map: agent_at[seat] is the occupant of that seat."""
        inv = [0] * len(self.seat_of)
        for agent, seat in enumerate(self.seat_of):
            inv[seat] = agent
        return tuple(inv)

    def seat(self, agent: int) -> int:
        return self.seat_of[agent]

    def occupant(self, seat: int) -> int:
        return self.agent_at[seat]

    def swap(self, i: int, j: int) -> "Assignment":
        """The assignment with agents i and j exchanged; self is unchanged."""
        if i == j:
            raise SameAgent(f"cannot swap agent {i} with itself")
        seats = list(self.seat_of)
        seats[i], seats[j] = seats[j], seats[i]
        return Assignment(tuple(seats))


def neighbors(asg: Assignment, seats: SeatGraph, agent: int) -> frozenset[int]:
    """Occupants of the seats adjacent to the given agent's seat."""
    return frozenset(asg.agent_at[w] for w in seats.adj[asg.seat_of[agent]])
