"""Directed-path machinery over the preference graph.

A path partition splits the agents into vertex-disjoint directed paths of
the preference graph.  It is minimal when no path's tail approves another
path's head, i.e. no trivial concatenation remains.  Laying a partition's
paths consecutively around a cycle seat graph gives the assignment the
cycle solver starts from and repairs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable

from .core import SHAPE_CYCLE, Assignment, Instance, PreferenceGraph
from .errors import BadParameter, NoInsertionPoint, NotACycle, SizeMismatch


@dataclass(frozen=True)
class DirectedPath:
    """Non-empty sequence of distinct agents joined by preference arcs."""

    vertices: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.vertices:
            raise BadParameter("a directed path cannot be empty")
        if len(set(self.vertices)) != len(self.vertices):
            raise BadParameter("a directed path cannot repeat agents")

    @staticmethod
    def build(prefs: PreferenceGraph, vertices: Iterable[int]) -> "DirectedPath":
        """Construct a path, checking every consecutive arc exists."""
        verts = tuple(vertices)
        path = DirectedPath(verts)
        for a, b in zip(verts, verts[1:]):
            if not prefs.has_arc(a, b):
                raise ValueError(f"missing arc ({a}, {b}) in directed path {verts}")
        return path

    @property
    def head(self) -> int:
        return self.vertices[0]

    @property
    def tail(self) -> int:
        return self.vertices[-1]

    def __len__(self) -> int:
        return len(self.vertices)

    def __contains__(self, agent: int) -> bool:
        return agent in self.vertices


@dataclass(frozen=True)
class PathPartition:
    """Ordered list of directed paths covering each of n agents exactly once."""

    paths: tuple[DirectedPath, ...]
    n: int

    def __post_init__(self) -> None:
        covered: list[int] = []
        for p in self.paths:
            covered.extend(p.vertices)
        if sorted(covered) != list(range(self.n)):
            raise SizeMismatch("paths must cover each agent exactly once")

    def __len__(self) -> int:
        return len(self.paths)

    def is_minimal(self, prefs: PreferenceGraph) -> bool:
        """No path's tail approves a different path's head."""
        for a, pa in enumerate(self.paths):
            for b, pb in enumerate(self.paths):
                if a != b and prefs.has_arc(pa.tail, pb.head):
                    return False
        return True


def maximal_path_from(
    prefs: PreferenceGraph, alive: Iterable[int], seed: int
) -> DirectedPath:
    """Grow a directed path around `seed` until neither end extends.

    Only agents in `alive` participate.  The tail is extended first, then
    the head; extension candidates are always the smallest agent index.
    """
    living = set(alive)
    if seed not in living:
        raise BadParameter(f"seed {seed} is not among the available agents")
    verts: list[int] = [seed]
    used = {seed}
    while True:
        step = min(
            (j for j in prefs.out_sets[verts[-1]] if j in living and j not in used),
            default=None,
        )
        if step is None:
            break
        verts.append(step)
        used.add(step)
    while True:
        step = min(
            (j for j in prefs.in_sets[verts[0]] if j in living and j not in used),
            default=None,
        )
        if step is None:
            break
        verts.insert(0, step)
        used.add(step)
    return DirectedPath.build(prefs, verts)


def initial_minimal_partition(prefs: PreferenceGraph) -> PathPartition:
    """Iterated maximal-path extraction, seeded at the smallest free agent.

    A path extracted later can never be concatenated with an earlier one:
    that arc would have extended the earlier path when its endpoints were
    still available.  The result is therefore minimal.
    """
    alive = set(range(prefs.n))
    paths: list[DirectedPath] = []
    while alive:
        p = maximal_path_from(prefs, alive, min(alive))
        paths.append(p)
        alive.difference_update(p.vertices)
    return PathPartition(tuple(paths), prefs.n)


def minimalize(prefs: PreferenceGraph, part: PathPartition) -> PathPartition:
    """Concatenate paths while some tail approves another path's head.

    Pairs are scanned in index order and the scan restarts after every
    merge, since a merge can create a new tail-to-head arc.
    """
    paths = list(part.paths)
    merged = True
    while merged:
        merged = False
        for a in range(len(paths)):
            for b in range(len(paths)):
                if a == b:
                    continue
                if prefs.has_arc(paths[a].tail, paths[b].head):
                    paths[a] = DirectedPath.build(
                        prefs, paths[a].vertices + paths[b].vertices
                    )
                    del paths[b]
                    merged = True
                    break
            if merged:
                break
    return PathPartition(tuple(paths), part.n)


def insert_agent(prefs: PreferenceGraph, path: DirectedPath, s: int) -> DirectedPath:
    """Insert an agent that approves the path's tail, keeping the tail fixed.

    The agent is prepended when it approves the head; otherwise it lands in
    the first slot (scanning from the head) where its predecessor approves
    it and it approves its successor.  When every two approvers of a common
    agent are linked by an arc, such a slot always exists; the error below
    therefore signals a violated caller contract.
    """
    if s in path:
        raise BadParameter(f"agent {s} is already on the path")
    verts = path.vertices
    if prefs.has_arc(s, verts[0]):
        return DirectedPath.build(prefs, (s,) + verts)
    for j in range(len(verts) - 1):
        if prefs.has_arc(verts[j], s) and prefs.has_arc(s, verts[j + 1]):
            return DirectedPath.build(prefs, verts[: j + 1] + (s,) + verts[j + 1 :])
    raise NoInsertionPoint(
        f"agent {s} fits nowhere in {verts}; co-approver condition violated"
    )


def assignment_from_partition(part: PathPartition) -> Assignment:
    """Lay the paths consecutively around the cycle: j-th agent to seat v_j."""
    seat_of = [0] * part.n
    pos = 0
    for p in part.paths:
        for agent in p.vertices:
            seat_of[agent] = pos
            pos += 1
    return Assignment(tuple(seat_of))


def clockwise_approvals(inst: Instance, asg: Assignment) -> int:
    """Number of cycle seats whose occupant approves the next occupant clockwise."""
    if inst.seats.shape_tag != SHAPE_CYCLE:
        raise NotACycle("clockwise approvals are defined on cycle seat graphs")
    n = inst.n
    occ = asg.agent_at
    return sum(1 for j in range(n) if inst.prefs.has_arc(occ[j], occ[(j + 1) % n]))
