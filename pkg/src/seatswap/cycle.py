"""Neighborhood-stable assignments on cycle seat graphs.

Two constructions cover every preference graph.  If some agent w has two
approvers s, t with no arc between them, seating s, w, t consecutively and
extending greedily (each new seat prefers an unseated approver of the
previous occupant) is already neighborhood stable.  Otherwise every two
approvers of a common agent are linked, and the solver starts from a
minimal path partition laid around the cycle, then repairs adjacent
blocking pairs by rebuilding the partition.  Each repair strictly raises
the number of seats whose occupant approves the next occupant clockwise,
a quantity capped at n, so at most n repairs run before the assignment
settles.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .core import SHAPE_CYCLE, Assignment, Instance, PreferenceGraph
from .errors import InternalError, NotACycle, TypeTwoDetected
from .partition import (
    DirectedPath,
    PathPartition,
    assignment_from_partition,
    clockwise_approvals,
    initial_minimal_partition,
    insert_agent,
    minimalize,
)
from .stability import check


@dataclass(frozen=True)
class CoapproverTriple:
    """Agents s and t both approve w, with no arc between s and t."""

    s: int
    t: int
    w: int


@dataclass(frozen=True)
class ImprovementStep:
    """One partition repair, as observed by an ``on_improve`` callback.

    ``block_len`` is the length of the path holding both pair members, or
    0 when the pair straddled the seam of a two-path partition.
    """

    pair: tuple[int, int]
    block_len: int
    k_before: int
    k_after: int
    count_before: int
    count_after: int


def find_coapprover_triple(prefs: PreferenceGraph) -> CoapproverTriple | None:
    """Smallest (w, s, t) with s -> w <- t and no arc between s and t.

    Returns None when every two approvers of a common agent are linked,
    which is the precondition of the partition-based construction.
    """
    for w in range(prefs.n):
        approvers = sorted(prefs.in_sets[w])
        for a, s in enumerate(approvers):
            for t in approvers[a + 1 :]:
                if not prefs.has_arc(s, t) and not prefs.has_arc(t, s):
                    return CoapproverTriple(s, t, w)
    return None


def solve_with_triple(inst: Instance, triple: CoapproverTriple) -> Assignment:
    """Greedy construction seeded with s, w, t on the first three seats.

    Every later seat takes the smallest unseated agent approving the
    previous occupant when one exists, else the smallest unseated agent.
    """
    if inst.seats.shape_tag != SHAPE_CYCLE:
        raise NotACycle("the triple construction runs on cycle seat graphs")
    prefs = inst.prefs
    occupants = [triple.s, triple.w, triple.t]
    unseated = sorted(set(range(inst.n)) - set(occupants))
    for _ in range(3, inst.n):
        prev = occupants[-1]
        pick = next((c for c in unseated if prefs.has_arc(c, prev)), None)
        if pick is None:
            pick = unseated[0]
        occupants.append(pick)
        unseated.remove(pick)
    return _assignment_from_occupants(occupants)


def _assignment_from_occupants(occupants: list[int]) -> Assignment:
    seat_of = [0] * len(occupants)
    for seat, agent in enumerate(occupants):
        seat_of[agent] = seat
    return Assignment(tuple(seat_of))


def improve_partition(
    inst: Instance,
    part: PathPartition,
    asg: Assignment,
    pair: tuple[int, int],
) -> PathPartition:
    """Rebuild the partition around an adjacent blocking pair.

    Requires asg to be the partition laid around the cycle, the partition
    to be minimal, and the pair to be a genuine adjacent blocking pair.
    Under those preconditions the right member of the pair never approves
    the occupant beyond it, so it closes out its path; blocking further
    forces the arcs right member -> previous-seat occupant and left
    member -> next-seat occupant.  Almost always both members then sit at
    the end of the same path and can be rewoven into the surrounding
    paths, shortening the partition.  The one exception is a partition of
    exactly two paths whose second is a single agent: the pair may
    straddle them, in which case the long path is a closed approval chain
    (its tail approves its head) and rotating it before inserting the
    singleton repairs the seam.  With three or more paths a straddling
    pair would contradict minimality and raises instead.
    """
    if inst.seats.shape_tag != SHAPE_CYCLE:
        raise NotACycle("partition repair runs on cycle seat graphs")
    prefs = inst.prefs
    n = inst.n
    paths = list(part.paths)
    k = len(paths)

    x, y = pair
    if (asg.seat_of[x] + 1) % n == asg.seat_of[y]:
        left, right = x, y
    elif (asg.seat_of[y] + 1) % n == asg.seat_of[x]:
        left, right = y, x
    else:
        raise TypeTwoDetected(f"agents {pair} are not on adjacent cycle seats")
    pos = asg.seat_of[left]

    owner = {agent: idx for idx, p in enumerate(paths) for agent in p.vertices}
    if owner[left] != owner[right]:
        return _repair_straddle(inst, paths, asg, left, right)
    ridx = owner[left]
    block = paths[ridx]
    if len(block) < 2 or block.tail != right or block.vertices[-2] != left:
        raise TypeTwoDetected(
            f"pair {pair} does not sit at the tail of its path; "
            "assignment and partition are inconsistent"
        )
    prev_agent = asg.agent_at[(pos - 1) % n]
    next_agent = asg.agent_at[(pos + 2) % n]
    if not prefs.has_arc(right, prev_agent) or not prefs.has_arc(left, next_agent):
        raise TypeTwoDetected(f"pair {pair} is not a genuine adjacent blocking pair")

    if len(block) == 2:
        # The whole path is the pair; weave its members into both neighbors.
        left_idx = (ridx - 1) % k
        right_idx = (ridx + 1) % k
        if left_idx == ridx:
            raise TypeTwoDetected("a two-agent partition cannot fill a cycle")
        if left_idx == right_idx:
            # Only one other path: prepend `left` first, then insert `right`,
            # whose target (the other path's unchanged tail) it approves.
            combined = DirectedPath.build(
                prefs, (left,) + paths[left_idx].vertices
            )
            combined = insert_agent(prefs, combined, right)
            new_paths = [
                combined if idx == left_idx else paths[idx]
                for idx in range(k)
                if idx != ridx
            ]
        else:
            grown = insert_agent(prefs, paths[left_idx], right)
            prefixed = DirectedPath.build(
                prefs, (left,) + paths[right_idx].vertices
            )
            replacements = {left_idx: grown, right_idx: prefixed}
            new_paths = [
                replacements.get(idx, paths[idx]) for idx in range(k) if idx != ridx
            ]
    else:
        # Detach the pair, reinsert the tail into the shortened path (its
        # tail stays put), then bridge through `left` into the next path.
        remainder = DirectedPath.build(prefs, block.vertices[:-2])
        rewoven = insert_agent(prefs, remainder, right)
        if k == 1:
            merged = DirectedPath.build(prefs, rewoven.vertices + (left,))
            new_paths = [merged]
        else:
            nidx = (ridx + 1) % k
            merged = DirectedPath.build(
                prefs, rewoven.vertices + (left,) + paths[nidx].vertices
            )
            new_paths = [
                merged if idx == nidx else paths[idx] for idx in range(k) if idx != ridx
            ]

    return _finish_repair(inst, asg, new_paths, k)


def _repair_straddle(
    inst: Instance,
    paths: list[DirectedPath],
    asg: Assignment,
    left: int,
    right: int,
) -> PathPartition:
    """Repair a blocking pair straddling the seam of a two-path partition.

    Such a pair forces the right member to be a lone path (otherwise it
    would approve its successor and not envy leftward) and the left member
    to be the long path's tail approving that path's own head.  The long
    path is therefore a closed approval chain: rotate it so the seat
    behind the pair becomes its tail, then insert the lone agent, who
    approves that tail.
    """
    prefs = inst.prefs
    k = len(paths)
    owner = {agent: idx for idx, p in enumerate(paths) for agent in p.vertices}
    ridx, sidx = owner[left], owner[right]
    block, lone = paths[ridx], paths[sidx]
    if (
        k != 2
        or len(lone) != 1
        or len(block) < 2
        or block.tail != left
        or not prefs.has_arc(left, block.head)
        or not prefs.has_arc(right, block.vertices[-2])
    ):
        raise TypeTwoDetected(
            f"blocking pair ({left}, {right}) straddles paths in a layout that "
            "minimality rules out; partition and assignment are inconsistent"
        )
    rotated = DirectedPath.build(prefs, (left,) + block.vertices[:-1])
    merged = insert_agent(prefs, rotated, right)
    return _finish_repair(inst, asg, [merged], k)


def _finish_repair(
    inst: Instance,
    asg: Assignment,
    new_paths: list[DirectedPath],
    k_before: int,
) -> PathPartition:
    result = minimalize(inst.prefs, PathPartition(tuple(new_paths), inst.n))
    new_asg = assignment_from_partition(result)
    before = clockwise_approvals(inst, asg)
    after = clockwise_approvals(inst, new_asg)
    if after < before + 1:
        raise InternalError(
            f"partition repair failed to raise clockwise approvals ({before} -> {after})"
        )
    if k_before > 1 and len(result) > k_before - 1:
        raise InternalError(
            f"partition repair failed to shorten the partition ({k_before} -> {len(result)})"
        )
    return result


def solve_by_partition(
    inst: Instance,
    on_improve: Callable[[ImprovementStep], None] | None = None,
) -> Assignment:
    """Partition-based construction for instances with no co-approver triple."""
    if inst.seats.shape_tag != SHAPE_CYCLE:
        raise NotACycle("the partition construction runs on cycle seat graphs")
    part = initial_minimal_partition(inst.prefs)
    asg = assignment_from_partition(part)
    for _ in range(inst.n + 1):
        report = check(inst, asg, 1)
        if report.stable:
            return asg
        witness = report.witness
        assert witness is not None
        pair = (witness.i, witness.j)
        k_before = len(part)
        count_before = clockwise_approvals(inst, asg)
        own_i = next(p for p in part.paths if witness.i in p)
        own_j = next(p for p in part.paths if witness.j in p)
        # block_len 0 marks a pair straddling the two-path seam.
        block_len = len(own_i) if own_i is own_j else 0
        part = improve_partition(inst, part, asg, pair)
        asg = assignment_from_partition(part)
        if on_improve is not None:
            on_improve(
                ImprovementStep(
                    pair=pair,
                    block_len=block_len,
                    k_before=k_before,
                    k_after=len(part),
                    count_before=count_before,
                    count_after=clockwise_approvals(inst, asg),
                )
            )
    raise InternalError("partition repairs did not settle within n iterations")


def solve_cycle(
    inst: Instance,
    on_improve: Callable[[ImprovementStep], None] | None = None,
) -> Assignment:
    """Neighborhood-stable assignment on a cycle seat graph."""
    if inst.seats.shape_tag != SHAPE_CYCLE:
        raise NotACycle("solve_cycle requires a cycle seat graph")
    triple = find_coapprover_triple(inst.prefs)
    if triple is not None:
        return solve_with_triple(inst, triple)
    return solve_by_partition(inst, on_improve)
