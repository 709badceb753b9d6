"""Utilities, envy tests, and distance-bounded stability verdicts.

An agent's utility is the number of approved agents among its seat
neighbors.  Agent i envies agent j when trading seats would strictly raise
i's utility; a blocking pair envies mutually.  The verdict is parameterized
by how far apart (in seat-graph distance) a pair may sit and still count:
``distance_bound=1`` only admits pairs on adjacent seats (neighborhood
stability), while ``distance_bound=None`` places no restriction at all,
recovering classical exchange stability even across disconnected seat
components.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import SHAPE_CYCLE, Assignment, Instance
from .errors import BadParameter, NotACycle, SameAgent

UNBOUNDED: None = None

LEFT = "left"
RIGHT = "right"


@dataclass(frozen=True)
class BlockingWitness:
    """A blocking pair (i < j by agent index) and its seat distance."""

    i: int
    j: int
    distance: int | None


@dataclass(frozen=True)
class StabilityReport:
    distance_bound: int | None
    stable: bool
    witness: BlockingWitness | None


def _validate_bound(distance_bound: int | None) -> None:
    if distance_bound is None:
        return
    if not isinstance(distance_bound, int) or isinstance(distance_bound, bool):
        raise BadParameter("distance bound must be a positive integer or None")
    if distance_bound < 1:
        raise BadParameter("distance bound must be at least 1")


def utility(inst: Instance, asg: Assignment, agent: int) -> int:
    """Number of approved agents among the agent's seat neighbors."""
    approved = inst.prefs.out_sets[agent]
    occ = asg.agent_at
    return sum(1 for w in inst.seats.adj[asg.seat_of[agent]] if occ[w] in approved)


def envies(inst: Instance, asg: Assignment, i: int, j: int) -> bool:
    """True when i would strictly gain utility by trading seats with j.

    Computed without materializing the swapped assignment: after the trade,
    i occupies j's seat and the only neighbor substitution is that i's old
    seat now holds j.
    """
    if i == j:
        raise SameAgent(f"agent {i} cannot envy itself")
    approved = inst.prefs.out_sets[i]
    occ = asg.agent_at
    adj = inst.seats.adj
    p, q = asg.seat_of[i], asg.seat_of[j]
    current = sum(1 for w in adj[p] if occ[w] in approved)
    after = 0
    for w in adj[q]:
        who = j if w == p else occ[w]
        if who in approved:
            after += 1
    return after > current


def is_blocking_pair(inst: Instance, asg: Assignment, i: int, j: int) -> bool:
    """Mutual envy between two distinct agents."""
    return envies(inst, asg, i, j) and envies(inst, asg, j, i)


def check(inst: Instance, asg: Assignment, distance_bound: int | None) -> StabilityReport:
    """Scan for a blocking pair whose seats are within the distance bound.

    Returns the lexicographically smallest witnessing pair by agent index,
    or a stable verdict.  Pairs in different seat components are only
    comparable under the unbounded verdict.
    """
    _validate_bound(distance_bound)
    seats = inst.seats
    if distance_bound == 1:
        # Only adjacent seats qualify; walk the edges instead of all pairs.
        candidates = sorted(
            tuple(sorted((asg.agent_at[u], asg.agent_at[v]))) for u, v in seats.edges
        )
        for i, j in candidates:
            if is_blocking_pair(inst, asg, i, j):
                return StabilityReport(1, False, BlockingWitness(i, j, 1))
        return StabilityReport(1, True, None)
    n = inst.n
    for i in range(n):
        for j in range(i + 1, n):
            d = seats.distance(asg.seat_of[i], asg.seat_of[j])
            if distance_bound is not None and (d is None or d > distance_bound):
                continue
            if is_blocking_pair(inst, asg, i, j):
                return StabilityReport(distance_bound, False, BlockingWitness(i, j, d))
    return StabilityReport(distance_bound, True, None)


def pair_cannot_block(inst: Instance, asg: Assignment, position: int) -> bool:
    """Certificate that the occupants of cycle seats (v_i, v_i+1) cannot block.

    On a cycle, the pair is ruled out whenever the right occupant does not
    approve the seat behind the left one, or the left occupant does not
    approve the seat beyond the right one: in either case the corresponding
    member gains nothing from the trade.  Position indices wrap modulo n.
    """
    if inst.seats.shape_tag != SHAPE_CYCLE:
        raise NotACycle("blocking certificates are defined on cycle seat graphs")
    n = inst.n
    occ = asg.agent_at
    here = occ[position % n]
    right = occ[(position + 1) % n]
    behind = occ[(position - 1) % n]
    beyond = occ[(position + 2) % n]
    no_back_gain = not inst.prefs.has_arc(right, behind)
    no_forward_gain = not inst.prefs.has_arc(here, beyond)
    return no_back_gain or no_forward_gain


def approves_neighbor(inst: Instance, asg: Assignment, position: int, side: str) -> bool:
    """Whether the occupant of cycle seat v_i approves its neighbor on `side`.

    A true result certifies that the occupant does not envy the neighbor on
    the opposite side, since a trade in that direction keeps at most the
    approved neighbor and one new unknown.  A false result is merely the
    absence of the certificate, not a claim of envy.
    """
    if inst.seats.shape_tag != SHAPE_CYCLE:
        raise NotACycle("neighbor-approval certificates are defined on cycles")
    if side not in (LEFT, RIGHT):
        raise BadParameter(f"side must be {LEFT!r} or {RIGHT!r}, got {side!r}")
    n = inst.n
    occ = asg.agent_at
    delta = 1 if side == RIGHT else -1
    return inst.prefs.has_arc(occ[position % n], occ[(position + delta) % n])
