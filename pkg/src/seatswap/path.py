"""Greedy assignment on path seat graphs with no blocking pair within distance two.

Seat the seed first, then fill the path left to right, always preferring an
unseated agent who approves the previous seat's occupant.  Whenever a seat
is filled from the fallback pool, no agent seated later approves the seat
before it, which is exactly what rules out blocking pairs at distances one
and two.
"""

from __future__ import annotations

from .core import SHAPE_PATH, Assignment, Instance
from .errors import BadParameter, NotAPath


def solve_path(inst: Instance, seed: int = 0) -> Assignment:
    """Assignment on a path seat graph with no blocking pair at distance <= 2.

    `seed` is the agent placed on the first seat; ties among candidates are
    broken by smallest agent index.
    """
    if inst.seats.shape_tag != SHAPE_PATH:
        raise NotAPath("solve_path requires a path seat graph")
    n = inst.n
    if not (0 <= seed < n):
        raise BadParameter(f"seed agent {seed} is out of range")
    prefs = inst.prefs
    occupants = [seed]
    unseated = sorted(set(range(n)) - {seed})
    for _ in range(1, n):
        prev = occupants[-1]
        pick = next((c for c in unseated if prefs.has_arc(c, prev)), None)
        if pick is None:
            pick = unseated[0]
        occupants.append(pick)
        unseated.remove(pick)
    seat_of = [0] * n
    for seat, agent in enumerate(occupants):
        seat_of[agent] = seat
    return Assignment(tuple(seat_of))
