"""Swap dynamics: iterate adjacent blocking-pair swaps from a start assignment.

Each step swaps one adjacent blocking pair, which by definition strictly
raises both members' utilities.  The run stops when no adjacent blocking
pair remains (converged), when an assignment repeats (cycled), or when a
step cap is hit (capped).  Convergence is not guaranteed: some instances
oscillate forever no matter which pair is picked.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .core import Assignment, Instance
from .errors import BadParameter
from .stability import is_blocking_pair

POLICY_FIRST = "first"
POLICY_RANDOM = "random"

# Arbitrary safety cap; no convergence bound is known and path seat graphs
# may plausibly need exponentially many swaps.
_DEFAULT_STEP_FACTOR = 64


@dataclass(frozen=True)
class DynamicsTrace:
    """A swap-dynamics run: visited states, swaps taken, and the outcome.

    states[0] is the start; each later state differs from its predecessor
    by exactly the corresponding swap.  For a cycled outcome the final
    state equals states[first_repeat_index].
    """

    states: tuple[Assignment, ...]
    swaps: tuple[tuple[int, int], ...]
    outcome: str  # "converged" | "cycled" | "capped"
    first_repeat_index: int | None
    policy: str
    seed: int | None


def adjacent_blocking_pairs(inst: Instance, asg: Assignment) -> list[tuple[int, int]]:
    """All blocking pairs on adjacent seats, lexicographically sorted."""
    occ = asg.agent_at
    pairs = sorted(tuple(sorted((occ[u], occ[v]))) for u, v in inst.seats.edges)
    return [(i, j) for i, j in pairs if is_blocking_pair(inst, asg, i, j)]


def run_dynamics(
    inst: Instance,
    start: Assignment,
    policy: str = POLICY_FIRST,
    seed: int | None = None,
    max_steps: int | None = None,
) -> DynamicsTrace:
    """Run swap dynamics from `start` until convergence, a repeat, or the cap.

    Policy "first" always swaps the lexicographically smallest adjacent
    blocking pair; "random" samples uniformly with a deterministic seeded
    generator, recorded in the trace.  Repeats are detected on exact
    assignment equality.
    """
    if policy not in (POLICY_FIRST, POLICY_RANDOM):
        raise BadParameter(f"unknown policy {policy!r}")
    if max_steps is None:
        max_steps = _DEFAULT_STEP_FACTOR * inst.n * inst.n
    if max_steps < 1:
        raise BadParameter("max_steps must be positive")
    rng = random.Random(seed) if policy == POLICY_RANDOM else None

    states = [start]
    swaps: list[tuple[int, int]] = []
    seen: dict[tuple[int, ...], int] = {start.seat_of: 0}
    current = start
    outcome = "capped"
    first_repeat: int | None = None
    while len(swaps) < max_steps:
        pairs = adjacent_blocking_pairs(inst, current)
        if not pairs:
            outcome = "converged"
            break
        pick = pairs[0] if rng is None else pairs[rng.randrange(len(pairs))]
        current = current.swap(*pick)
        swaps.append(pick)
        states.append(current)
        if current.seat_of in seen:
            outcome = "cycled"
            first_repeat = seen[current.seat_of]
            break
        seen[current.seat_of] = len(states) - 1
    return DynamicsTrace(
        states=tuple(states),
        swaps=tuple(swaps),
        outcome=outcome,
        first_repeat_index=first_repeat,
        policy=policy,
        seed=seed,
    )
