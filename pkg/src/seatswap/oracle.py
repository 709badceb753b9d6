"""Exhaustive ground truth on small instances.

Enumerates all n! seat assignments to decide existence, count, or list the
assignments stable at a given distance bound.  Existence queries on
vertex-transitive seat graphs may pin the first agent to the first seat:
composing any assignment with a seat automorphism preserves utilities, so
some stable assignment has agent 0 on seat 0 whenever any exists.  Counts
and enumerations always scan every permutation.
"""

from __future__ import annotations

from itertools import permutations

from .core import Assignment, Instance, SeatGraph
from .errors import BadParameter, TooLarge

DEFAULT_ENUMERATION_LIMIT = 9

MODE_EXISTS = "exists"
MODE_COUNT = "count"
MODE_ENUMERATE = "enumerate"


def _candidate_seat_pairs(
    seats: SeatGraph, distance_bound: int | None
) -> list[tuple[int, int]]:
    if distance_bound == 1:
        return sorted(seats.edges)
    pairs = []
    for u in range(seats.n):
        for v in range(u + 1, seats.n):
            if distance_bound is None:
                pairs.append((u, v))
            else:
                d = seats.distance(u, v)
                if d is not None and d <= distance_bound:
                    pairs.append((u, v))
    return pairs


def _has_blocking(
    occ: tuple[int, ...],
    pairs: list[tuple[int, int]],
    out_sets: tuple[frozenset[int], ...],
    adj: tuple[tuple[int, ...], ...],
) -> bool:
    for u, v in pairs:
        a, b = occ[u], occ[v]
        if _gains(a, u, v, b, occ, out_sets, adj) and _gains(
            b, v, u, a, occ, out_sets, adj
        ):
            return True
    return False


def _gains(a, p, q, b, occ, out_sets, adj) -> bool:
    """Would agent a (at seat p) strictly gain by trading with b (at seat q)?"""
    approved = out_sets[a]
    current = 0
    for w in adj[p]:
        if occ[w] in approved:
            current += 1
    after = 0
    for w in adj[q]:
        who = b if w == p else occ[w]
        if who in approved:
            after += 1
    return after > current


def _seat_of_to_occ(seat_of: tuple[int, ...]) -> tuple[int, ...]:
    occ = [0] * len(seat_of)
    for agent, seat in enumerate(seat_of):
        occ[seat] = agent
    return tuple(occ)


def oracle_search(
    inst: Instance,
    distance_bound: int | None,
    mode: str,
    limit: int = DEFAULT_ENUMERATION_LIMIT,
    symmetry: bool | None = None,
):
    """Exhaustive search over all assignments of a small instance.

    mode "exists" returns a bool, "count" the exact number of stable
    assignments, "enumerate" the full list in lexicographic order of the
    agent-to-seat tuples.  `symmetry` controls first-seat pinning for
    existence queries: None probes the seat graph for vertex-transitivity,
    True forces pinning (caller asserts transitivity), False forces a full
    scan.
    """
    if mode not in (MODE_EXISTS, MODE_COUNT, MODE_ENUMERATE):
        raise BadParameter(f"unknown oracle mode {mode!r}")
    n = inst.n
    if n > limit:
        raise TooLarge(f"{n} agents exceed the enumeration limit of {limit}")
    pairs = _candidate_seat_pairs(inst.seats, distance_bound)
    out_sets = inst.prefs.out_sets
    adj = inst.seats.adj

    if mode == MODE_EXISTS:
        pin = symmetry if symmetry is not None else vertex_transitive(inst.seats)
        if pin and n > 1:
            perms = ((0,) + rest for rest in permutations(range(1, n)))
        else:
            perms = permutations(range(n))
        return any(
            not _has_blocking(_seat_of_to_occ(seat_of), pairs, out_sets, adj)
            for seat_of in perms
        )
    if mode == MODE_COUNT:
        return sum(
            1
            for seat_of in permutations(range(n))
            if not _has_blocking(_seat_of_to_occ(seat_of), pairs, out_sets, adj)
        )
    return [
        Assignment(seat_of)
        for seat_of in permutations(range(n))
        if not _has_blocking(_seat_of_to_occ(seat_of), pairs, out_sets, adj)
    ]


def vertex_transitive(seats: SeatGraph) -> bool:
    """Whether the seat graph's automorphism group moves seat 0 everywhere."""
    n = seats.n
    if n <= 1:
        return True
    degrees = [seats.degree(v) for v in range(n)]
    if len(set(degrees)) > 1:
        return False
    return all(_automorphism_exists(seats, 0, target) for target in range(1, n))


def _automorphism_exists(seats: SeatGraph, src: int, dst: int) -> bool:
    """Backtracking search for an automorphism mapping src to dst."""
    n = seats.n
    adj_sets = [frozenset(seats.adj[v]) for v in range(n)]
    degrees = [len(adj_sets[v]) for v in range(n)]
    order = [src] + [v for v in range(n) if v != src]
    image = [-1] * n
    used = [False] * n
    image[src] = dst
    used[dst] = True

    def extend(k: int) -> bool:
        if k == n:
            return True
        v = order[k]
        for cand in range(n):
            if used[cand] or degrees[cand] != degrees[v]:
                continue
            ok = True
            for m in range(k):
                earlier = order[m]
                if (earlier in adj_sets[v]) != (image[earlier] in adj_sets[cand]):
                    ok = False
                    break
            if ok:
                image[v] = cand
                used[cand] = True
                if extend(k + 1):
                    return True
                image[v] = -1
                used[cand] = False
        return False

    return extend(1)
