"""Shared test utilities: independent re-implementations used as oracles."""

from __future__ import annotations

import networkx as nx

import seatswap as ss


def nx_seat_distance(inst: ss.Instance, u: int, v: int) -> int | None:
    g = nx.Graph()
    g.add_nodes_from(range(inst.seats.n))
    g.add_edges_from(inst.seats.edges)
    try:
        return nx.shortest_path_length(g, u, v)
    except nx.NetworkXNoPath:
        return None


def independent_utility(inst: ss.Instance, asg: ss.Assignment, agent: int) -> int:
    """Utility recomputed from the neighbor set, not the checker's arithmetic."""
    return sum(
        1
        for other in ss.neighbors(asg, inst.seats, agent)
        if inst.prefs.has_arc(agent, other)
    )


def independent_envies(inst: ss.Instance, asg: ss.Assignment, i: int, j: int) -> bool:
    """Envy recomputed by materializing the swapped assignment."""
    return independent_utility(inst, asg.swap(i, j), i) > independent_utility(
        inst, asg, i
    )


def brute_force_witness(
    inst: ss.Instance, asg: ss.Assignment, bound: int | None
) -> tuple[int, int] | None:
    """First blocking pair in lexicographic order, via the independent oracle."""
    for i in range(inst.n):
        for j in range(i + 1, inst.n):
            d = nx_seat_distance(inst, asg.seat_of[i], asg.seat_of[j])
            if bound is not None and (d is None or d > bound):
                continue
            if independent_envies(inst, asg, i, j) and independent_envies(
                inst, asg, j, i
            ):
                return (i, j)
    return None


def nx_is_acyclic_without(prefs: ss.PreferenceGraph, removed: frozenset[int]) -> bool:
    g = nx.DiGraph()
    g.add_nodes_from(v for v in range(prefs.n) if v not in removed)
    g.add_edges_from(
        (i, j) for i, j in prefs.arcs if i not in removed and j not in removed
    )
    return nx.is_directed_acyclic_graph(g)


def shuffled_assignment(n: int, rng) -> ss.Assignment:
    seats = list(range(n))
    rng.shuffle(seats)
    return ss.Assignment(tuple(seats))
