"""JSON and DOT serialization for instances, assignments, reports, and traces.

Instance documents carry agent labels, label pairs for preference arcs, and
a seat graph given by shape, size, and (for custom shapes) an edge list;
cycle and path edges are generated canonically and may be omitted.  Parsing
then serializing then parsing is the identity on this canonical form.
Documents may carry an extra "assignment" key (as written for bundled
generator families); instance parsing tolerates unknown keys.
"""

from __future__ import annotations

import json
from typing import Any

from .core import (
    SHAPE_CUSTOM,
    SHAPE_CYCLE,
    SHAPE_PATH,
    Assignment,
    Instance,
    PreferenceGraph,
    SeatGraph,
    canonical_cycle_edges,
    canonical_path_edges,
)
from .dynamics import DynamicsTrace
from .errors import (
    MalformedDocument,
    SelfLoop,
    ShapeMismatch,
    SizeMismatch,
    UnknownAgent,
)
from .stability import StabilityReport


def _load(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedDocument(f"invalid JSON: {exc}") from None


def _require(doc: dict, key: str) -> Any:
    if key not in doc:
        raise MalformedDocument(f"missing required key {key!r}")
    return doc[key]


def _as_index(value: Any, n: int, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise MalformedDocument(f"{what} must be an integer, got {value!r}")
    if not 0 <= value < n:
        raise UnknownAgent(f"{what} {value} is out of range 0..{n - 1}")
    return value


def parse_instance(text: str) -> Instance:
    """Parse and validate an instance document from JSON text."""
    return instance_from_document(_load(text))


def instance_from_document(doc: Any) -> Instance:
    if not isinstance(doc, dict):
        raise MalformedDocument("instance document must be a JSON object")
    raw_agents = _require(doc, "agents")
    if not isinstance(raw_agents, list) or not all(
        isinstance(x, str) and x for x in raw_agents
    ):
        raise MalformedDocument("agents must be a list of non-empty strings")
    if len(set(raw_agents)) != len(raw_agents):
        raise MalformedDocument("agent labels must be unique")
    agents = tuple(sorted(raw_agents))
    index = {lab: k for k, lab in enumerate(agents)}
    n = len(agents)

    raw_arcs = _require(doc, "preferences")
    if not isinstance(raw_arcs, list):
        raise MalformedDocument("preferences must be a list of label pairs")
    arcs: set[tuple[int, int]] = set()
    for entry in raw_arcs:
        if not isinstance(entry, (list, tuple)) or len(entry) != 2:
            raise MalformedDocument(f"preference arc {entry!r} is not a pair")
        src, dst = entry
        if src == dst:
            raise SelfLoop(f"agent {src!r} cannot approve itself")
        for lab in (src, dst):
            if lab not in index:
                raise UnknownAgent(f"preference arc references unknown agent {lab!r}")
        arcs.add((index[src], index[dst]))

    sg = _require(doc, "seat_graph")
    if not isinstance(sg, dict):
        raise MalformedDocument("seat_graph must be an object")
    shape = _require(sg, "shape")
    if shape not in (SHAPE_CYCLE, SHAPE_PATH, SHAPE_CUSTOM):
        raise MalformedDocument(f"unknown seat-graph shape {shape!r}")
    seats_n = _require(sg, "n")
    if isinstance(seats_n, bool) or not isinstance(seats_n, int) or seats_n < 0:
        raise MalformedDocument("seat_graph.n must be a non-negative integer")
    raw_edges = sg.get("edges")
    edges: set[tuple[int, int]] | None = None
    if raw_edges is not None:
        if not isinstance(raw_edges, list):
            raise MalformedDocument("seat_graph.edges must be a list of pairs")
        edges = set()
        for entry in raw_edges:
            if not isinstance(entry, (list, tuple)) or len(entry) != 2:
                raise MalformedDocument(f"seat edge {entry!r} is not a pair")
            u = _as_index(entry[0], seats_n, "seat edge endpoint")
            v = _as_index(entry[1], seats_n, "seat edge endpoint")
            if u == v:
                raise SelfLoop(f"seat {u} cannot neighbor itself")
            edges.add((min(u, v), max(u, v)))

    if len(agents) != seats_n:
        raise SizeMismatch(f"{len(agents)} agents but {seats_n} seats")

    if shape == SHAPE_CUSTOM:
        if edges is None:
            raise MalformedDocument("custom seat graphs must list their edges")
        seats = SeatGraph.custom(seats_n, edges)
    else:
        canonical = (
            canonical_cycle_edges(seats_n)
            if shape == SHAPE_CYCLE
            else canonical_path_edges(seats_n)
        )
        if edges is not None and frozenset(edges) != canonical:
            raise ShapeMismatch(f"edges do not match the canonical {shape}")
        seats = SeatGraph.cycle(seats_n) if shape == SHAPE_CYCLE else SeatGraph.path(seats_n)

    return Instance(agents, PreferenceGraph(n, frozenset(arcs)), seats)


def instance_to_document(inst: Instance) -> dict:
    """Canonical document: sorted agents, sorted arc pairs, sorted edges."""
    doc: dict[str, Any] = {
        "agents": list(inst.agents),
        "preferences": [
            [inst.agents[i], inst.agents[j]] for i, j in sorted(inst.prefs.arcs)
        ],
        "seat_graph": {"shape": inst.seats.shape_tag, "n": inst.seats.n},
    }
    if inst.seats.shape_tag == SHAPE_CUSTOM:
        doc["seat_graph"]["edges"] = [list(e) for e in sorted(inst.seats.edges)]
    return doc


def serialize_instance(inst: Instance, pretty: bool = False) -> str:
    return dumps(instance_to_document(inst), pretty)


def parse_assignment(text: str, inst: Instance) -> Assignment:
    """Parse a label-to-seat document against a known instance."""
    return assignment_from_document(_load(text), inst)


def assignment_from_document(doc: Any, inst: Instance) -> Assignment:
    if not isinstance(doc, dict):
        raise MalformedDocument("assignment document must be a JSON object")
    mapping = _require(doc, "assignment")
    if not isinstance(mapping, dict):
        raise MalformedDocument("assignment must map labels to seat indices")
    if len(mapping) != inst.n:
        raise SizeMismatch(f"assignment covers {len(mapping)} of {inst.n} agents")
    seat_of = [-1] * inst.n
    for label, seat in mapping.items():
        agent = inst.index(label)
        seat_of[agent] = _as_index(seat, inst.n, f"seat of agent {label!r}")
    return Assignment(tuple(seat_of))


def assignment_to_document(inst: Instance, asg: Assignment) -> dict:
    return {
        "assignment": {inst.agents[a]: asg.seat_of[a] for a in range(inst.n)}
    }


def serialize_assignment(inst: Instance, asg: Assignment, pretty: bool = False) -> str:
    return dumps(assignment_to_document(inst, asg), pretty)


def report_to_document(inst: Instance, report: StabilityReport) -> dict:
    bound: Any = "unbounded" if report.distance_bound is None else report.distance_bound
    witness = None
    if report.witness is not None:
        witness = {
            "i": inst.agents[report.witness.i],
            "j": inst.agents[report.witness.j],
            "distance": report.witness.distance,
        }
    return {"distance_bound": bound, "stable": report.stable, "witness": witness}


def trace_to_document(inst: Instance, trace: DynamicsTrace) -> dict:
    return {
        "policy": trace.policy,
        "seed": trace.seed,
        "outcome": trace.outcome,
        "first_repeat_index": trace.first_repeat_index,
        "states": [assignment_to_document(inst, s)["assignment"] for s in trace.states],
        "swaps": [[inst.agents[i], inst.agents[j]] for i, j in trace.swaps],
    }


def dot_preferences(inst: Instance) -> str:
    """Preference graph as a DOT digraph over agent labels."""
    lines = ["digraph preferences {"]
    for lab in inst.agents:
        lines.append(f'  "{lab}";')
    for i, j in sorted(inst.prefs.arcs):
        lines.append(f'  "{inst.agents[i]}" -> "{inst.agents[j]}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def dot_seats(inst: Instance, asg: Assignment | None = None) -> str:
    """Seat graph as an undirected DOT graph, occupants shown as labels."""
    lines = ["graph seats {"]
    for v in range(inst.seats.n):
        if asg is None:
            label = f"v{v}"
        else:
            label = f"v{v}: {inst.agents[asg.agent_at[v]]}"
        lines.append(f'  v{v} [label="{label}"];')
    for u, v in sorted(inst.seats.edges):
        lines.append(f"  v{u} -- v{v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def dumps(doc: Any, pretty: bool = False) -> str:
    """Deterministic JSON: sorted keys, fixed separators."""
    if pretty:
        return json.dumps(doc, sort_keys=True, indent=2)
    return json.dumps(doc, sort_keys=True, separators=(",", ":"))
