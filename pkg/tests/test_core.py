import json

import pytest
from hypothesis import given, strategies as st

import seatswap as ss

EXAMPLE1_DOC = {
    "agents": ["a", "b", "c", "d"],
    "preferences": [
        ["a", "c"],
        ["c", "a"],
        ["b", "d"],
        ["d", "b"],
        ["b", "a"],
        ["d", "c"],
    ],
    "seat_graph": {"shape": "path", "n": 4},
}


def test_parse_example1_document():
    inst = ss.parse_instance(json.dumps(EXAMPLE1_DOC))
    assert inst.n == 4
    assert len(inst.prefs.arcs) == 6
    assert len(inst.seats.edges) == 3
    assert inst.agents == ("a", "b", "c", "d")
    assert inst.prefs.has_arc(inst.index("a"), inst.index("c"))
    assert not inst.prefs.has_arc(inst.index("a"), inst.index("b"))


def test_parse_minimal_instance():
    doc = {"agents": ["x"], "preferences": [], "seat_graph": {"shape": "path", "n": 1}}
    inst = ss.parse_instance(json.dumps(doc))
    assert inst.n == 1
    assert inst.seats.edges == frozenset()


def test_parse_self_loop_arc():
    doc = dict(EXAMPLE1_DOC, preferences=[["a", "a"]])
    with pytest.raises(ss.SelfLoop):
        ss.parse_instance(json.dumps(doc))


def test_parse_unknown_agent_arc():
    doc = dict(EXAMPLE1_DOC, preferences=[["a", "zz"]])
    with pytest.raises(ss.UnknownAgent):
        ss.parse_instance(json.dumps(doc))


def test_parse_size_mismatch():
    doc = dict(EXAMPLE1_DOC, seat_graph={"shape": "path", "n": 5})
    with pytest.raises(ss.SizeMismatch):
        ss.parse_instance(json.dumps(doc))


def test_parse_shape_mismatch_edges():
    doc = dict(
        EXAMPLE1_DOC, seat_graph={"shape": "path", "n": 4, "edges": [[0, 2], [1, 2], [2, 3]]}
    )
    with pytest.raises(ss.ShapeMismatch):
        ss.parse_instance(json.dumps(doc))


def test_parse_explicit_canonical_edges_ok():
    doc = dict(
        EXAMPLE1_DOC, seat_graph={"shape": "path", "n": 4, "edges": [[0, 1], [1, 2], [2, 3]]}
    )
    inst = ss.parse_instance(json.dumps(doc))
    assert inst.seats.shape_tag == ss.SHAPE_PATH


def test_parse_errors():
    with pytest.raises(ss.MalformedDocument):
        ss.parse_instance("{not json")
    with pytest.raises(ss.MalformedDocument):
        ss.parse_instance(json.dumps({"agents": ["a", "a"], "preferences": [],
                                      "seat_graph": {"shape": "path", "n": 2}}))
    with pytest.raises(ss.MalformedDocument):
        ss.parse_instance(json.dumps({"agents": ["a"], "preferences": []}))
    with pytest.raises(ss.MalformedDocument):
        # custom shape without an edge list
        ss.parse_instance(json.dumps({"agents": ["a", "b"], "preferences": [],
                                      "seat_graph": {"shape": "custom", "n": 2}}))
    with pytest.raises(ss.SelfLoop):
        ss.parse_instance(json.dumps({"agents": ["a", "b"], "preferences": [],
                                      "seat_graph": {"shape": "custom", "n": 2,
                                                     "edges": [[1, 1]]}}))
    with pytest.raises(ss.UnknownAgent):
        ss.parse_instance(json.dumps({"agents": ["a", "b"], "preferences": [],
                                      "seat_graph": {"shape": "custom", "n": 2,
                                                     "edges": [[0, 5]]}}))


def test_shape_constructors_reject_degenerates():
    with pytest.raises(ss.ShapeMismatch):
        ss.SeatGraph.cycle(2)
    with pytest.raises(ss.ShapeMismatch):
        ss.SeatGraph.path(0)
    with pytest.raises(ss.ShapeMismatch):
        ss.SeatGraph.custom(0, [])


def test_round_trip_identity():
    for make in (ss.gen_two_triangles, lambda: ss.gen_ktt(3), lambda: ss.gen_random(6, 0.4, "cycle", 11)):
        inst = make()
        text = ss.serialize_instance(inst)
        again = ss.parse_instance(text)
        assert again == inst
        assert ss.serialize_instance(again) == text


def test_parse_tolerates_bundled_assignment_key():
    inst, start = ss.gen_example1()
    doc = ss.instance_to_document(inst)
    doc["assignment"] = ss.assignment_to_document(inst, start)["assignment"]
    text = json.dumps(doc)
    assert ss.parse_instance(text) == inst
    asg = ss.parse_assignment(text, inst)
    assert asg == start


def test_parse_assignment_errors():
    inst, _ = ss.gen_example1()
    with pytest.raises(ss.SizeMismatch):
        ss.parse_assignment(json.dumps({"assignment": {"a": 0}}), inst)
    with pytest.raises(ss.UnknownAgent):
        ss.parse_assignment(
            json.dumps({"assignment": {"a": 0, "b": 1, "c": 2, "zz": 3}}), inst
        )
    with pytest.raises(ss.MalformedDocument):
        # duplicate seats: not a bijection
        ss.parse_assignment(
            json.dumps({"assignment": {"a": 0, "b": 0, "c": 2, "d": 3}}), inst
        )


def test_neighbors_example1_layout():
    inst, start = ss.gen_example1()
    b = inst.index("b")
    got = ss.neighbors(start, inst.seats, b)
    assert got == {inst.index("d"), inst.index("c")}


def test_neighbors_edge_cases():
    inst = ss.gen_random(4, 0.5, "custom", seed=3, edges=[])
    asg = ss.Assignment((0, 1, 2, 3))
    assert ss.neighbors(asg, inst.seats, 2) == frozenset()
    tri = ss.gen_random(3, 0.5, "cycle", seed=4)
    asg3 = ss.Assignment((2, 0, 1))
    for agent in range(3):
        assert ss.neighbors(asg3, tri.seats, agent) == frozenset({0, 1, 2} - {agent})


@given(st.permutations(list(range(6))), st.data())
def test_neighbors_cardinality_matches_degree(perm, data):
    inst = ss.gen_random(6, 0.5, "custom", seed=9,
                         edges=[(0, 1), (1, 2), (2, 3), (0, 4)])
    asg = ss.Assignment(tuple(perm))
    agent = data.draw(st.integers(min_value=0, max_value=5))
    assert len(ss.neighbors(asg, inst.seats, agent)) == inst.seats.degree(
        asg.seat_of[agent]
    )


def test_swap_example1():
    inst, start = ss.gen_example1()
    swapped = start.swap(inst.index("b"), inst.index("d"))
    # a@v0, b@v1, d@v2, c@v3
    assert swapped.agent_at == (
        inst.index("a"),
        inst.index("b"),
        inst.index("d"),
        inst.index("c"),
    )


def test_swap_transposition_of_identity():
    asg = ss.Assignment((0, 1, 2, 3))
    assert asg.swap(0, 1).seat_of == (1, 0, 2, 3)


@given(st.permutations(list(range(7))), st.integers(0, 6), st.integers(0, 6))
def test_swap_involution(perm, i, j):
    asg = ss.Assignment(tuple(perm))
    if i == j:
        with pytest.raises(ss.SameAgent):
            asg.swap(i, j)
    else:
        assert asg.swap(i, j).swap(i, j) == asg


def test_assignment_must_be_permutation():
    with pytest.raises(ss.MalformedDocument):
        ss.Assignment((0, 0, 1))


def test_seat_distance():
    seats = ss.SeatGraph.path(5)
    assert seats.distance(0, 4) == 4
    assert seats.distance(2, 2) == 0
    two = ss.gen_two_triangles().seats
    assert two.distance(0, 1) == 1
    assert two.distance(0, 3) is None


def test_dot_exports():
    inst, start = ss.gen_example1()
    dig = ss.dot_preferences(inst)
    assert dig.startswith("digraph preferences {")
    assert '"b" -> "a";' in dig
    und = ss.dot_seats(inst, start)
    assert "graph seats {" in und
    assert 'v1 [label="v1: d"];' in und
    assert "v0 -- v1;" in und
    bare = ss.dot_seats(inst)
    assert 'v0 [label="v0"];' in bare
