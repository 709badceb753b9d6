import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

import seatswap as ss
from helpers import (
    brute_force_witness,
    independent_envies,
    independent_utility,
    shuffled_assignment,
)


def test_utility_example1():
    inst, start = ss.gen_example1()
    assert ss.utility(inst, start, inst.index("b")) == 1
    assert ss.utility(inst, start, inst.index("d")) == 1
    swapped = start.swap(inst.index("b"), inst.index("d"))
    assert ss.utility(inst, swapped, inst.index("b")) == 2
    assert ss.utility(inst, swapped, inst.index("d")) == 2


def test_utility_no_arcs():
    inst = ss.gen_random(5, 0.0, "cycle", seed=1)
    asg = ss.Assignment(tuple(range(5)))
    assert all(ss.utility(inst, asg, i) == 0 for i in range(5))


def test_envies_example1():
    inst, start = ss.gen_example1()
    b, d = inst.index("b"), inst.index("d")
    assert ss.envies(inst, start, b, d)
    assert ss.envies(inst, start, d, b)


def test_envies_maximal_utility_never_envies():
    inst, _ = ss.gen_example1()
    rng = random.Random(5)
    for _ in range(100):
        asg = shuffled_assignment(inst.n, rng)
        for i in range(inst.n):
            if ss.utility(inst, asg, i) == len(inst.prefs.out_sets[i]):
                for j in range(inst.n):
                    if j != i:
                        assert not ss.envies(inst, asg, i, j)


def test_envies_oscillator_after_first_swap():
    inst, start = ss.gen_oscillator()
    a, b, c, d = (inst.index(x) for x in "abcd")
    pi1 = start.swap(b, c)
    assert ss.utility(inst, pi1, a) == 1
    assert ss.envies(inst, pi1, a, d)
    assert ss.utility(inst, pi1.swap(a, d), a) == 2


def test_envies_same_agent():
    inst, start = ss.gen_example1()
    with pytest.raises(ss.SameAgent):
        ss.envies(inst, start, 1, 1)


def test_envies_agrees_with_materialized_swap():
    rng = random.Random(11)
    for trial in range(150):
        n = rng.randint(2, 8)
        shape = rng.choice(["cycle", "path", "star", "custom"])
        if shape == "cycle" and n < 3:
            shape = "path"
        edges = None
        if shape == "custom":
            edges = [
                (u, v)
                for u in range(n)
                for v in range(u + 1, n)
                if rng.random() < 0.4
            ]
        inst = ss.gen_random(n, rng.random(), shape, seed=trial, edges=edges)
        asg = shuffled_assignment(n, rng)
        for i, j in itertools.combinations(range(n), 2):
            assert ss.envies(inst, asg, i, j) == independent_envies(inst, asg, i, j)
            assert ss.utility(inst, asg, i) == independent_utility(inst, asg, i)


def test_check_example1_golden():
    inst, start = ss.gen_example1()
    rep = ss.check(inst, start, 1)
    assert not rep.stable
    assert (rep.witness.i, rep.witness.j) == (inst.index("b"), inst.index("d"))
    assert rep.witness.distance == 1
    swapped = start.swap(inst.index("b"), inst.index("d"))
    assert ss.check(inst, swapped, None).stable


def test_check_two_triangles_sample():
    inst = ss.gen_two_triangles()
    rng = random.Random(2)
    for _ in range(25):
        asg = shuffled_assignment(6, rng)
        assert ss.check(inst, asg, 1).stable
        assert not ss.check(inst, asg, None).stable


def test_check_bad_bound():
    inst, start = ss.gen_example1()
    with pytest.raises(ss.BadParameter):
        ss.check(inst, start, 0)
    with pytest.raises(ss.BadParameter):
        ss.check(inst, start, -3)


def test_check_monotone_in_bound():
    rng = random.Random(23)
    for trial in range(80):
        n = rng.randint(3, 7)
        inst = ss.gen_random(n, rng.random(), "cycle", seed=500 + trial)
        asg = shuffled_assignment(n, rng)
        verdicts = [ss.check(inst, asg, d).stable for d in (1, 2, 3)]
        verdicts.append(ss.check(inst, asg, None).stable)
        # stability at a larger bound implies stability at every smaller one
        for small, large in zip(verdicts, verdicts[1:]):
            assert small or not large


def test_check_matches_brute_force():
    rng = random.Random(37)
    for trial in range(120):
        n = rng.randint(2, 7)
        shape = rng.choice(["path", "custom", "cycle"])
        if shape == "cycle" and n < 3:
            shape = "path"
        edges = None
        if shape == "custom":
            edges = [
                (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.3
            ]
        inst = ss.gen_random(n, rng.random(), shape, seed=9000 + trial, edges=edges)
        asg = shuffled_assignment(n, rng)
        for bound in (1, 2, None):
            rep = ss.check(inst, asg, bound)
            expect = brute_force_witness(inst, asg, bound)
            if expect is None:
                assert rep.stable
            else:
                assert not rep.stable
                assert (rep.witness.i, rep.witness.j) == expect


def test_pair_cannot_block_oscillator_positions():
    inst, start = ss.gen_oscillator()
    # pair (b, c) sits at seats (v1, v2): neither escape clause holds
    assert ss.pair_cannot_block(inst, start, 1) is False
    # pair (a, b) at seats (v0, v1): a does not approve c two seats on
    assert ss.pair_cannot_block(inst, start, 0) is True


def test_pair_cannot_block_no_arcs():
    inst = ss.gen_random(5, 0.0, "cycle", seed=0)
    asg = ss.Assignment(tuple(range(5)))
    assert all(ss.pair_cannot_block(inst, asg, i) for i in range(5))


def test_pair_cannot_block_requires_cycle():
    inst, start = ss.gen_example1()
    with pytest.raises(ss.NotACycle):
        ss.pair_cannot_block(inst, start, 0)


def test_approves_neighbor_oscillator():
    inst, start = ss.gen_oscillator()
    pos_a = start.seat_of[inst.index("a")]
    assert ss.approves_neighbor(inst, start, pos_a, "left")
    assert ss.approves_neighbor(inst, start, pos_a, "right")


def test_approves_neighbor_no_arcs_and_errors():
    inst = ss.gen_random(4, 0.0, "cycle", seed=0)
    asg = ss.Assignment(tuple(range(4)))
    for i in range(4):
        for side in ("left", "right"):
            assert not ss.approves_neighbor(inst, asg, i, side)
    with pytest.raises(ss.BadParameter):
        ss.approves_neighbor(inst, asg, 0, "up")
    path_inst, start = ss.gen_example1()
    with pytest.raises(ss.NotACycle):
        ss.approves_neighbor(path_inst, start, 0, "left")


def test_certificates_are_sound():
    # No certified pair may block, and no certified agent may envy the
    # certified-away neighbor; smaller twin of the acceptance sweep.
    rng = random.Random(99)
    for trial in range(400):
        n = rng.randint(3, 8)
        inst = ss.gen_random(n, rng.random(), "cycle", seed=40000 + trial)
        asg = shuffled_assignment(n, rng)
        occ = asg.agent_at
        for i in range(n):
            here, right = occ[i], occ[(i + 1) % n]
            if ss.pair_cannot_block(inst, asg, i):
                assert not ss.is_blocking_pair(inst, asg, here, right)
            if ss.approves_neighbor(inst, asg, i, "left"):
                assert not ss.envies(inst, asg, here, right)
            if ss.approves_neighbor(inst, asg, i, "right"):
                assert not ss.envies(inst, asg, here, occ[(i - 1) % n])


def test_utility_bounded_by_degree_on_cycles_and_paths():
    rng = random.Random(3)
    for trial in range(60):
        n = rng.randint(3, 9)
        shape = "cycle" if trial % 2 else "path"
        inst = ss.gen_random(n, 0.9, shape, seed=trial)
        asg = shuffled_assignment(n, rng)
        for i in range(n):
            assert ss.utility(inst, asg, i) <= 2


def test_envies_invariant_under_cycle_rotation():
    rng = random.Random(8)
    inst = ss.gen_random(6, 0.5, "cycle", seed=77)
    asg = shuffled_assignment(6, rng)
    # rotating every seat by one is a seat-graph automorphism
    rotated = ss.Assignment(tuple((s + 1) % 6 for s in asg.seat_of))
    for i, j in itertools.combinations(range(6), 2):
        assert ss.envies(inst, asg, i, j) == ss.envies(inst, rotated, i, j)


@settings(max_examples=60)
@given(st.integers(3, 7), st.integers(0, 10_000))
def test_check_witness_is_genuine(n, seed):
    inst = ss.gen_random(n, 0.5, "cycle", seed=seed)
    asg = shuffled_assignment(n, random.Random(seed))
    rep = ss.check(inst, asg, 1)
    if rep.witness is not None:
        assert ss.is_blocking_pair(inst, asg, rep.witness.i, rep.witness.j)
        assert inst.seats.distance(
            asg.seat_of[rep.witness.i], asg.seat_of[rep.witness.j]
        ) == 1
