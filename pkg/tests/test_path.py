import random

import pytest

import seatswap as ss


def test_single_seat():
    inst = ss.gen_random(1, 0.0, "path", seed=0)
    asg = ss.solve_path(inst)
    assert asg.seat_of == (0,)
    assert ss.check(inst, asg, 1).stable
    assert ss.check(inst, asg, None).stable


def test_example1_trace_from_seed_a():
    inst, _ = ss.gen_example1()
    asg = ss.solve_path(inst, inst.index("a"))
    assert [inst.label(asg.agent_at[v]) for v in range(4)] == ["a", "b", "d", "c"]
    assert ss.check(inst, asg, 2).stable


def test_example1_all_seeds():
    inst, _ = ss.gen_example1()
    for seed in range(4):
        asg = ss.solve_path(inst, seed)
        assert asg.seat_of[seed] == 0
        assert ss.check(inst, asg, 2).stable


def test_requires_path_shape():
    inst = ss.gen_random(4, 0.5, "cycle", seed=1)
    with pytest.raises(ss.NotAPath):
        ss.solve_path(inst)


def test_seed_out_of_range():
    inst = ss.gen_random(3, 0.5, "path", seed=1)
    with pytest.raises(ss.BadParameter):
        ss.solve_path(inst, 5)


def test_random_suite_small():
    seed = 0
    for n in range(1, 10):
        for p in (0.1, 0.5, 0.9):
            for _ in range(40):
                seed += 1
                inst = ss.gen_random(n, p, "path", seed=6_000_000 + seed)
                asg = ss.solve_path(inst, seed % n)
                assert ss.check(inst, asg, 2).stable
                assert ss.check(inst, asg, 1).stable


def test_construction_invariant():
    # whenever a seat was filled from the fallback pool, nobody seated in
    # the next two seats approves the seat before it
    seed = 0
    for n in range(3, 10):
        for _ in range(60):
            seed += 1
            inst = ss.gen_random(n, 0.4, "path", seed=2_000_000 + seed)
            asg = ss.solve_path(inst)
            occ = asg.agent_at
            for i in range(1, n):
                if not inst.prefs.has_arc(occ[i], occ[i - 1]):
                    for later in (i + 1, i + 2):
                        if later < n:
                            assert not inst.prefs.has_arc(occ[later], occ[i - 1])
