import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from ddsg import InfeasibleInstance, InputError
from ddsg.dalvks import (SearchStats, build_lp_p, check_p, count_p_vectors, dalvks_accel,
                         dalvks_lp_full, dalvks_peel, dalvks_prop2, is_feasible, make_it_feasible,
                         p_vectors, sweep_candidates)
from ddsg.demand import DemandVector, check_demand
from ddsg.dense import dalks_lp
from ddsg.fixtures import FIXTURES
from ddsg.lp import Sense, solve_lp
from ddsg.oracle import brute_force_dalvks
from instances import random_demand, random_graph

SOLVERS = [dalvks_lp_full, dalvks_peel, dalvks_prop2, dalvks_accel]


def fx(name):
    return FIXTURES[name]()


def test_demand_parse_and_format():
    g = fx("2T")
    k = DemandVector.parse(g, "b=2, r=1")
    assert k.counts == (1, 2) and k.format(g) == "r=1,b=2"
    assert DemandVector.parse(g, "b=1").counts == (0, 1)
    for bad in ("r", "r=x", "green=1"):
        with pytest.raises(InputError):
            DemandVector.parse(g, bad)


def test_demand_checks():
    g = fx("2T")
    with pytest.raises(InfeasibleInstance, match="'r'"):
        check_demand(g, (7, 0))
    with pytest.raises(InputError):
        check_demand(g, (0, 0))
    with pytest.raises(InputError):
        check_demand(g, (1,))
    with pytest.raises((InputError, ValueError)):
        DemandVector((-1, 1))


@pytest.mark.parametrize("solver", SOLVERS)
def test_all_solvers_reject_oversized_demand(solver):
    with pytest.raises(InfeasibleInstance):
        solver(fx("2T"), (4, 1))


def test_lp_p_structure_k4b():
    model = build_lp_p(fx("K4b"), (2, 2))
    assert model.variable_count == 10
    coupling = [c for c in model.constraints if c.sense is Sense.LE]
    mass = [c for c in model.constraints if c.sense is Sense.EQ]
    assert len(coupling) == 12 and len(mass) == 2
    assert all(c.rhs == Fraction(1, 2) for c in mass)
    assert model.upper[6:] == [Fraction(1, 4)] * 4
    assert model.objective == [1] * 6 + [0] * 4


def test_lp_p_single_color_is_dalks_lp():
    g = fx("T3")
    assert solve_lp(build_lp_p(g, (3,))).objective_value == dalks_lp(g, 3).density.value


def test_check_p():
    g, k = fx("2T"), DemandVector((1, 1))
    assert check_p(g, k, [2, 3]) == (2, 3)
    with pytest.raises(InputError):
        check_p(g, k, (0, 3))
    with pytest.raises(InputError):
        check_p(g, k, (2, 4))


def test_p_vectors_order_and_restriction():
    g, k = fx("2T"), DemandVector((2, 0))
    full = list(p_vectors(g, k))
    assert full == sorted(full) and full[0] == (2, 0) and len(full) == 8
    restricted = list(p_vectors(g, k, restricted=True))
    assert restricted == [(2, 0), (2, 1), (2, 2), (2, 3)]
    assert count_p_vectors(g, k) == 8 and count_p_vectors(g, k, True) == 4


def test_sweep_two_triangles_uniform():
    g = fx("2T")
    sol = solve_lp(build_lp_p(g, (3, 3)))
    assert set(sol.primal[g.m:]) == {Fraction(1, 6)}
    cands = sweep_candidates(g, DemandVector((1, 1)), sol)
    # Both thresholds 1/6 and 0 give V, so a single candidate remains.
    assert [c.raw_set.members for c in cands] == [frozenset(range(6))]
    assert cands[0].c_sat == frozenset({0, 1})


def test_sweep_k5p_top_threshold_is_everything():
    g = fx("K5p")
    sol = solve_lp(build_lp_p(g, (5, 1)))
    cands = sweep_candidates(g, DemandVector((0, 1)), sol)
    assert cands[0].raw_set.members == frozenset(range(6))


def test_sweep_candidates_nested():
    rng = random.Random(41)
    for _ in range(40):
        g = random_graph(rng, rng.randint(3, 10), 2)
        if g.m == 0:
            continue
        k = DemandVector(random_demand(rng, g))
        p = tuple(rng.randint(k[c], len(cls)) for c, cls in enumerate(g.color_classes))
        if sum(p) == 0:
            continue
        cands = sweep_candidates(g, k, solve_lp(build_lp_p(g, p)))
        thresholds = [c.threshold for c in cands]
        assert thresholds == sorted(thresholds, reverse=True)
        for a, b in zip(cands, cands[1:]):
            assert a.raw_set.members < b.raw_set.members
        for c in cands:
            assert is_feasible(c.feasible_set, k)
            assert c.feasible_set.members >= c.raw_set.members


@pytest.mark.parametrize("name, nodes, k, expected, value", [
    ("2T", {0, 1, 2}, (3, 1), {0, 1, 2, 3}, Fraction(3, 4)),
    ("K4b", {0, 1, 2, 3}, (1, 1), {0, 1, 2, 3}, Fraction(3, 2)),
    ("K5p", {5}, (2, 1), {0, 1, 5}, Fraction(2, 3)),
])
def test_make_it_feasible_examples(name, nodes, k, expected, value):
    g = fx(name)
    out = make_it_feasible(g, g.subset(nodes), DemandVector(k))
    assert out.members == frozenset(expected) and out.density == value


@pytest.mark.parametrize("name, k, value", [
    ("2T", (1, 1), 1), ("K4b", (2, 2), Fraction(3, 2)), ("K5p", (0, 1), Fraction(11, 6))])
def test_lp_full_examples(name, k, value):
    assert dalvks_lp_full(fx(name), k).density == value


@pytest.mark.parametrize("name, k, value", [
    ("2T", (1, 1), 1), ("K5p", (1, 1), Fraction(11, 6)), ("T3", (2,), 1)])
def test_peel_examples(name, k, value):
    assert dalvks_peel(fx(name), k).density == value


def test_peel_k5p_keeps_whole_graph():
    assert dalvks_peel(fx("K5p"), (1, 1)).size == 6


def test_peel_t3_records_only_whole_graph():
    assert dalvks_peel(fx("T3"), (2,)).members == frozenset(range(3))


@pytest.mark.parametrize("name, k, floor", [
    ("2T", (1, 1), Fraction(3, 4)), ("K4b", (1, 1), Fraction(3, 8)), ("T3", (3,), Fraction(1))])
def test_prop2_examples(name, k, floor):
    assert dalvks_prop2(fx(name), k).density >= floor


def test_prop2_t3_forced():
    assert dalvks_prop2(fx("T3"), (3,)).members == frozenset(range(3))


@pytest.mark.parametrize("name, k, value", [("2T", (1, 1), 1), ("K4b", (2, 2), Fraction(3, 2))])
def test_accel_examples(name, k, value):
    assert dalvks_accel(fx(name), k).density == value


def test_search_stats_bookkeeping():
    stats = SearchStats()
    dalvks_lp_full(fx("2T"), (1, 1), stats=stats)
    assert stats.p_vectors == stats.lp_solves == 9
    assert stats.best_p is not None
    assert stats.pruned + len(stats.history) == 9


def test_accel_on_random_two_color_graphs():
    rng = random.Random(42)
    for _ in range(40):
        g = random_graph(rng, rng.randint(4, 14), 2)
        k = random_demand(rng, g)
        opt = brute_force_dalvks(g, k).optimum.value
        accel, peel = dalvks_accel(g, k), dalvks_peel(g, k)
        assert accel.density >= peel.density
        assert 3 * accel.density.value >= opt


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2 ** 32 - 1))
def test_outputs_always_feasible(seed):
    rng = random.Random(seed)
    g = random_graph(rng, rng.randint(2, 9), rng.randint(1, 3))
    k = DemandVector(random_demand(rng, g))
    for solver in SOLVERS:
        assert is_feasible(solver(g, k), k)
