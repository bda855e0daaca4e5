import random
from fractions import Fraction

import pytest

from ddsg import InputError, build_graph
from ddsg.dense import (dalks_lp, dalks_peel, dsp_exact, dsp_peel, greedy_plus_plus, level_sets,
                        pad_to_size, peel_trace)
from ddsg.fixtures import FIXTURES
from ddsg.oracle import brute_force_dalks, brute_force_ddsp
from instances import random_graph


def edge():
    return build_graph(2, [(0, 1)], ["a", "a"])


@pytest.mark.parametrize("make, members, value", [
    (FIXTURES["T3"], {0, 1, 2}, Fraction(1)),
    (FIXTURES["K5p"], {0, 1, 2, 3, 4}, Fraction(2)),
    (edge, {0, 1}, Fraction(1, 2)),
])
def test_dsp_peel_examples(make, members, value):
    s = dsp_peel(make())
    assert s.members == frozenset(members) and s.density == value


def test_peel_removes_pendant_first():
    trace = peel_trace(FIXTURES["K5p"]())
    assert trace.removal_order[0] == 5 and trace.removal_degrees[0] == 1


def test_peel_ties_go_to_smallest_id():
    assert peel_trace(FIXTURES["2T"]()).removal_order == (0, 1, 2, 3, 4, 5)


@pytest.mark.parametrize("name, value", [("T3", 1), ("K5p", 2)])
def test_greedy_plus_plus_examples(name, value):
    assert greedy_plus_plus(FIXTURES[name](), 5).density == value


@pytest.mark.parametrize("name", sorted(FIXTURES))
def test_greedy_plus_plus_dominates_peel(name):
    g = FIXTURES[name]()
    assert greedy_plus_plus(g, 5).density >= dsp_peel(g).density


def test_greedy_plus_plus_first_pass_is_peeling():
    rng = random.Random(8)
    for _ in range(50):
        g = random_graph(rng, rng.randint(2, 20), 1)
        assert greedy_plus_plus(g, 1).density == dsp_peel(g).density


def test_greedy_plus_plus_monotone_in_iterations():
    rng = random.Random(9)
    for _ in range(40):
        g = random_graph(rng, rng.randint(5, 25), 2, p=0.3)
        ds = [greedy_plus_plus(g, t).density for t in range(1, 7)]
        assert all(a <= b for a, b in zip(ds, ds[1:]))


def test_greedy_plus_plus_rejects_zero_iterations():
    with pytest.raises(InputError):
        greedy_plus_plus(FIXTURES["T3"](), 0)


@pytest.mark.parametrize("name, value", [("T3", 1), ("2T", 1), ("K5p", 2)])
def test_dsp_exact_examples(name, value):
    assert dsp_exact(FIXTURES[name]()).density == value


def test_dsp_exact_tie_break_is_lexicographic():
    assert dsp_exact(FIXTURES["2T"]()).members == frozenset({0, 1, 2})


def test_level_sets_nested_and_deduplicated():
    vals = [Fraction(1, 3), Fraction(1, 6), Fraction(1, 3), 0, Fraction(1, 6)]
    sets = level_sets(vals, include_zero=True)
    assert [r for r, _ in sets] == [Fraction(1, 3), Fraction(1, 6), 0]
    members = [s for _, s in sets]
    assert all(a < b for a, b in zip(members, members[1:]))


def test_level_sets_cluster_within_tolerance():
    sets = level_sets([0.25, 0.25 + 1e-12, 0.1], eps=1e-9)
    assert [len(s) for _, s in sets] == [2, 3]


def test_pad_prefers_neighbors():
    g = FIXTURES["K5p"]()
    assert pad_to_size(g, {5}, 3) == {0, 1, 5}


@pytest.mark.parametrize("k, members", [(2, {0, 1, 2}), (3, {0, 1, 2})])
def test_dalks_peel_t3(k, members):
    assert dalks_peel(FIXTURES["T3"](), k).members == frozenset(members)


def test_dalks_peel_forced_whole_graph():
    s = dalks_peel(FIXTURES["K5p"](), 6)
    assert s.size == 6 and s.density == Fraction(11, 6)


def test_dalks_peel_two_triangles_k4():
    assert dalks_peel(FIXTURES["2T"](), 4).density == 1


@pytest.mark.parametrize("name, k, value", [("T3", 3, 1), ("2T", 2, 1), ("K5p", 2, 2)])
def test_dalks_lp_examples(name, k, value):
    assert dalks_lp(FIXTURES[name](), k).density == value


def test_dalks_lp_k5p_picks_clique():
    assert dalks_lp(FIXTURES["K5p"](), 2).members == frozenset(range(5))


@pytest.mark.parametrize("solver", [dalks_peel, dalks_lp])
def test_dalks_rejects_bad_k(solver):
    with pytest.raises(InputError):
        solver(FIXTURES["T3"](), 4)
    with pytest.raises(InputError):
        solver(FIXTURES["T3"](), 0)


def test_dalks_floors_against_brute_force():
    rng = random.Random(12)
    for _ in range(60):
        g = random_graph(rng, rng.randint(2, 12), 1)
        for k in range(1, g.n + 1):
            opt = brute_force_dalks(g, k).optimum.value
            peel, lp = dalks_peel(g, k), dalks_lp(g, k)
            assert peel.size >= k and lp.size >= k
            assert 3 * peel.density.value >= opt
            assert 2 * lp.density.value >= opt


def test_dsp_exact_equals_brute_force():
    rng = random.Random(13)
    for _ in range(150):
        g = random_graph(rng, rng.randint(1, 12), 1)
        assert dsp_exact(g).density == brute_force_ddsp(g, 1).optimum


def test_dsp_peel_half_approximation():
    rng = random.Random(14)
    for _ in range(500):
        g = random_graph(rng, rng.randint(1, 30), 1, p=rng.uniform(0.05, 0.6))
        exact = dsp_exact(g, "highs" if g.n > 12 else None).density.value
        assert 2 * dsp_peel(g).density.value >= exact
