import random
from fractions import Fraction

import pytest

from ddsg import ContractViolation, InfeasibleExtension, InputError, build_graph
from ddsg.ddsp import (DdspParams, GammaSolver, ReductionKind, ceil_inverse, ddsp_approx,
                       ddsp_fallback_peel, diversify, is_diverse, parse_alpha, reduction_instances,
                       guarantee_ratio)
from ddsg.fixtures import FIXTURES
from ddsg.oracle import brute_force_dalks, brute_force_damks, brute_force_ddsp
from instances import ddsp_suite, random_graph

HALF = Fraction(1, 2)


def test_parse_alpha():
    assert parse_alpha("2/3") == Fraction(2, 3)
    assert parse_alpha(" 1 ") == 1
    for bad in ("0.5", "1/0", "a/b", ""):
        with pytest.raises(InputError):
            parse_alpha(bad)


@pytest.mark.parametrize("alpha, k", [("1/2", 2), ("2/3", 2), ("1/3", 3), ("2/5", 3), ("1", 1)])
def test_ceil_inverse_exact(alpha, k):
    assert ceil_inverse(parse_alpha(alpha)) == k


def test_params_range_check():
    g = FIXTURES["K4b"]()
    with pytest.raises(InputError):
        DdspParams("1/3").check(g)
    with pytest.raises(InputError):
        DdspParams("3/2").check(g)
    DdspParams("1/2").check(g)


def test_default_gamma_solver_threshold():
    g = FIXTURES["K4b"]()
    assert DdspParams(HALF).solver_for(g) is GammaSolver.DALKS_LP
    assert DdspParams(HALF).solver_for(g, lp_threshold=3) is GammaSolver.DALKS_PEEL
    assert DdspParams(HALF, "peel").solver_for(g) is GammaSolver.DALKS_PEEL


def test_diversify_two_triangles():
    g = FIXTURES["2T"]()
    out = diversify(g, g.subset({0, 1, 2}), HALF)
    assert out.members == frozenset(range(6)) and out.alpha == HALF and out.density == 1


def test_diversify_noop_when_feasible():
    g = FIXTURES["K4b"]()
    assert diversify(g, g.subset({0, 3}), HALF).members == frozenset({0, 3})


def test_diversify_k5p():
    g = FIXTURES["K5p"]()
    out = diversify(g, g.subset({0}), HALF)
    assert out.members == frozenset({0, 5}) and out.density == HALF


def test_diversify_raises_when_exhausted():
    g = FIXTURES["K5p"]()
    with pytest.raises(InfeasibleExtension):
        diversify(g, g.subset({0, 1}), HALF)


@pytest.mark.parametrize("name, alpha, value", [
    ("2T", HALF, 1), ("K4b", HALF, Fraction(3, 2)), ("T3", Fraction(1), 1)])
@pytest.mark.parametrize("gamma", ["lp", "peel"])
def test_ddsp_examples(name, alpha, value, gamma):
    g = FIXTURES[name]()
    s = ddsp_approx(g, DdspParams(alpha, gamma))
    assert s.density == value and is_diverse(s, alpha)


def test_ddsp_k4b_returns_whole_graph():
    assert ddsp_approx(FIXTURES["K4b"](), DdspParams(HALF)).members == frozenset(range(4))


def test_fallback_k5p():
    g = FIXTURES["K5p"]()
    s = ddsp_fallback_peel(g, g.full(), HALF)
    assert s.size == 2 and 5 in s and s.alpha == HALF


def test_fallback_precondition():
    g = FIXTURES["K4b"]()
    with pytest.raises(ContractViolation):
        ddsp_fallback_peel(g, g.full(), HALF)


def test_fallback_monochromatic():
    g = build_graph(3, [(0, 1), (0, 2), (1, 2)], ["a", "a", "a"])
    assert ddsp_fallback_peel(g, g.full(), HALF) is None


def test_ddsp_dispatches_to_fallback():
    g = FIXTURES["K5p"]()
    s = ddsp_approx(g, DdspParams(HALF))
    assert is_diverse(s, HALF) and 5 in s


def test_skewed_graph_goes_through_fallback():
    g = build_graph(4, [(0, 1), (1, 2)], ["a", "a", "a", "b"])
    s = ddsp_approx(g, DdspParams(HALF))
    assert is_diverse(s, HALF) and 3 in s


def test_single_color_with_alpha_below_one_rejected():
    g = build_graph(3, [(0, 1)], ["a", "a", "a"])
    with pytest.raises(InputError):
        ddsp_approx(g, DdspParams(HALF))


def test_guarantee_ratio_values():
    assert guarantee_ratio(HALF, 6, HALF) == Fraction(1, 4)
    assert guarantee_ratio(Fraction(1, 3), 4, HALF) == Fraction(3, 8)


def test_reduction_examples():
    t3 = FIXTURES["T3"]()
    h, alpha = reduction_instances(ReductionKind.DALKS, 2, t3)
    assert h.num_colors == 3 and alpha == HALF
    assert brute_force_ddsp(h, alpha).optimum == brute_force_dalks(t3, 2).optimum == 1
    h, alpha = reduction_instances("damks", 2, t3)
    assert h.n == 5 and h.num_colors == 2 and alpha == HALF
    assert brute_force_damks(t3, 2).optimum == HALF


def test_reduction_k1_is_dsp():
    g = FIXTURES["K5p"]()
    h, alpha = reduction_instances("dalks", 1, g)
    assert alpha == 1
    assert brute_force_ddsp(h, alpha).optimum == 2


def test_diversify_never_removes_nodes():
    rng = random.Random(31)
    for g, alpha in ddsp_suite(150, seed=31):
        nodes = {v for v in range(g.n) if rng.random() < 0.4} or {0}
        s = g.subset(nodes)
        out = diversify(g, s, alpha)
        assert out.members >= s.members and is_diverse(out, alpha)


def test_oracle_monotone_in_alpha():
    rng = random.Random(32)
    for _ in range(60):
        g = random_graph(rng, rng.randint(3, 10), 3)
        prev = None
        for alpha in (Fraction(1, 3), HALF, Fraction(2, 3), Fraction(1)):
            r = brute_force_ddsp(g, alpha)
            if prev is not None and r.feasible and prev.feasible:
                assert prev.optimum <= r.optimum
            if prev is not None and prev.feasible:
                assert r.feasible
            prev = r
