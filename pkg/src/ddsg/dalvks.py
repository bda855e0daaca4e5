"""Densest subgraph with a per-color lower bound on the number of members.

The LP route enumerates mass vectors ``p`` with ``k <= p <= (|V_c|)``, solves
the per-color LP for each, and rounds every optimum by a level-set sweep
followed by greedy completion of deficient colors.
"""
from __future__ import annotations

import itertools
import math
import time
from dataclasses import dataclass, field
from fractions import Fraction

from .demand import DemandVector, check_demand
from .dense import dalks_lp, density_lp, level_sets, node_values, peel_sequence, sol_check
from .errors import InputError, ResourceExhausted
from .graph import ColoredGraph, Subset, best_subset
from .lp import LpModel, LpSolution, solve_lp, tolerance


@dataclass
class SearchStats:
    """Bookkeeping for one run of the p-vector search."""

    p_vectors: int = 0
    lp_solves: int = 0
    pruned: int = 0
    best_p: tuple = None
    history: list = field(default_factory=list)


def check_p(g: ColoredGraph, k: DemandVector, p) -> tuple:
    p = tuple(int(x) for x in p)
    if len(p) != g.num_colors:
        raise InputError(f"p has {len(p)} entries for {g.num_colors} colors")
    for c, pc in enumerate(p):
        if not k[c] <= pc <= len(g.color_classes[c]):
            raise InputError(f"p[{c}]={pc} outside [{k[c]}, {len(g.color_classes[c])}]")
    if sum(p) < 1:
        raise InputError("p must have a positive entry")
    return p


def build_lp_p(g: ColoredGraph, p) -> LpModel:
    """LP(p): per-color mass p_c/|p|_1 on the y variables, each capped at 1/|p|_1."""
    total = sum(p)
    groups = [(g.color_classes[c], Fraction(pc, total)) for c, pc in enumerate(p)]
    name = "lp_p_" + "_".join(str(x) for x in p)
    return density_lp(g, groups, cap=Fraction(1, total), name=name)


def p_vectors(g: ColoredGraph, k: DemandVector, restricted=False):
    """All p with k <= p <= (|V_c|), lexicographically ascending.

    ``restricted`` keeps only vectors that are tight (p_c = k_c) on some demanded color.
    """
    ranges = [range(k[c], len(g.color_classes[c]) + 1) for c in range(g.num_colors)]
    demanded = k.demanded
    for p in itertools.product(*ranges):
        if sum(p) < 1:
            continue
        if restricted and not any(p[c] == k[c] for c in demanded):
            continue
        yield p


def count_p_vectors(g: ColoredGraph, k: DemandVector, restricted=False) -> int:
    """Number of vectors :func:`p_vectors` yields, without enumerating them."""
    widths = [len(g.color_classes[c]) - k[c] + 1 for c in range(g.num_colors)]
    total = math.prod(widths)
    if restricted:
        # Subtract vectors that are slack on every demanded color.
        total -= math.prod(w - 1 if c in k.demanded else w for c, w in enumerate(widths))
    elif k.total == 0:
        total -= 1
    return total


def make_it_feasible(g: ColoredGraph, s, k: DemandVector) -> Subset:
    """Top up every deficient color, picking nodes with the most edges into the current set."""
    members = set(s.members if isinstance(s, Subset) else s)
    adj = g.adjacency
    for c, cls in enumerate(g.color_classes):
        have = sum(1 for v in members if g.color_of[v] == c)
        if have >= k[c]:
            continue
        pool = {v: len(adj[v] & members) for v in cls if v not in members}
        for _ in range(k[c] - have):
            v = min(pool, key=lambda u: (-pool[u], u))
            del pool[v]
            members.add(v)
            for u in adj[v]:
                if u in pool:
                    pool[u] += 1
    return g.subset(members)


@dataclass(frozen=True)
class SweepCandidate:
    threshold: object
    raw_set: Subset
    feasible_set: Subset
    c_sat: frozenset


def sweep_candidates(g: ColoredGraph, k: DemandVector, solution: LpSolution):
    """Level sets S(r), r in {y*_v} and 0, each with its satisfied colors and its completion."""
    eps = tolerance(solution)
    out = []
    for r, members in level_sets(node_values(g, solution), eps, include_zero=True):
        raw = g.subset(members)
        c_sat = frozenset(c for c, cnt in enumerate(raw.color_counts) if cnt >= k[c])
        out.append(SweepCandidate(r, raw, make_it_feasible(g, raw, k), c_sat))
    return out


def _search(g, k, restricted, prune, incumbent, backend, stats, deadline):
    best = incumbent
    best_lp = None
    for p in p_vectors(g, k, restricted):
        if deadline is not None and time.monotonic() > deadline:
            raise ResourceExhausted(f"time limit reached after {stats.lp_solves} LP solves",
                                    context={"lp_solves": stats.lp_solves, "p": p})
        stats.p_vectors += 1
        model = build_lp_p(g, p)
        sol = solve_lp(model, backend)
        stats.lp_solves += 1
        sol_check(sol, model)
        if prune and best is not None and sol.objective_value < best.density.value - tolerance(sol):
            stats.pruned += 1
            continue
        cand = best_subset(c.feasible_set for c in sweep_candidates(g, k, sol))
        stats.history.append((p, sol.objective_value, cand.density))
        if best is None or cand.density > best.density:
            best = cand
        if best_lp is None or cand.density > best_lp.density:
            best_lp = cand
            stats.best_p = p
    return best_lp


def dalvks_lp_full(g: ColoredGraph, k, prune=True, backend=None, stats=None, deadline=None) -> Subset:
    """Best level-set candidate over every p-vector (1/3-approximation).

    With ``prune`` an LP whose optimum is strictly below the best density found
    so far cannot be the LP of an optimal solution's color profile, so its
    sweep is skipped.
    """
    k = check_demand(g, k)
    stats = SearchStats() if stats is None else stats
    return _search(g, k, False, prune, None, backend, stats, deadline)


def dalvks_peel(g: ColoredGraph, k) -> Subset:
    """Min-degree peeling while every demanded color keeps more than k_c members."""
    k = check_demand(g, k)
    demanded = k.demanded
    counts = [len(cls) for cls in g.color_classes]
    size, edges = g.n, g.m
    best_size, best_edges, best_cut = size, edges, 0
    order = []
    for v, d in peel_sequence(g):
        if not all(counts[c] > k[c] for c in demanded):
            break
        order.append(v)
        counts[g.color_of[v]] -= 1
        size -= 1
        edges -= d
        if edges * best_size > best_edges * size:
            best_size, best_edges, best_cut = size, edges, len(order)
    removed = set(order[:best_cut])
    return g.subset(v for v in range(g.n) if v not in removed)


def dalvks_prop2(g: ColoredGraph, k, backend=None) -> Subset:
    """Baseline 1/4-approximation: DalkS LP rounding with k = |k|_1, then completion."""
    k = check_demand(g, k)
    return make_it_feasible(g, dalks_lp(g, k.total, backend), k)


def dalvks_accel(g: ColoredGraph, k, prune=True, backend=None, stats=None, deadline=None) -> Subset:
    """Denser of the peeling answer and the LP search over p-vectors tight on some demanded color.

    The peeling answer also seeds the pruning incumbent. ``deadline`` is a
    :func:`time.monotonic` timestamp; passing it raises ResourceExhausted.
    """
    k = check_demand(g, k)
    stats = SearchStats() if stats is None else stats
    peel = dalvks_peel(g, k)
    lp_best = _search(g, k, True, prune, peel, backend, stats, deadline)
    if lp_best is not None and lp_best.density > peel.density:
        return lp_best
    return peel


def is_feasible(s: Subset, k: DemandVector) -> bool:
    return k.satisfied_by(s.color_counts)
