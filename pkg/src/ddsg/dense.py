"""Unconstrained densest subgraph and single-cardinality at-least-k solvers.

Peeling always removes a minimum-degree node, smallest id first among ties.
The LP-based routines share :func:`density_lp` and :func:`level_sets`, which
the vector-demand solver reuses.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction

from .errors import InputError, SolverError
from .graph import ColoredGraph, Density, Subset, best_subset
from .lp import LpModel, solve_lp, tolerance

DEFAULT_GPP_ITERATIONS = 5


@dataclass(frozen=True)
class PeelTrace:
    removal_order: tuple
    removal_degrees: tuple
    prefix_best: Subset

    @property
    def best_density(self) -> Density:
        return self.prefix_best.density


def peel_sequence(g: ColoredGraph, members=None):
    """Yield ``(node, degree_at_removal)`` in greedy min-degree peeling order.

    A bucket queue indexed by current degree; each bucket is a heap of node ids
    so ties go to the smallest id. Stale heap entries are skipped lazily.
    """
    alive = set(range(g.n)) if members is None else set(members)
    adj = g.adjacency
    deg = {v: len(adj[v] & alive) for v in alive}
    top = max(deg.values(), default=0)
    buckets = [[] for _ in range(top + 1)]
    for v in sorted(alive):
        buckets[deg[v]].append(v)
    cur = 0
    while alive:
        while True:
            bucket = buckets[cur]
            while bucket and (bucket[0] not in alive or deg[bucket[0]] != cur):
                heapq.heappop(bucket)
            if bucket:
                break
            cur += 1
        v = heapq.heappop(bucket)
        d = deg[v]
        alive.discard(v)
        for u in adj[v]:
            if u in alive:
                deg[u] -= 1
                heapq.heappush(buckets[deg[u]], u)
        yield v, d
        cur = max(cur - 1, 0)


def peel_trace(g: ColoredGraph, min_size=1) -> PeelTrace:
    """Peel all of ``g`` and keep the densest suffix set with at least ``min_size`` nodes."""
    order, degrees = [], []
    size, edges = g.n, g.m
    best_size, best_edges, best_cut = size, edges, 0
    for v, d in peel_sequence(g):
        order.append(v)
        degrees.append(d)
        size -= 1
        edges -= d
        if size >= min_size and size > 0 and edges * best_size > best_edges * size:
            best_size, best_edges, best_cut = size, edges, len(order)
    removed = set(order[:best_cut])
    best = g.subset(v for v in range(g.n) if v not in removed)
    return PeelTrace(tuple(order), tuple(degrees), best)


def dsp_peel(g: ColoredGraph) -> Subset:
    """Greedy peeling: 1/2-approximate densest subgraph."""
    if g.n == 0:
        raise InputError("graph is empty")
    return peel_trace(g).prefix_best


def greedy_plus_plus(g: ColoredGraph, iterations=DEFAULT_GPP_ITERATIONS) -> Subset:
    """Load-augmented repeated peeling; returns the best suffix set over all passes."""
    if g.n == 0:
        raise InputError("graph is empty")
    if iterations < 1:
        raise InputError("iterations must be at least 1")
    adj = g.adjacency
    load = [0] * g.n
    best_size, best_edges, best_removed = g.n, g.m, frozenset()
    for _ in range(iterations):
        alive = set(range(g.n))
        deg = [len(a) for a in adj]
        heap = [(load[v] + deg[v], v) for v in range(g.n)]
        heapq.heapify(heap)
        size, edges = g.n, g.m
        removed = []
        while heap:
            key, v = heapq.heappop(heap)
            if v not in alive or key != load[v] + deg[v]:
                continue
            d = deg[v]
            alive.discard(v)
            removed.append(v)
            load[v] += d
            for u in adj[v]:
                if u in alive:
                    deg[u] -= 1
                    heapq.heappush(heap, (load[u] + deg[u], u))
            size -= 1
            edges -= d
            if size > 0 and edges * best_size > best_edges * size:
                best_size, best_edges, best_removed = size, edges, frozenset(removed)
    return g.subset(v for v in range(g.n) if v not in best_removed)


def density_lp(g: ColoredGraph, groups, cap=None, name="density_lp") -> LpModel:
    """Edge/node LP: maximize sum x_e with x_e <= y_u, x_e <= y_v.

    ``groups`` is a list of ``(nodes, mass)`` pairs, each adding the equality
    ``sum_{v in nodes} y_v = mass``; ``cap`` bounds every y_v from above.
    Variables: x for each edge in ``g.edges`` order, then y for each node.
    """
    model = LpModel(name=name)
    for u, v in g.edges:
        model.add_var(f"x_{u}_{v}", obj=1)
    ybase = g.m
    for v in range(g.n):
        model.add_var(f"y_{v}", ub=cap)
    for e, (u, v) in enumerate(g.edges):
        model.add_constraint({e: 1, ybase + u: -1}, "<=", 0, f"xu_{u}_{v}")
        model.add_constraint({e: 1, ybase + v: -1}, "<=", 0, f"xv_{u}_{v}")
    for i, (nodes, mass) in enumerate(groups):
        model.add_constraint({ybase + v: 1 for v in sorted(nodes)}, "=", mass, f"mass_{i}")
    return model


def node_values(g: ColoredGraph, solution):
    return solution.primal[g.m:g.m + g.n]


def level_sets(values, eps=0, include_zero=False):
    """Nested level sets ``{v : y_v >= r - eps}`` for each distinct threshold, largest r first.

    Thresholds closer than ``eps`` collapse into one. Empty sets are skipped.
    """
    thresholds = sorted(set(values), reverse=True)
    if include_zero:
        thresholds.append(0)
    out = []
    last_r = None
    last_set = None
    for r in thresholds:
        if last_r is not None and last_r - r <= eps:
            continue
        last_r = r
        members = frozenset(v for v, y in enumerate(values) if y >= r - eps)
        if members and members != last_set:
            out.append((r, members))
            last_set = members
    return out


def _lex_best(candidates):
    best = None
    for s in candidates:
        if best is None or s.density > best.density or (
                s.density == best.density and s.sorted_members() < best.sorted_members()):
            best = s
    return best


def dsp_exact(g: ColoredGraph, backend=None) -> Subset:
    """Exact densest subgraph from an optimal vertex of the densest-subgraph LP plus a level-set sweep."""
    if g.n == 0:
        raise InputError("graph is empty")
    model = density_lp(g, [(range(g.n), 1)], name="dsp")
    sol = solve_lp(model, backend)
    sol_check(sol, model)
    eps = tolerance(sol)
    sets = level_sets(node_values(g, sol), eps)
    return _lex_best(g.subset(s) for _, s in sets)


def sol_check(sol, model):
    if not sol.optimal:
        raise SolverError(f"{model.name}: expected an optimal LP solution, got {sol.status.value}")


def _check_k(g, k):
    if not 1 <= k <= g.n:
        raise InputError(f"k must lie in 1..{g.n}, got {k}")


def dalks_peel(g: ColoredGraph, k: int) -> Subset:
    """Densest peeling suffix set of size >= k (a 1/3-approximation for DalkS)."""
    _check_k(g, k)
    return peel_trace(g, min_size=k).prefix_best


def pad_to_size(g: ColoredGraph, members, k):
    """Add outside nodes by maximum degree into the set (smallest id on ties) until |S| >= k."""
    members = set(members)
    adj = g.adjacency
    gain = {v: len(adj[v] & members) for v in range(g.n) if v not in members}
    while len(members) < k:
        v = min(gain, key=lambda u: (-gain[u], u))
        del gain[v]
        members.add(v)
        for u in adj[v]:
            if u in gain:
                gain[u] += 1
    return members


def dalks_lp(g: ColoredGraph, k: int, backend=None) -> Subset:
    """LP rounding for DalkS: level sets of the capped LP, padded to size k (1/2-approximation)."""
    _check_k(g, k)
    model = density_lp(g, [(range(g.n), 1)], cap=Fraction(1, k), name=f"dalks_{k}")
    sol = solve_lp(model, backend)
    sol_check(sol, model)
    eps = tolerance(sol)
    sets = level_sets(node_values(g, sol), eps, include_zero=True)
    return best_subset(g.subset(pad_to_size(g, s, k)) for _, s in sets)
