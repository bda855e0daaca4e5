"""Depth-first branch-and-bound over an LP backend."""
from __future__ import annotations

import math
from fractions import Fraction

from ..errors import ResourceExhausted
from .model import LpModel, LpSolution, Status

DEFAULT_NODE_LIMIT = 200_000


def _fractional(x, eps):
    if isinstance(x, Fraction):
        return x.denominator != 1
    return abs(x - round(x)) > eps


def branch_and_bound(model: LpModel, relax, eps=0, node_limit=DEFAULT_NODE_LIMIT, cutoff=None) -> LpSolution:
    """Maximize ``model`` with integrality on flagged variables.

    ``relax(model, lower, upper)`` solves one relaxation. Branching takes the
    lowest-index fractional variable and explores its ``<= floor`` child first.
    Nodes whose bound does not beat ``cutoff`` (or the incumbent) are pruned;
    if nothing beats ``cutoff`` the result is reported infeasible.
    """
    integer = [j for j, flag in enumerate(model.integer) if flag]
    best = None
    best_value = cutoff
    stack = [(list(model.lower), list(model.upper))]
    nodes = 0
    root_unbounded = False
    while stack:
        lower, upper = stack.pop()
        nodes += 1
        if nodes > node_limit:
            raise ResourceExhausted(f"branch-and-bound on {model.name} exceeded {node_limit} nodes",
                                    context=model.name)
        sol = relax(model, lower, upper)
        if sol.status is Status.INFEASIBLE:
            continue
        if sol.status is Status.UNBOUNDED:
            if nodes == 1:
                root_unbounded = True
                break
            continue
        if best_value is not None and sol.objective_value <= best_value + eps:
            continue
        branch = next((j for j in integer if _fractional(sol.primal[j], eps)), None)
        if branch is None:
            x = list(sol.primal)
            if not all(isinstance(v, Fraction) for v in x):
                for j in integer:
                    x[j] = float(round(x[j]))
            best = LpSolution(Status.OPTIMAL, sol.objective_value, x, backend=sol.backend)
            best_value = sol.objective_value
            continue
        v = sol.primal[branch]
        down_upper = list(upper)
        down_upper[branch] = Fraction(math.floor(v))
        up_lower = list(lower)
        up_lower[branch] = Fraction(math.ceil(v))
        stack.append((up_lower, list(upper)))
        stack.append((list(lower), down_upper))
    if root_unbounded:
        return LpSolution(Status.UNBOUNDED, nodes=nodes)
    if best is None:
        return LpSolution(Status.INFEASIBLE, nodes=nodes)
    best.nodes = nodes
    return best
