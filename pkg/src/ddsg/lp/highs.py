"""Floating-point LP backend on top of scipy's HiGHS bindings."""
from __future__ import annotations

import numpy as np
from scipy.optimize import linprog
from scipy.sparse import csr_matrix

from ..errors import SolverError
from .model import LpModel, LpSolution, Sense, Status

NAME = "highs"
EPS_FEAS = 1e-9

_OPTIONS = {"primal_feasibility_tolerance": 1e-10, "dual_feasibility_tolerance": 1e-10}


def _matrix(rows, nvar):
    data, ri, ci = [], [], []
    for i, row in enumerate(rows):
        for j, a in row.items():
            ri.append(i)
            ci.append(j)
            data.append(float(a))
    return csr_matrix((data, (ri, ci)), shape=(len(rows), nvar))


def _run(cost, ub_rows, ub_rhs, eq_rows, eq_rhs, bounds, nvar):
    return linprog(
        cost,
        A_ub=_matrix(ub_rows, nvar) if ub_rows else None,
        b_ub=ub_rhs or None,
        A_eq=_matrix(eq_rows, nvar) if eq_rows else None,
        b_eq=eq_rhs or None,
        bounds=bounds,
        method="highs",
        options=_OPTIONS,
    )


def solve(model: LpModel, lower=None, upper=None) -> LpSolution:
    lower = model.lower if lower is None else lower
    upper = model.upper if upper is None else upper
    nvar = model.variable_count
    ub_rows, ub_rhs, eq_rows, eq_rhs = [], [], [], []
    for con in model.constraints:
        if con.sense is Sense.LE:
            ub_rows.append(con.coeffs)
            ub_rhs.append(float(con.rhs))
        elif con.sense is Sense.GE:
            ub_rows.append({j: -a for j, a in con.coeffs.items()})
            ub_rhs.append(-float(con.rhs))
        else:
            eq_rows.append(con.coeffs)
            eq_rhs.append(float(con.rhs))
    bounds = [(float(lo), None if hi is None else float(hi)) for lo, hi in zip(lower, upper)]
    parts = (ub_rows, ub_rhs, eq_rows, eq_rhs, bounds, nvar)
    res = _run(-np.array([float(c) for c in model.objective]), *parts)
    if res.status == 2:
        # Presolve may say "infeasible" for an unbounded model; settle it with a zero objective.
        if _run(np.zeros(nvar), *parts).status == 0:
            return LpSolution(Status.UNBOUNDED, backend=NAME)
        return LpSolution(Status.INFEASIBLE, backend=NAME)
    if res.status == 3:
        return LpSolution(Status.UNBOUNDED, backend=NAME)
    if res.status != 0:
        raise SolverError(f"HiGHS failed on {model.name}: {res.message}")
    x = [float(v) for v in res.x]
    worst = model.max_violation(x, lower, upper)
    if worst > EPS_FEAS:
        raise SolverError(f"HiGHS solution of {model.name} violates a constraint by {worst:.3g}")
    return LpSolution(Status.OPTIMAL, float(-res.fun), x, backend=NAME, iterations=int(res.nit))
