"""LP / MILP modeling and solving.

Two backends share one contract: ``rational`` (bundled exact simplex) and
``highs`` (scipy, floating point). The default, ``auto``, uses the exact solver
for models with at most ``DDSG_RATIONAL_MAX_VARS`` variables (100 unless set)
and HiGHS above that. ``DDSG_LP_BACKEND`` overrides the default; callers may
also pass ``backend=`` explicitly.
"""
from __future__ import annotations

import contextlib
import contextvars
import os

from ..errors import SolverError
from . import bnb, highs, rational
from .lpfile import dump_model, format_lp
from .model import Constraint, LpModel, LpSolution, Sense, Status

BACKENDS = {rational.NAME: rational, highs.NAME: highs}
AUTO = "auto"
ENV_VAR = "DDSG_LP_BACKEND"
SIZE_ENV_VAR = "DDSG_RATIONAL_MAX_VARS"
DEFAULT_RATIONAL_MAX_VARS = 100

_counter = contextvars.ContextVar("ddsg_lp_counter", default=None)
_dump_dir = contextvars.ContextVar("ddsg_lp_dump_dir", default=None)


def rational_size_limit():
    raw = os.environ.get(SIZE_ENV_VAR)
    return int(raw) if raw else DEFAULT_RATIONAL_MAX_VARS


def get_backend(name=None, model=None):
    """Resolve a backend name (or ``auto``) to its module, given the model to solve."""
    name = name or os.environ.get(ENV_VAR) or AUTO
    if name == AUTO:
        small = model is None or model.variable_count <= rational_size_limit()
        return rational if small else highs
    try:
        return BACKENDS[name]
    except KeyError:
        choices = sorted(BACKENDS) + [AUTO]
        raise SolverError(f"unknown LP backend {name!r}; choose from {choices}") from None


def tolerance(solution: LpSolution):
    """Feasibility tolerance of the backend that produced ``solution``."""
    return BACKENDS[solution.backend].EPS_FEAS if solution.backend else 0


class LpCounter:
    def __init__(self):
        self.lp_solves = 0
        self.milp_solves = 0


@contextlib.contextmanager
def count_solves():
    """Count LP relaxations solved inside the block (nested blocks each see their own)."""
    counter = LpCounter()
    parent = _counter.get()
    token = _counter.set(counter)
    try:
        yield counter
    finally:
        _counter.reset(token)
        if parent is not None:
            parent.lp_solves += counter.lp_solves
            parent.milp_solves += counter.milp_solves


@contextlib.contextmanager
def dumping_to(directory):
    token = _dump_dir.set(directory)
    try:
        yield
    finally:
        _dump_dir.reset(token)


def _relax(module, model, lower, upper):
    counter = _counter.get()
    if counter is not None:
        counter.lp_solves += 1
    return module.solve(model, lower, upper)


def solve_lp(model: LpModel, backend=None) -> LpSolution:
    """Solve a continuous model (integrality flags must all be off)."""
    if model.has_integers:
        raise SolverError(f"{model.name} has integer variables; use solve_milp")
    module = get_backend(backend, model)
    if _dump_dir.get() is not None:
        dump_model(model, _dump_dir.get())
    return _relax(module, model, None, None)


def solve_milp(model: LpModel, backend=None, node_limit=bnb.DEFAULT_NODE_LIMIT, cutoff=None) -> LpSolution:
    """Exact MILP optimum by depth-first branch-and-bound over the LP relaxation."""
    module = get_backend(backend, model)
    if _dump_dir.get() is not None:
        dump_model(model, _dump_dir.get())
    counter = _counter.get()
    if counter is not None:
        counter.milp_solves += 1
    if not model.has_integers:
        return _relax(module, model, None, None)
    return bnb.branch_and_bound(
        model, lambda m, lo, hi: _relax(module, m, lo, hi),
        eps=module.EPS_FEAS, node_limit=node_limit, cutoff=cutoff)


__all__ = [
    "BACKENDS", "Constraint", "LpCounter", "LpModel", "LpSolution", "Sense", "Status",
    "count_solves", "dump_model", "dumping_to", "format_lp", "get_backend",
    "solve_lp", "solve_milp", "tolerance",
]
