"""Ground-truth optima: exhaustive enumeration and the size-guessing MILP."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .demand import DemandVector, check_demand
from .errors import ContractViolation, InfeasibleInstance, SolverError
from .graph import ColoredGraph, Density, Subset
from .lp import LpModel, Status, solve_milp, tolerance

MAX_BRUTE_FORCE_N = 25


class Method(str, enum.Enum):
    BRUTE_FORCE = "BruteForce"
    MILP = "Milp"


@dataclass(frozen=True)
class OracleResult:
    optimum: Density | None
    witness: Subset | None
    method: Method
    status: Status

    @property
    def feasible(self) -> bool:
        return self.status is Status.OPTIMAL


def _members(mask):
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def _enumerate(g: ColoredGraph, accept):
    """Gray-code sweep over nonempty subsets; ``accept(size, color_counts)`` filters.

    Returns the densest accepted mask, lexicographically smallest member tuple on ties.
    """
    n = g.n
    if n > MAX_BRUTE_FORCE_N:
        raise ContractViolation(f"brute force is capped at n={MAX_BRUTE_FORCE_N}, got n={n}")
    adjmask = [sum(1 << u for u in g.adjacency[v]) for v in range(n)]
    color = g.color_of
    counts = [0] * g.num_colors
    mask = size = edges = 0
    best_mask, best_e, best_s = None, 0, 1
    for i in range(1, 1 << n):
        v = (i & -i).bit_length() - 1
        bit = 1 << v
        if mask & bit:
            mask ^= bit
            size -= 1
            counts[color[v]] -= 1
            edges -= (adjmask[v] & mask).bit_count()
        else:
            edges += (adjmask[v] & mask).bit_count()
            mask |= bit
            size += 1
            counts[color[v]] += 1
        if not size or not accept(size, counts):
            continue
        lhs, rhs = edges * best_s, best_e * size
        if best_mask is None or lhs > rhs or (lhs == rhs and _members(mask) < _members(best_mask)):
            best_mask, best_e, best_s = mask, edges, size
    return best_mask


def _result(g, mask, method):
    if mask is None:
        return OracleResult(None, None, method, Status.INFEASIBLE)
    witness = g.subset(_members(mask))
    return OracleResult(witness.density, witness, method, Status.OPTIMAL)


def brute_force_ddsp(g: ColoredGraph, alpha) -> OracleResult:
    """Densest S with c_max(S) <= alpha * |S|, by enumeration."""
    alpha = Fraction(alpha)
    num, den = alpha.numerator, alpha.denominator
    mask = _enumerate(g, lambda size, counts: max(counts) * den <= num * size)
    return _result(g, mask, Method.BRUTE_FORCE)


def brute_force_dalvks(g: ColoredGraph, k) -> OracleResult:
    """Densest S with |S_c| >= k_c for every color, by enumeration."""
    k = DemandVector(tuple(k))
    if len(k) != g.num_colors:
        raise ContractViolation("demand vector length does not match the number of colors")
    need = k.counts
    if any(need[c] > len(g.color_classes[c]) for c in range(g.num_colors)):
        return OracleResult(None, None, Method.BRUTE_FORCE, Status.INFEASIBLE)
    mask = _enumerate(g, lambda size, counts: all(a >= b for a, b in zip(counts, need)))
    return _result(g, mask, Method.BRUTE_FORCE)


def brute_force_dalks(g: ColoredGraph, k: int) -> OracleResult:
    mask = _enumerate(g, lambda size, counts: size >= k)
    return _result(g, mask, Method.BRUTE_FORCE)


def brute_force_damks(g: ColoredGraph, k: int) -> OracleResult:
    mask = _enumerate(g, lambda size, counts: size <= k)
    return _result(g, mask, Method.BRUTE_FORCE)


def size_guess_model(g: ColoredGraph, k: DemandVector, k_guess: int) -> LpModel:
    """Binary node variables, relaxed edge variables, |S| fixed to ``k_guess``."""
    model = LpModel(name=f"ip_kguess_{k_guess}")
    for u, v in g.edges:
        model.add_var(f"x_{u}_{v}", obj=Fraction(1, k_guess), ub=1)
    ybase = g.m
    for v in range(g.n):
        model.add_var(f"y_{v}", binary=True)
    model.add_constraint({ybase + v: 1 for v in range(g.n)}, "=", k_guess, "size")
    for c, cls in enumerate(g.color_classes):
        model.add_constraint({ybase + v: 1 for v in sorted(cls)}, ">=", k[c], f"demand_{c}")
    for e, (u, v) in enumerate(g.edges):
        model.add_constraint({e: 1, ybase + u: -1}, "<=", 0, f"xu_{u}_{v}")
        model.add_constraint({e: 1, ybase + v: -1}, "<=", 0, f"xv_{u}_{v}")
    return model


def milp_dalvks(g: ColoredGraph, k, backend=None, node_limit=None, prune_sizes=True) -> OracleResult:
    """Solve the size-guessing MILP for every k_guess and keep the densest.

    With ``prune_sizes`` each later k_guess only searches for solutions that
    beat the incumbent, which leaves the optimum unchanged.
    """
    k = check_demand(g, k, require_positive=False)
    kwargs = {} if node_limit is None else {"node_limit": node_limit}
    best = None
    for k_guess in range(max(k.total, 1), g.n + 1):
        model = size_guess_model(g, k, k_guess)
        cutoff = best.density.value if (best is not None and prune_sizes) else None
        try:
            sol = solve_milp(model, backend, cutoff=cutoff, **kwargs)
        except SolverError as exc:
            exc.args = (f"{exc.args[0]} (k_guess={k_guess})",)
            raise
        if sol.status is not Status.OPTIMAL:
            continue
        chosen = [v for v in range(g.n) if sol.primal[g.m + v] > Fraction(1, 2)]
        witness = g.subset(chosen)
        if witness.size != k_guess or not k.satisfied_by(witness.color_counts):
            raise SolverError(f"MILP witness for k_guess={k_guess} breaks the model constraints")
        if abs(witness.density.value - sol.objective_value) > tolerance(sol):
            raise SolverError(f"MILP objective for k_guess={k_guess} disagrees with its witness")
        if best is None or witness.density > best.density:
            best = witness
    if best is None:
        raise InfeasibleInstance("no feasible subset satisfies the demands")
    return OracleResult(best.density, best, Method.MILP, Status.OPTIMAL)
