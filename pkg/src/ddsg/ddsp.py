"""Densest diverse subgraph: no color may exceed a fraction ``alpha`` of the set."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .dense import dalks_lp, dalks_peel
from .errors import ContractViolation, InfeasibleExtension, InfeasibleInstance, InputError
from .graph import ColoredGraph, Subset, build_graph

DEFAULT_LP_NODE_THRESHOLD = 20_000


class GammaSolver(str, enum.Enum):
    DALKS_LP = "lp"
    DALKS_PEEL = "peel"

    @property
    def gamma(self) -> Fraction:
        return Fraction(1, 2) if self is GammaSolver.DALKS_LP else Fraction(1, 3)


def parse_alpha(text) -> Fraction:
    """Accept ``P/Q`` or an integer; decimals are rejected to keep the ratio exact."""
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int):
        return Fraction(text)
    text = str(text).strip()
    num, sep, den = text.partition("/")
    try:
        value = Fraction(int(num), int(den)) if sep else Fraction(int(num))
    except (ValueError, ZeroDivisionError):
        raise InputError(f"alpha must be an exact fraction P/Q, got {text!r}") from None
    return value


@dataclass(frozen=True)
class DdspParams:
    alpha: Fraction
    gamma_solver: GammaSolver = None

    def __post_init__(self):
        object.__setattr__(self, "alpha", parse_alpha(self.alpha))
        if self.gamma_solver is not None:
            object.__setattr__(self, "gamma_solver", GammaSolver(self.gamma_solver))

    def check(self, g: ColoredGraph):
        if not Fraction(1, max(g.num_colors, 1)) <= self.alpha <= 1:
            raise InputError(f"alpha={self.alpha} must lie in [1/{g.num_colors}, 1]")

    def solver_for(self, g: ColoredGraph, lp_threshold=DEFAULT_LP_NODE_THRESHOLD) -> GammaSolver:
        if self.gamma_solver is not None:
            return self.gamma_solver
        return GammaSolver.DALKS_LP if g.n <= lp_threshold else GammaSolver.DALKS_PEEL


def ceil_inverse(alpha: Fraction) -> int:
    """``ceil(1/alpha)`` on the exact fraction."""
    alpha = Fraction(alpha)
    return -(-alpha.denominator // alpha.numerator)


def is_diverse(s: Subset, alpha) -> bool:
    alpha = Fraction(alpha)
    return s.c_max * alpha.denominator <= alpha.numerator * s.size


def guarantee_ratio(alpha, n, gamma) -> Fraction:
    """gamma * max{1/ceil(1/alpha), 1/(alpha n)}."""
    alpha = Fraction(alpha)
    return Fraction(gamma) * max(Fraction(1, ceil_inverse(alpha)), 1 / (alpha * n))


def _diversify(g: ColoredGraph, members, alpha):
    """Grow ``members`` until diverse; return ``(set, reached)``."""
    alpha = Fraction(alpha)
    num, den = alpha.numerator, alpha.denominator
    adj = g.adjacency
    members = set(members)
    counts = [0] * g.num_colors
    for v in members:
        counts[g.color_of[v]] += 1
    # Outside nodes per color with their degree into the set.
    outside = [dict() for _ in range(g.num_colors)]
    for v in range(g.n):
        if v not in members:
            outside[g.color_of[v]][v] = len(adj[v] & members)
    while max(counts) * den > num * len(members):
        open_colors = [c for c in range(g.num_colors) if outside[c]]
        if not open_colors:
            return members, False
        c = min(open_colors, key=lambda c: (counts[c], c))
        pool = outside[c]
        v = min(pool, key=lambda u: (-pool[u], u))
        del pool[v]
        members.add(v)
        counts[c] += 1
        for u in adj[v]:
            pool_u = outside[g.color_of[u]]
            if u in pool_u:
                pool_u[u] += 1
    return members, True


def diversify(g: ColoredGraph, s: Subset, alpha) -> Subset:
    """Add nodes of the least represented color (most edges into S, then smallest id) until alpha(S) <= alpha."""
    members, reached = _diversify(g, s.members, alpha)
    if not reached:
        raise InfeasibleExtension(f"no superset of the given set reaches alpha <= {Fraction(alpha)}")
    return g.subset(members)


def ddsp_fallback_peel(g: ColoredGraph, s: Subset, alpha):
    """Peel the dominant color until diverse; ``None`` if no feasible set turns up.

    Each step removes, from the largest color class of S (smallest color id on
    ties), its member with the fewest neighbors inside S (smallest id on ties).
    """
    alpha = Fraction(alpha)
    if is_diverse(s, alpha):
        raise ContractViolation("fallback peeling expects a set that is not yet diverse")
    num, den = alpha.numerator, alpha.denominator
    adj = g.adjacency
    members = set(s.members)
    counts = list(s.color_counts)
    deg = {v: len(adj[v] & members) for v in members}
    while members:
        if max(counts) * den <= num * len(members):
            return g.subset(members)
        if sum(1 for x in counts if x) <= 1:
            return None
        c = max(range(len(counts)), key=lambda c: (counts[c], -c))
        v = min((u for u in members if g.color_of[u] == c), key=lambda u: (deg[u], u))
        members.discard(v)
        counts[c] -= 1
        del deg[v]
        for u in adj[v]:
            if u in members:
                deg[u] -= 1
    return None


def ddsp_approx(g: ColoredGraph, params: DdspParams, backend=None) -> Subset:
    """DalkS with k = ceil(1/alpha), then Diversify.

    When the whole graph is not diverse enough the result of that pipeline is
    passed to :func:`ddsp_fallback_peel`; :class:`InfeasibleInstance` is raised
    if it finds nothing.
    """
    params.check(g)
    alpha = params.alpha
    k = min(ceil_inverse(alpha), g.n)
    solver = params.solver_for(g)
    if solver is GammaSolver.DALKS_LP:
        seed = dalks_lp(g, k, backend)
    else:
        seed = dalks_peel(g, k)
    members, reached = _diversify(g, seed.members, alpha)
    result = g.subset(members)
    if reached:
        return result
    fallback = ddsp_fallback_peel(g, result, alpha)
    if fallback is None:
        raise InfeasibleInstance(f"no nonempty subset found with alpha <= {alpha}")
    return fallback


class ReductionKind(str, enum.Enum):
    DALKS = "dalks"
    DAMKS = "damks"


def reduction_instances(kind, k: int, g: ColoredGraph):
    """Build the diversity instance whose optimum equals DalkS(k) or DamkS(k) on ``g``.

    DalkS: every node gets its own color and alpha = 1/k. DamkS: one color for
    all of ``g`` plus ``k`` isolated dummy nodes of a second color, alpha = 1/2.
    """
    kind = ReductionKind(kind)
    if k < 1:
        raise InputError("k must be positive")
    if kind is ReductionKind.DALKS:
        return build_graph(g.n, g.edges, [f"c{v}" for v in range(g.n)]), Fraction(1, k)
    colors = ["real"] * g.n + ["dummy"] * k
    return build_graph(g.n + k, g.edges, colors), Fraction(1, 2)
