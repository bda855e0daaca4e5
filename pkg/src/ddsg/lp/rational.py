"""Two-phase bounded-variable primal simplex in exact rational arithmetic.

Finite upper bounds are handled implicitly (nonbasic variables sit at either
bound), so they never become tableau rows. Rows are sparse ``dict`` maps
column -> coefficient. Pricing is Dantzig's rule with a fall back to Bland's
rule on degenerate stalls, and blocking ties go to the smallest index, so the
pivot sequence is a deterministic function of the model and cannot cycle. gmpy2's ``mpq`` is used when importable; results are
handed back as :class:`fractions.Fraction`.
"""
from __future__ import annotations

from fractions import Fraction

from ..errors import SolverError
from .model import LpModel, LpSolution, Sense, Status

try:
    from gmpy2 import mpq as _Q
except ImportError:  # pragma: no cover
    _Q = Fraction

NAME = "rational"
EPS_FEAS = 0
MAX_PIVOTS = 500_000
BLAND_AFTER = 50


def _to_q(x):
    if isinstance(x, Fraction):
        return _Q(x.numerator, x.denominator)
    return _Q(x)


def _to_fraction(q):
    if isinstance(q, Fraction):
        return q
    return Fraction(int(q.numerator), int(q.denominator))


def _flip(sense):
    return Sense.GE if sense is Sense.LE else Sense.LE if sense is Sense.GE else Sense.EQ


class _Tableau:
    """Rows of B^-1 A, basic values ``beta``, reduced costs and the objective value."""

    __slots__ = ("rows", "beta", "basis", "upper", "at_upper", "cost", "z", "steps")

    def __init__(self, rows, beta, basis, upper):
        self.rows = rows
        self.beta = beta
        self.basis = basis
        self.upper = upper
        self.at_upper = set()
        self.cost = {}
        self.z = _Q(0)
        self.steps = 0

    def value(self, col):
        return self.upper[col] if col in self.at_upper else 0

    def pivot(self, i, j):
        """Make column ``j`` basic in row ``i``; values are left untouched."""
        rows = self.rows
        prow = rows[i]
        piv = prow[j]
        if piv != 1:
            prow = {k: v / piv for k, v in prow.items()}
            rows[i] = prow
        for k, row in enumerate(rows):
            if k == i:
                continue
            f = row.get(j)
            if f is None:
                continue
            for col, val in prow.items():
                new = row.get(col, 0) - f * val
                if new:
                    row[col] = new
                else:
                    del row[col]
        f = self.cost.get(j)
        if f:
            cost = self.cost
            for col, val in prow.items():
                new = cost.get(col, 0) - f * val
                if new:
                    cost[col] = new
                else:
                    del cost[col]
        self.beta[i] = self.value(j)
        self.at_upper.discard(j)
        self.basis[i] = j

    def run(self, allowed):
        """Iterate to optimality; return False if the objective is unbounded.

        Entering variable: largest reduced-cost magnitude (smallest index on
        ties). After ``BLAND_AFTER`` consecutive degenerate steps the rule drops
        to Bland's smallest-index choice until the objective moves again.
        """
        rows, beta, basis, upper, at_upper = self.rows, self.beta, self.basis, self.upper, self.at_upper
        degenerate_run = 0
        while True:
            entering = None
            bland = degenerate_run >= BLAND_AFTER
            best_r = 0
            for col, r in self.cost.items():
                if col >= allowed:
                    continue
                if r > 0 and col not in at_upper:
                    mag = r
                elif r < 0 and col in at_upper:
                    mag = -r
                else:
                    continue
                if bland:
                    if entering is None or col < entering:
                        entering = col
                elif mag > best_r or (mag == best_r and col < entering):
                    entering, best_r = col, mag
            if entering is None:
                return True
            j = entering
            up = j not in at_upper
            # Step limits; ties go to the smallest variable index.
            best_t = upper[j]
            block_row, block_col, to_upper = None, j if best_t is not None else None, None
            for i, row in enumerate(rows):
                a = row.get(j)
                if a is None:
                    continue
                g = a if up else -a
                b = basis[i]
                if g > 0:
                    t = beta[i] / g
                    hits_upper = False
                else:
                    ub = upper[b]
                    if ub is None:
                        continue
                    t = (ub - beta[i]) / -g
                    hits_upper = True
                if best_t is None or t < best_t or (t == best_t and b < block_col):
                    best_t, block_row, block_col, to_upper = t, i, b, hits_upper
            if best_t is None:
                return False
            t = best_t
            degenerate_run = 0 if t else degenerate_run + 1
            delta = t if up else -t
            if t:
                for i, row in enumerate(rows):
                    a = row.get(j)
                    if a is not None:
                        beta[i] -= a * delta
                self.z += self.cost[j] * delta
            if block_row is None:
                if up:
                    at_upper.add(j)
                else:
                    at_upper.discard(j)
            else:
                entering_value = (0 if up else upper[j]) + delta
                leaving = basis[block_row]
                self.pivot(block_row, j)
                beta[block_row] = entering_value
                if to_upper:
                    at_upper.add(leaving)
            self.steps += 1
            if self.steps > MAX_PIVOTS:
                raise SolverError(f"simplex exceeded {MAX_PIVOTS} iterations")


def solve(model: LpModel, lower=None, upper=None) -> LpSolution:
    """Solve the continuous relaxation of ``model``; integrality flags are ignored.

    ``lower``/``upper`` override the model's bounds (used by branch-and-bound).
    """
    lower = model.lower if lower is None else lower
    upper = model.upper if upper is None else upper
    nvar = model.variable_count
    lo = [_to_q(v) for v in lower]
    hi = [None if v is None else _to_q(v) for v in upper]

    column = [-1] * nvar
    col_upper = []
    for j in range(nvar):
        if hi[j] is not None:
            if hi[j] < lo[j]:
                return LpSolution(Status.INFEASIBLE, backend=NAME)
            if hi[j] == lo[j]:
                continue
        column[j] = len(col_upper)
        col_upper.append(None if hi[j] is None else hi[j] - lo[j])
    ncols = len(col_upper)

    raw_rows = []
    for con in model.constraints:
        row = {}
        b = _to_q(con.rhs)
        for j, a in con.coeffs.items():
            a = _to_q(a)
            b -= a * lo[j]
            if column[j] >= 0:
                row[column[j]] = a
        sense = con.sense
        if not row:
            ok = (b >= 0) if sense is Sense.LE else (b <= 0) if sense is Sense.GE else (b == 0)
            if not ok:
                return LpSolution(Status.INFEASIBLE, backend=NAME)
            continue
        if b < 0:
            row = {k: -v for k, v in row.items()}
            b = -b
            sense = _flip(sense)
        raw_rows.append((row, sense, b))

    # Column layout: structural, then slack/surplus, then artificial.
    rows, beta, basis, needs_art = [], [], [], []
    upper_all = list(col_upper)
    for row, sense, b in raw_rows:
        if sense is Sense.LE:
            row[len(upper_all)] = _Q(1)
            basis.append(len(upper_all))
            upper_all.append(None)
        else:
            if sense is Sense.GE:
                row[len(upper_all)] = _Q(-1)
                upper_all.append(None)
            basis.append(None)
            needs_art.append(len(rows))
        rows.append(row)
        beta.append(b)
    first_art = len(upper_all)
    for i in needs_art:
        rows[i][len(upper_all)] = _Q(1)
        basis[i] = len(upper_all)
        upper_all.append(None)

    tab = _Tableau(rows, beta, basis, upper_all)
    if needs_art:
        cost = {}
        for i in needs_art:
            for c, a in rows[i].items():
                if c < first_art:
                    cost[c] = cost.get(c, 0) + a
            tab.z -= beta[i]
        tab.cost = {c: v for c, v in cost.items() if v}
        tab.run(first_art)
        if tab.z < 0:
            return LpSolution(Status.INFEASIBLE, backend=NAME, iterations=tab.steps)
        # Pivot zero-level artificials out of the basis; drop redundant rows.
        i = 0
        while i < len(rows):
            if basis[i] >= first_art:
                candidates = [c for c in rows[i] if c < first_art]
                if candidates:
                    tab.pivot(i, min(candidates))
                else:
                    del rows[i], beta[i], basis[i]
                    continue
            i += 1
        for row in rows:
            for c in [c for c in row if c >= first_art]:
                del row[c]

    obj = {}
    for j in range(nvar):
        if column[j] >= 0 and model.objective[j]:
            obj[column[j]] = _to_q(model.objective[j])
    cost = dict(obj)
    z = _Q(0)
    for i, row in enumerate(rows):
        cb = obj.get(basis[i])
        if not cb:
            continue
        for c, a in row.items():
            new = cost.get(c, 0) - cb * a
            if new:
                cost[c] = new
            else:
                del cost[c]
        z += cb * beta[i]
    for c in tab.at_upper:
        z += obj.get(c, 0) * upper_all[c]
    tab.cost = cost
    tab.z = z
    if not tab.run(first_art):
        return LpSolution(Status.UNBOUNDED, backend=NAME, iterations=tab.steps)

    values = [tab.value(c) for c in range(ncols)]
    for i, b in enumerate(basis):
        if b < ncols:
            values[b] = beta[i]
    x = []
    for j in range(nvar):
        v = lo[j] if column[j] < 0 else lo[j] + values[column[j]]
        x.append(_to_fraction(v))
    if any(v < 0 for v in beta):
        raise SolverError(f"{model.name}: negative basic value after simplex")
    return LpSolution(Status.OPTIMAL, model.evaluate(x), x, backend=NAME, iterations=tab.steps)
