"""Linear / mixed-integer program containers."""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction


class Sense(str, enum.Enum):
    LE = "<="
    EQ = "="
    GE = ">="


class Status(str, enum.Enum):
    OPTIMAL = "Optimal"
    INFEASIBLE = "Infeasible"
    UNBOUNDED = "Unbounded"


@dataclass
class Constraint:
    coeffs: dict
    sense: Sense
    rhs: Fraction
    name: str = ""


@dataclass
class LpModel:
    """Maximization problem over nonnegative-by-default variables.

    Upper bounds of ``None`` mean unbounded above. ``integer[j]`` marks a
    variable that must take integral values (in practice only binaries are used).
    """

    name: str = "lp"
    objective: list = field(default_factory=list)
    lower: list = field(default_factory=list)
    upper: list = field(default_factory=list)
    integer: list = field(default_factory=list)
    names: list = field(default_factory=list)
    constraints: list = field(default_factory=list)

    @property
    def variable_count(self) -> int:
        return len(self.objective)

    def add_var(self, name=None, obj=0, lb=0, ub=None, binary=False) -> int:
        j = len(self.objective)
        if binary:
            lb, ub = 0, 1
        self.objective.append(Fraction(obj))
        self.lower.append(Fraction(lb))
        self.upper.append(None if ub is None else Fraction(ub))
        self.integer.append(bool(binary))
        self.names.append(name or f"v{j}")
        return j

    def add_constraint(self, coeffs, sense, rhs, name="") -> Constraint:
        sense = Sense(sense)
        row = {}
        for j, a in dict(coeffs).items():
            if not 0 <= j < self.variable_count:
                raise IndexError(f"constraint {name!r} references undeclared variable {j}")
            a = Fraction(a)
            if a:
                row[j] = a
        con = Constraint(row, sense, Fraction(rhs), name or f"c{len(self.constraints)}")
        self.constraints.append(con)
        return con

    @property
    def has_integers(self) -> bool:
        return any(self.integer)

    def evaluate(self, x) -> Fraction:
        return sum((c * v for c, v in zip(self.objective, x) if c), Fraction(0))

    def max_violation(self, x, lower=None, upper=None):
        """Largest amount by which ``x`` breaks a row or a bound (0 when feasible)."""
        lower = self.lower if lower is None else lower
        upper = self.upper if upper is None else upper
        worst = 0
        for j, v in enumerate(x):
            worst = max(worst, lower[j] - v)
            if upper[j] is not None:
                worst = max(worst, v - upper[j])
        for con in self.constraints:
            lhs = sum(a * x[j] for j, a in con.coeffs.items())
            if con.sense is Sense.LE:
                worst = max(worst, lhs - con.rhs)
            elif con.sense is Sense.GE:
                worst = max(worst, con.rhs - lhs)
            else:
                worst = max(worst, abs(lhs - con.rhs))
        return worst


@dataclass
class LpSolution:
    status: Status
    objective_value: object = None
    primal: list = None
    backend: str = ""
    iterations: int = 0
    nodes: int = 0

    @property
    def optimal(self) -> bool:
        return self.status is Status.OPTIMAL
