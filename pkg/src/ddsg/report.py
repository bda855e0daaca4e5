"""Machine-readable solve reports (JSON, fixed key order, exact fractions as strings)."""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from fractions import Fraction

from .dense import DEFAULT_GPP_ITERATIONS, dsp_exact, greedy_plus_plus
from .ddsp import DEFAULT_LP_NODE_THRESHOLD
from .graph import ColoredGraph, Subset

DENOM_EXACT = "dsp_exact"
DENOM_GPP = "greedy_plus_plus"


def frac_str(x) -> str:
    return str(Fraction(x))


def graph_stats(g: ColoredGraph) -> dict:
    full = g.full() if g.n else None
    return {
        "n": g.n,
        "m": g.m,
        "colors": g.num_colors,
        "alpha_of_graph": frac_str(full.alpha) if full else None,
    }


def subset_record(g: ColoredGraph, s: Subset) -> dict:
    d = s.density
    return {
        "members": list(s.sorted_members()),
        "size": s.size,
        "edge_count": s.edge_count,
        "density": frac_str(d.value),
        "density_float": float(d),
        "alpha_of_result": frac_str(s.alpha),
        "color_counts": {g.color_labels[c]: cnt for c, cnt in enumerate(s.color_counts)},
    }


def dsp_reference(g: ColoredGraph, lp_threshold=DEFAULT_LP_NODE_THRESHOLD, backend=None):
    """Best available DSP density for normalization and which solver produced it."""
    if g.n <= lp_threshold:
        return dsp_exact(g, backend).density.value, DENOM_EXACT
    return greedy_plus_plus(g, DEFAULT_GPP_ITERATIONS).density.value, DENOM_GPP


@dataclass
class SolveReport:
    problem: str
    algorithm: str
    graph: dict
    params: dict
    status: str
    result: dict = None
    normalized_density: str = None
    normalized_by: str = None
    lp_solve_count: int = 0
    runtime_ms: float = 0.0
    message: str = None
    extra: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self, include_runtime=True) -> str:
        data = self.to_dict()
        if not include_runtime:
            data.pop("runtime_ms")
        return json.dumps(data, indent=2, ensure_ascii=False) + "\n"

    @classmethod
    def from_dict(cls, data: dict) -> "SolveReport":
        return cls(**data)

    @classmethod
    def from_json(cls, text: str) -> "SolveReport":
        return cls.from_dict(json.loads(text))


def make_report(g: ColoredGraph, problem, algorithm, params, subset: Subset | None, *,
                status="optimal", lp_solve_count=0, runtime_ms=0.0, normalize=True,
                backend=None, message=None) -> SolveReport:
    report = SolveReport(problem=problem, algorithm=algorithm, graph=graph_stats(g),
                         params=dict(params), status=status, lp_solve_count=lp_solve_count,
                         runtime_ms=round(runtime_ms, 3), message=message)
    if subset is not None:
        report.result = subset_record(g, subset)
        if normalize and g.m:
            ref, source = dsp_reference(g, backend=backend)
            report.normalized_density = frac_str(subset.density.value / ref)
            report.normalized_by = source
    return report
