"""Benchmark suites writing RFC-4180 CSV.

Every row starts with a ``schema_version`` column so readers can detect layout
changes. Rows are emitted in deterministic instance order.
"""
from __future__ import annotations

import csv
import io
import statistics
import time
from fractions import Fraction

from .dalvks import SearchStats, count_p_vectors, dalvks_accel, dalvks_lp_full, dalvks_prop2
from .demand import DemandVector, check_demand
from .dense import dsp_exact
from .errors import DdsgError, ResourceExhausted
from .generators import (ER_GRID_COLORS, ER_GRID_SIZES, ColorMode, er_grid_demand,
                         er_grid_spec, er_spec, gen_er, gen_planted, half_class_demand,
                         planted_spec)
from .lp import count_solves
from .oracle import brute_force_dalvks

SCHEMA_VERSION = 1

RATIO_COLUMNS = [
    "schema_version", "instance", "n", "m", "demand", "opt", "accel_density", "prop2_density",
    "full_density", "accel_ratio", "prop2_ratio", "full_ratio", "accel_lp_solves",
    "full_lp_solves", "error",
]
ER_GRID_COLUMNS = [
    "schema_version", "n", "colors", "seed", "m", "demand", "status", "accel_density",
    "lp_solve_count", "p_vector_count", "runtime_ms",
]
AMAZONLIKE_COLUMNS = [
    "schema_version", "instance", "n", "m", "demand", "dsp_density", "accel_density",
    "prop2_density", "accel_vs_dsp", "prop2_vs_dsp", "accel_lp_solves", "error",
]

RATIO_PROBS = (0.15, 0.25, 0.4)
RATIO_MIN_N = 8


def _fmt(x):
    if x is None:
        return ""
    if isinstance(x, float):
        return repr(round(x, 6))
    if isinstance(x, (tuple, list)):
        return " ".join(str(v) for v in x)
    return str(x)


def write_csv(columns, rows, out=None) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=columns, lineterminator="\r\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({c: _fmt(row.get(c)) for c in columns})
    text = buf.getvalue()
    if out is not None:
        with open(out, "w", newline="", encoding="utf-8") as fh:
            fh.write(text)
    return text


def read_csv(text):
    return list(csv.DictReader(io.StringIO(text)))


def ratio_instances(seed_count, size_cap=14, num_colors=2, base_seed=0):
    """Two-color ER instances with k_c = floor(|V_c|/2).

    n cycles through 8..size_cap and the edge probability through RATIO_PROBS.
    """
    span = size_cap - RATIO_MIN_N + 1
    for i in range(seed_count):
        n = RATIO_MIN_N + i % span
        p = RATIO_PROBS[i % len(RATIO_PROBS)]
        g = gen_er(er_spec(n, p, num_colors, base_seed + i))
        yield f"er{i:03d}", g, half_class_demand(g)


def _ratio(a, b):
    return None if a is None or not b else Fraction(a) / Fraction(b)


def ratio_row(name, g, k, backend=None) -> dict:
    row = {"schema_version": SCHEMA_VERSION, "instance": name, "n": g.n, "m": g.m, "demand": k}
    try:
        k = check_demand(g, DemandVector(tuple(k)))
        oracle = brute_force_dalvks(g, k)
        if not oracle.feasible:
            raise DdsgError("oracle reports an infeasible instance")
        opt = oracle.optimum.value
        with count_solves() as acc_cnt:
            accel = dalvks_accel(g, k, backend=backend)
        with count_solves() as full_cnt:
            full = dalvks_lp_full(g, k, backend=backend)
        prop2 = dalvks_prop2(g, k, backend=backend)
    except DdsgError as exc:
        row["error"] = f"{type(exc).__name__}: {exc}"
        return row
    row.update(
        opt=opt, accel_density=accel.density.value, prop2_density=prop2.density.value,
        full_density=full.density.value, accel_lp_solves=acc_cnt.lp_solves,
        full_lp_solves=full_cnt.lp_solves,
    )
    if opt:
        row.update(accel_ratio=float(_ratio(row["accel_density"], opt)),
                   prop2_ratio=float(_ratio(row["prop2_density"], opt)),
                   full_ratio=float(_ratio(row["full_density"], opt)))
    return row


def summarize_ratios(rows) -> dict:
    out = {"schema_version": SCHEMA_VERSION, "instance": "summary"}
    for key in ("accel_ratio", "prop2_ratio", "full_ratio"):
        vals = [r[key] for r in rows if r.get(key) is not None]
        if vals:
            out[key] = f"min={min(vals):.6f};median={statistics.median(vals):.6f}"
    out["error"] = f"{sum(1 for r in rows if r.get('error'))} errors"
    return out


def run_ratio_suite(seed_count=100, size_cap=14, out=None, instances=None, backend=None):
    """Oracle-backed approximation ratios; returns ``(rows, csv_text)``.

    ``instances`` may supply explicit ``(name, graph, demand)`` triples instead
    of generated ones. An empty suite yields a header-only CSV.
    """
    if instances is None:
        instances = ratio_instances(seed_count, size_cap)
    rows = [ratio_row(name, g, k, backend) for name, g, k in instances]
    table = rows + [summarize_ratios(rows)] if rows else []
    return rows, write_csv(RATIO_COLUMNS, table, out)


def run_appendixC_suite(sizes=ER_GRID_SIZES, color_counts=ER_GRID_COLORS, seeds=10,
                        timeout_s=60.0, out=None, backend=None):
    """Accelerated solver on the ER grid; ``p_vector_count`` is exact even when a run times out."""
    rows = []
    for n in sizes:
        for num_colors in color_counts:
            k = DemandVector(er_grid_demand(n, num_colors))
            for seed in range(seeds):
                g = gen_er(er_grid_spec(n, num_colors, seed))
                row = {"schema_version": SCHEMA_VERSION, "n": n, "colors": num_colors,
                       "seed": seed, "m": g.m, "demand": k.counts,
                       "p_vector_count": count_p_vectors(g, k, restricted=True)}
                stats = SearchStats()
                start = time.monotonic()
                deadline = None if timeout_s is None else start + timeout_s
                try:
                    with count_solves() as cnt:
                        s = dalvks_accel(g, k, backend=backend, stats=stats, deadline=deadline)
                    row.update(status="ok", accel_density=s.density.value,
                               lp_solve_count=cnt.lp_solves)
                except ResourceExhausted:
                    row.update(status="timeout", lp_solve_count=stats.lp_solves)
                row["runtime_ms"] = round((time.monotonic() - start) * 1000, 1)
                rows.append(row)
    return rows, write_csv(ER_GRID_COLUMNS, rows, out)


def amazonlike_instances(count=10, cluster_size=24, clusters=5, base_seed=0):
    """Planted-cluster graphs with two random colors, a few hundred nodes each."""
    for i in range(count):
        spec = planted_spec(base_seed + i, ColorMode.UNIFORM_RANDOM,
                            cluster_sizes=(cluster_size,) * clusters, num_colors=2)
        g = gen_planted(spec)
        yield f"planted{i:03d}", g, half_class_demand(g)


def run_amazonlike_suite(count=10, out=None, backend=None):
    """Ratios against the unconstrained optimum, an upper bound on the constrained one."""
    rows = []
    for name, g, k in amazonlike_instances(count):
        row = {"schema_version": SCHEMA_VERSION, "instance": name, "n": g.n, "m": g.m, "demand": k}
        try:
            k = check_demand(g, DemandVector(k))
            dsp = dsp_exact(g, backend).density.value
            with count_solves() as cnt:
                accel = dalvks_accel(g, k, backend=backend)
            prop2 = dalvks_prop2(g, k, backend=backend)
            row.update(dsp_density=dsp, accel_density=accel.density.value,
                       prop2_density=prop2.density.value, accel_lp_solves=cnt.lp_solves,
                       accel_vs_dsp=float(accel.density.value / dsp),
                       prop2_vs_dsp=float(prop2.density.value / dsp))
        except DdsgError as exc:
            row["error"] = f"{type(exc).__name__}: {exc}"
        rows.append(row)
    return rows, write_csv(AMAZONLIKE_COLUMNS, rows, out)


SUITES = {"ratio": run_ratio_suite, "appendixC": run_appendixC_suite, "amazonlike": run_amazonlike_suite}
