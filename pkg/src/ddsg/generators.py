"""Seeded synthetic instances: Erdős–Rényi graphs and planted-cluster (SBM-style) graphs.

Randomness comes from numpy's counter-based Philox generator keyed by
``(seed, stream)``. Pair decisions use stream 0: the i-th uniform draw decides
the i-th unordered pair in lexicographic order. Random colors use stream 1.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .errors import InputError
from .graph import ColoredGraph, build_graph

EDGE_STREAM = 0
COLOR_STREAM = 1

ER_GRID_SIZES = (18, 54, 90, 126)
ER_GRID_COLORS = (2, 3, 6)

PLANTED_CLUSTER_SIZES = (40, 40, 40, 40, 40)
PLANTED_P_HOT = 0.8
PLANTED_P_COLD = 0.2
PLANTED_P_INTER = 0.02


class Kind(str, enum.Enum):
    ERDOS_RENYI = "er"
    PLANTED = "planted"


class ColorMode(str, enum.Enum):
    EVEN_SPLIT = "even"
    PER_CLUSTER = "cluster"
    UNIFORM_RANDOM = "uniform"


@dataclass(frozen=True)
class GenSpec:
    kind: Kind
    n: int
    seed: int = 0
    edge_prob: float = 0.0
    cluster_sizes: tuple = ()
    p_intra: tuple = ()
    p_inter: float = 0.0
    color_mode: ColorMode = ColorMode.EVEN_SPLIT
    num_colors: int = 2
    labels: tuple = field(default=(), compare=True)

    def __post_init__(self):
        object.__setattr__(self, "kind", Kind(self.kind))
        object.__setattr__(self, "color_mode", ColorMode(self.color_mode))
        object.__setattr__(self, "cluster_sizes", tuple(int(s) for s in self.cluster_sizes))
        object.__setattr__(self, "p_intra", tuple(float(p) for p in self.p_intra))
        if self.n < 1:
            raise InputError("n must be positive")
        if not 0 <= self.seed < 2 ** 64:
            raise InputError("seed must fit in 64 bits")


def er_spec(n, p, num_colors=2, seed=0, color_mode=ColorMode.EVEN_SPLIT) -> GenSpec:
    return GenSpec(Kind.ERDOS_RENYI, n, seed, edge_prob=float(p),
                   color_mode=color_mode, num_colors=num_colors)


def planted_spec(seed=0, color_mode=ColorMode.PER_CLUSTER, cluster_sizes=PLANTED_CLUSTER_SIZES,
                 p_intra=None, p_inter=PLANTED_P_INTER, num_colors=None) -> GenSpec:
    """Defaults: five clusters of 40, the first one hot (0.8) and the rest at 0.2."""
    sizes = tuple(cluster_sizes)
    if p_intra is None:
        p_intra = (PLANTED_P_HOT,) + (PLANTED_P_COLD,) * (len(sizes) - 1)
    return GenSpec(Kind.PLANTED, sum(sizes), seed, cluster_sizes=sizes, p_intra=tuple(p_intra),
                   p_inter=p_inter, color_mode=color_mode,
                   num_colors=len(sizes) if num_colors is None else num_colors)


def _rng(seed, stream):
    return np.random.Generator(np.random.Philox(key=[seed, stream]))


def _pairs(n):
    iu, ju = np.triu_indices(n, k=1)
    return iu, ju


def _check_prob(p, what):
    if not 0 <= p <= 1:
        raise InputError(f"{what} must lie in [0, 1], got {p}")


def _colors(spec: GenSpec, cluster_of=None):
    n = spec.n
    mode = spec.color_mode
    if mode is ColorMode.PER_CLUSTER:
        if cluster_of is None:
            raise InputError("per-cluster coloring needs a planted-cluster spec")
        ids = cluster_of
    else:
        c = spec.num_colors
        if not 1 <= c <= n:
            raise InputError(f"number of colors must lie in 1..{n}, got {c}")
        if mode is ColorMode.EVEN_SPLIT:
            ids = [i * c // n for i in range(n)]
        else:
            ids = _rng(spec.seed, COLOR_STREAM).integers(0, c, size=n).tolist()
    return [f"c{int(i)}" for i in ids]


def gen_er(spec: GenSpec) -> ColoredGraph:
    """G(n, p) with the requested coloring."""
    _check_prob(spec.edge_prob, "edge probability")
    iu, ju = _pairs(spec.n)
    keep = _rng(spec.seed, EDGE_STREAM).random(len(iu)) < spec.edge_prob
    edges = list(zip(iu[keep].tolist(), ju[keep].tolist()))
    return build_graph(spec.n, edges, _colors(spec))


def gen_planted(spec: GenSpec) -> ColoredGraph:
    """Contiguous clusters; pair probability is the cluster's p_intra inside, p_inter across."""
    sizes = spec.cluster_sizes
    if not sizes or sum(sizes) != spec.n or min(sizes) < 1:
        raise InputError(f"cluster sizes {sizes} must be positive and sum to n={spec.n}")
    if len(spec.p_intra) != len(sizes):
        raise InputError("need one intra-cluster probability per cluster")
    for p in spec.p_intra:
        _check_prob(p, "intra-cluster probability")
    _check_prob(spec.p_inter, "inter-cluster probability")
    cluster_of = np.repeat(np.arange(len(sizes)), sizes)
    iu, ju = _pairs(spec.n)
    cu, cv = cluster_of[iu], cluster_of[ju]
    prob = np.where(cu == cv, np.asarray(spec.p_intra)[cu], spec.p_inter)
    keep = _rng(spec.seed, EDGE_STREAM).random(len(iu)) < prob
    edges = list(zip(iu[keep].tolist(), ju[keep].tolist()))
    return build_graph(spec.n, edges, _colors(spec, cluster_of.tolist()))


def generate(spec: GenSpec) -> ColoredGraph:
    return gen_er(spec) if spec.kind is Kind.ERDOS_RENYI else gen_planted(spec)


def er_grid_spec(n, num_colors, seed) -> GenSpec:
    """Erdős–Rényi with p = 5/n, colors split evenly by node id."""
    return er_spec(n, 5 / n, num_colors, seed)


def er_grid_demand(n, num_colors):
    """k_c = floor(n / (2|C|)) for every color."""
    return (n // (2 * num_colors),) * num_colors


def half_class_demand(g: ColoredGraph):
    """k_c = floor(|V_c| / 2)."""
    return tuple(len(cls) // 2 for cls in g.color_classes)


def expected_edges(n, p) -> Fraction:
    return Fraction(p) * n * (n - 1) / 2
