"""Colored simple graphs, node subsets and exact density / diversity metrics."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from typing import Iterable, Sequence

from .errors import InputError


@total_ordering
@dataclass(frozen=True)
class Density:
    """Exact ratio |E(S)| / |S|.

    The pair is kept unreduced so the edge count and the size stay visible.
    Comparisons cross-multiply integers and never go through floats.
    """

    numerator: int
    denominator: int

    def __post_init__(self):
        if self.denominator < 1:
            raise ValueError("density of an empty set is undefined")

    @property
    def value(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)

    def __float__(self):
        return self.numerator / self.denominator

    def _pair(self, other):
        if isinstance(other, Density):
            return other.numerator, other.denominator
        if isinstance(other, (int, Fraction)):
            other = Fraction(other)
            return other.numerator, other.denominator
        return None

    def __eq__(self, other):
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        return self.numerator * pair[1] == pair[0] * self.denominator

    def __lt__(self, other):
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        return self.numerator * pair[1] < pair[0] * self.denominator

    def __hash__(self):
        return hash(self.value)

    def __str__(self):
        return str(self.value)


@dataclass(frozen=True)
class DiversityStats:
    c_max: int
    alpha: Fraction


@dataclass(frozen=True)
class Subset:
    """A nonempty node set with its cached edge count and per-color counts."""

    members: frozenset
    size: int
    edge_count: int
    color_counts: tuple

    @property
    def density(self) -> Density:
        return Density(self.edge_count, self.size)

    @property
    def c_max(self) -> int:
        return max(self.color_counts)

    @property
    def alpha(self) -> Fraction:
        return Fraction(self.c_max, self.size)

    def sorted_members(self) -> tuple:
        return tuple(sorted(self.members))

    def __len__(self):
        return self.size

    def __contains__(self, v):
        return v in self.members

    def __iter__(self):
        return iter(sorted(self.members))


class ColoredGraph:
    """Immutable simple undirected graph with exactly one color per node.

    Node ids are ``0..n-1``; color ids are ``0..|C|-1`` and map to string labels.
    """

    __slots__ = ("n", "edges", "color_of", "color_labels", "adjacency", "color_classes")

    def __init__(self, n, edges, color_of, color_labels):
        self.n = n
        self.edges = tuple(edges)
        self.color_of = tuple(color_of)
        self.color_labels = tuple(color_labels)
        adj = [set() for _ in range(n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        self.adjacency = tuple(frozenset(a) for a in adj)
        classes = [set() for _ in self.color_labels]
        for v, c in enumerate(self.color_of):
            classes[c].add(v)
        self.color_classes = tuple(frozenset(c) for c in classes)

    def __setattr__(self, name, value):
        if hasattr(self, name):
            raise AttributeError("ColoredGraph is immutable")
        object.__setattr__(self, name, value)

    def __repr__(self):
        return f"ColoredGraph(n={self.n}, m={self.m}, colors={self.num_colors})"

    def __eq__(self, other):
        if not isinstance(other, ColoredGraph):
            return NotImplemented
        return (self.n, self.edges, self.color_of, self.color_labels) == (
            other.n, other.edges, other.color_of, other.color_labels)

    def __hash__(self):
        return hash((self.n, self.edges, self.color_of, self.color_labels))

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def num_colors(self) -> int:
        return len(self.color_labels)

    def degree(self, v) -> int:
        return len(self.adjacency[v])

    def color_id(self, label: str) -> int:
        try:
            return self.color_labels.index(label)
        except ValueError:
            raise InputError(f"unknown color label {label!r}") from None

    def count_edges(self, nodes) -> int:
        nodes = nodes if isinstance(nodes, (set, frozenset)) else set(nodes)
        twice = sum(len(self.adjacency[v] & nodes) for v in nodes)
        return twice // 2

    def subset(self, nodes: Iterable[int]) -> Subset:
        members = frozenset(nodes)
        if not members:
            raise InputError("subsets must be nonempty")
        counts = [0] * self.num_colors
        for v in members:
            if not 0 <= v < self.n:
                raise InputError(f"node {v} is not in the graph")
            counts[self.color_of[v]] += 1
        return Subset(members, len(members), self.count_edges(members), tuple(counts))

    def full(self) -> Subset:
        return self.subset(range(self.n))


def build_graph(n: int, edges: Iterable[Sequence[int]], colors: Sequence[str]) -> ColoredGraph:
    """Validate and canonicalize a colored graph.

    Edges are sorted with ``u < v``; color labels are interned to dense ids in
    order of first appearance.
    """
    if n < 0:
        raise InputError("node count must be nonnegative")
    if len(colors) != n:
        raise InputError(f"expected {n} color labels, got {len(colors)}")
    seen = set()
    for pair in edges:
        u, v = (int(x) for x in pair)
        if u == v:
            raise InputError(f"self-loop on node {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise InputError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise InputError(f"duplicate edge ({u}, {v})")
        seen.add(key)
    labels = []
    index = {}
    color_of = []
    for label in colors:
        label = str(label)
        if label not in index:
            index[label] = len(labels)
            labels.append(label)
        color_of.append(index[label])
    return ColoredGraph(n, sorted(seen), color_of, labels)


def density(g: ColoredGraph, s: Subset | Iterable[int]) -> Density:
    if not isinstance(s, Subset):
        s = g.subset(s)
    return s.density


def diversity_stats(g: ColoredGraph, s: Subset | Iterable[int]) -> DiversityStats:
    if not isinstance(s, Subset):
        s = g.subset(s)
    return DiversityStats(s.c_max, s.alpha)


def best_subset(candidates: Iterable[Subset]):
    """Densest candidate; the first one wins ties. ``None`` for an empty input."""
    best = None
    for s in candidates:
        if best is None or s.density > best.density:
            best = s
    return best
