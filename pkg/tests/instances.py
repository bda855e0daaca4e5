"""Seeded random instance families shared by the unit and acceptance tests."""
import random
from fractions import Fraction

from ddsg.graph import build_graph

LABELS = "rgb"


def random_graph(rng, n, num_colors, p=None, balanced=False):
    """G(n, p) with i.i.d. colors, or a shuffled round-robin coloring when ``balanced``."""
    p = rng.uniform(0.2, 0.8) if p is None else p
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    if balanced:
        colors = [LABELS[v % num_colors] for v in range(n)]
        rng.shuffle(colors)
    else:
        colors = [LABELS[rng.randrange(num_colors)] for _ in range(n)]
    return build_graph(n, edges, colors)


def random_demand(rng, g):
    """Each k_c uniform in 0..|V_c| (biased toward smaller values), at least one positive."""
    while True:
        k = tuple(rng.randint(0, rng.randint(0, len(cls))) for cls in g.color_classes)
        if any(k):
            return k


def oracle_suite(count=300, seed=20240601, n_min=4, n_max=12):
    """``(g, k)`` pairs with n <= 12 and up to three colors."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        g = random_graph(rng, rng.randint(n_min, n_max), rng.randint(1, 3))
        out.append((g, random_demand(rng, g)))
    return out


def alpha_grid(g):
    """The dominance ratios {1/|C|, 1/2, 2/3, 1} that are feasible for the whole node set."""
    values = {Fraction(1, g.num_colors), Fraction(1, 2), Fraction(2, 3), Fraction(1)}
    full = g.full()
    return sorted(a for a in values if Fraction(1, g.num_colors) <= a and full.alpha <= a)


def ddsp_suite(count=200, seed=7, n_max=12):
    """``(g, alpha)`` pairs with alpha(V) <= alpha, drawn from the alpha grid.

    A third of the graphs get balanced colorings so that alpha = 1/3 occurs.
    """
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        num_colors = rng.randint(1, 3)
        n = rng.randint(3, n_max)
        if rng.random() < 1 / 3:
            n -= n % num_colors
            g = random_graph(rng, n, num_colors, balanced=True)
        else:
            g = random_graph(rng, n, num_colors)
        choices = alpha_grid(g)
        if choices:
            out.append((g, rng.choice(choices)))
    return out
