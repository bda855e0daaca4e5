"""Small named graphs used throughout the tests and docs."""
from .graph import build_graph


def triangle():
    """T3: monochromatic triangle."""
    return build_graph(3, [(0, 1), (0, 2), (1, 2)], ["a"] * 3)


def k4_bicolor():
    """K4b: complete graph on four nodes colored a, a, b, b."""
    edges = [(u, v) for u in range(4) for v in range(u + 1, 4)]
    return build_graph(4, edges, ["a", "a", "b", "b"])


def two_triangles():
    """2T: a red triangle {0,1,2} and a disjoint blue triangle {3,4,5}."""
    edges = [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)]
    return build_graph(6, edges, ["r"] * 3 + ["b"] * 3)


def k5_pendant():
    """K5p: red K5 on {0..4} plus a blue node 5 hanging off node 0."""
    edges = [(u, v) for u in range(5) for v in range(u + 1, 5)] + [(0, 5)]
    return build_graph(6, edges, ["r"] * 5 + ["b"])


def path4():
    """P4: path 0-1-2-3 with alternating colors a, b, a, b."""
    return build_graph(4, [(0, 1), (1, 2), (2, 3)], ["a", "b", "a", "b"])


FIXTURES = {
    "T3": triangle,
    "K4b": k4_bicolor,
    "2T": two_triangles,
    "K5p": k5_pendant,
    "P4": path4,
}
