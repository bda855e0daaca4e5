"""Reading and writing the plain-text graph, color and combined formats.

Graph files hold one ``u v`` edge per line (0-based ids, ``#`` comments).
Color files hold one ``node label`` line per node. The combined variant mixes
tab-separated edges with ``@color node label`` directives in a single file.
"""
from __future__ import annotations

from pathlib import Path

from .errors import InputError
from .graph import ColoredGraph, build_graph


def _content_lines(text):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line


def _parse_int(token, where):
    try:
        value = int(token)
    except ValueError:
        raise InputError(f"{where}: expected an integer node id, got {token!r}") from None
    if value < 0:
        raise InputError(f"{where}: negative node id {value}")
    return value


def parse_graph_text(text, source="<graph>"):
    """Return ``(edges, colors)``; ``colors`` maps node id to label for ``@color`` lines."""
    edges = []
    colors = {}
    seen = {}
    for lineno, line in _content_lines(text):
        where = f"{source}:{lineno}"
        if line.startswith("@color"):
            parts = line.split()
            if len(parts) != 3:
                raise InputError(f"{where}: expected '@color node label'")
            node = _parse_int(parts[1], where)
            if node in colors:
                raise InputError(f"{where}: node {node} colored twice")
            colors[node] = parts[2]
            continue
        parts = line.split()
        if len(parts) != 2:
            raise InputError(f"{where}: expected 'u v', got {line!r}")
        u, v = _parse_int(parts[0], where), _parse_int(parts[1], where)
        if u == v:
            raise InputError(f"{where}: self-loop on node {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise InputError(f"{where}: duplicate edge ({u}, {v}), first seen on line {seen[key]}")
        seen[key] = lineno
        edges.append(key)
    return edges, colors


def parse_color_text(text, source="<colors>"):
    colors = {}
    for lineno, line in _content_lines(text):
        where = f"{source}:{lineno}"
        parts = line.split()
        if len(parts) != 2:
            raise InputError(f"{where}: expected 'node label', got {line!r}")
        node = _parse_int(parts[0], where)
        if node in colors:
            raise InputError(f"{where}: node {node} colored twice")
        colors[node] = parts[1]
    return colors


def assemble(edges, colors, source="<input>") -> ColoredGraph:
    if not colors:
        raise InputError(f"{source}: no node colors given")
    n = len(colors)
    missing = [v for v in range(n) if v not in colors]
    if missing:
        raise InputError(f"{source}: colors must cover nodes 0..{n - 1}; node {missing[0]} is missing")
    for u, v in edges:
        if u >= n or v >= n:
            raise InputError(f"{source}: edge ({u}, {v}) refers to a node without a color")
    return build_graph(n, edges, [colors[v] for v in range(n)])


def read_graph(graph_path, colors_path=None) -> ColoredGraph:
    """Load a graph from an edge file plus a color file, or a combined file."""
    graph_path = Path(graph_path)
    edges, colors = parse_graph_text(graph_path.read_text(), str(graph_path))
    if colors_path is not None:
        colors_path = Path(colors_path)
        extra = parse_color_text(colors_path.read_text(), str(colors_path))
        clash = set(extra) & set(colors)
        if clash:
            raise InputError(f"node {min(clash)} colored in both {graph_path} and {colors_path}")
        colors.update(extra)
    elif not colors:
        raise InputError(f"{graph_path}: no @color directives and no color file given")
    return assemble(edges, colors, str(graph_path))


def format_edges(g: ColoredGraph) -> str:
    return "".join(f"{u} {v}\n" for u, v in g.edges)


def format_colors(g: ColoredGraph) -> str:
    return "".join(f"{v} {g.color_labels[c]}\n" for v, c in enumerate(g.color_of))


def format_combined(g: ColoredGraph) -> str:
    lines = [f"@color {v} {g.color_labels[c]}\n" for v, c in enumerate(g.color_of)]
    lines += [f"{u}\t{v}\n" for u, v in g.edges]
    return "".join(lines)


def write_graph(g: ColoredGraph, graph_path, colors_path=None):
    """Write ``g``; without ``colors_path`` the combined single-file layout is used."""
    if colors_path is None:
        Path(graph_path).write_text(format_combined(g))
        return
    Path(graph_path).write_text(f"# n={g.n} m={g.m}\n" + format_edges(g))
    Path(colors_path).write_text(format_colors(g))
