"""Edge-list text format for graphs and colored graphs.

Layout::

    # comments run to end of line, blank lines are ignored
    n 4
    colors RBRB        # only for colored graphs, written right after the header
    0 1
    1 2

Writers emit a canonical form (header, optional colors line, edges sorted
with ``u < v``), so write/read/write round-trips are byte-identical.
"""

from __future__ import annotations

from .coloring import ColoredGraph, Coloring, coloring_from_string, coloring_to_string
from .errors import FormatError
from .graphs import Graph, make_graph


def parse_graph_text(text: str) -> tuple[Graph, Coloring | None]:
    """Parse the text format, returning the graph and its colors if present."""
    n: int | None = None
    colors: Coloring | None = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "n":
            if n is not None:
                raise FormatError(f"line {lineno}: duplicate 'n' header")
            if len(parts) != 2 or not parts[1].isdigit():
                raise FormatError(f"line {lineno}: expected 'n <count>'")
            n = int(parts[1])
        elif parts[0] == "colors":
            if n is None:
                raise FormatError(f"line {lineno}: 'colors' before 'n' header")
            if colors is not None:
                raise FormatError(f"line {lineno}: duplicate 'colors' line")
            if len(parts) != 2:
                raise FormatError(f"line {lineno}: expected 'colors <RB string>'")
            if len(parts[1]) != n or any(ch not in "RB" for ch in parts[1]):
                raise FormatError(
                    f"line {lineno}: colors must be {n} characters from {{R,B}}"
                )
            colors = coloring_from_string(parts[1])
        else:
            if n is None:
                raise FormatError(f"line {lineno}: edge before 'n' header")
            if len(parts) != 2:
                raise FormatError(f"line {lineno}: expected 'u v' edge pair")
            try:
                u, v = int(parts[0]), int(parts[1])
            except ValueError:
                raise FormatError(f"line {lineno}: non-integer node id") from None
            edges.append((u, v))
    if n is None:
        raise FormatError("missing 'n <count>' header")
    try:
        graph = make_graph(n, edges)
    except Exception as exc:
        raise FormatError(str(exc)) from exc
    return graph, colors


def parse_graph(text: str) -> Graph:
    graph, _ = parse_graph_text(text)
    return graph


def parse_colored_graph(text: str) -> ColoredGraph:
    graph, colors = parse_graph_text(text)
    if colors is None:
        raise FormatError("missing 'colors' line")
    return ColoredGraph(graph, colors)


def write_graph(graph: Graph, colors: Coloring | None = None) -> str:
    lines = [f"n {graph.n}"]
    if colors is not None:
        lines.append(f"colors {coloring_to_string(colors)}")
    lines.extend(f"{u} {v}" for u, v in graph.edges)
    return "\n".join(lines) + "\n"


def write_colored_graph(cg: ColoredGraph) -> str:
    return write_graph(cg.graph, cg.colors)
