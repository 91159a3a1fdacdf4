"""Two-colorings of graphs and the constructive coloring algorithms.

All half-threshold comparisons use exact integer arithmetic (``2 * count``
against a set size) so ties are detected exactly.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Iterable, Sequence

from .errors import InternalInvariantError, PreconditionError
from .graphs import Graph


class Color(enum.Enum):
    RED = "R"
    BLUE = "B"

    @property
    def other(self) -> "Color":
        return Color.BLUE if self is Color.RED else Color.RED

    def __str__(self) -> str:
        return self.value


class Winner(enum.Enum):
    """Outcome of a majority vote over a node set: a color, or a tie."""

    RED = "R"
    BLUE = "B"
    TIE = "tie"

    @classmethod
    def of(cls, color: Color) -> "Winner":
        return cls.RED if color is Color.RED else cls.BLUE

    @property
    def color(self) -> Color | None:
        if self is Winner.TIE:
            return None
        return Color.RED if self is Winner.RED else Color.BLUE

    def __str__(self) -> str:
        return self.value


Coloring = tuple[Color, ...]


def all_red(n: int) -> Coloring:
    return (Color.RED,) * n


def coloring_from_string(text: str) -> Coloring:
    try:
        return tuple(Color(ch) for ch in text.strip())
    except ValueError:
        raise PreconditionError(
            f"coloring string may only contain 'R' and 'B': {text!r}"
        ) from None


def coloring_to_string(colors: Sequence[Color]) -> str:
    return "".join(c.value for c in colors)


def flipped(colors: Sequence[Color], i: int) -> Coloring:
    """Copy of ``colors`` with node ``i``'s color swapped."""
    out = list(colors)
    out[i] = out[i].other
    return tuple(out)


def inverted(colors: Sequence[Color]) -> Coloring:
    """Copy of ``colors`` with every node's color swapped."""
    return tuple(c.other for c in colors)


def random_coloring(n: int, rng: random.Random) -> Coloring:
    return tuple(rng.choice((Color.RED, Color.BLUE)) for _ in range(n))


def majority_winner(colors: Iterable[Color]) -> Winner:
    """Majority winner of a multiset of colors; ``TIE`` when neither color
    holds strictly more than half (in particular for the empty multiset)."""
    red = blue = 0
    for c in colors:
        if c is Color.RED:
            red += 1
        else:
            blue += 1
    total = red + blue
    if 2 * red > total:
        return Winner.RED
    if 2 * blue > total:
        return Winner.BLUE
    return Winner.TIE


@dataclass(frozen=True)
class ColoredGraph:
    """A graph together with a total Red/Blue assignment."""

    graph: Graph
    colors: Coloring

    def __post_init__(self) -> None:
        if len(self.colors) != self.graph.n:
            raise PreconditionError(
                f"coloring covers {len(self.colors)} nodes, graph has {self.graph.n}"
            )

    @cached_property
    def color_counts(self) -> tuple[int, int]:
        """``(red, blue)`` node counts."""
        red = sum(1 for c in self.colors if c is Color.RED)
        return red, self.graph.n - red

    @cached_property
    def global_winner(self) -> Winner:
        red, blue = self.color_counts
        if 2 * red > self.graph.n:
            return Winner.RED
        if 2 * blue > self.graph.n:
            return Winner.BLUE
        return Winner.TIE

    def local_red_count(self, i: int) -> int:
        return sum(1 for j in self.graph.neighbors(i) if self.colors[j] is Color.RED)

    def local_winner(self, i: int) -> Winner:
        red = self.local_red_count(i)
        d = self.graph.degree(i)
        if 2 * red > d:
            return Winner.RED
        if 2 * (d - red) > d:
            return Winner.BLUE
        return Winner.TIE

    def with_flipped(self, i: int) -> "ColoredGraph":
        return ColoredGraph(self.graph, flipped(self.colors, i))

    def with_inverted(self) -> "ColoredGraph":
        return ColoredGraph(self.graph, inverted(self.colors))


def monochromatic_count(cg: ColoredGraph) -> tuple[int, int]:
    """``(monochromatic, dichromatic)`` edge counts; they sum to ``|E|``."""
    mono = sum(1 for u, v in cg.graph.edges if cg.colors[u] is cg.colors[v])
    return mono, cg.graph.edge_count - mono


def is_weak_majority_coloring(g: Graph, colors: Sequence[Color]) -> bool:
    """True when no node's own color wins a strict majority of its neighborhood."""
    for i in range(g.n):
        same = sum(1 for j in g.adj[i] if colors[j] is colors[i])
        if 2 * same > g.degree(i):
            return False
    return True


def weak_majority_2_coloring(
    g: Graph,
    initial: Coloring | None = None,
    node_order: Sequence[int] | None = None,
) -> Coloring:
    """Local-search coloring in which every node has at least as many
    dichromatic as monochromatic edges.

    Repeatedly swaps the first node (in ``node_order``, ascending ids by
    default) with strictly more monochromatic than dichromatic edges.  Each
    swap strictly decreases the total monochromatic count, so the loop
    terminates after at most ``|E|`` swaps.  The default initial coloring is
    all-red; pass a seeded :func:`random_coloring` for randomized starts.
    """
    colors, _ = weak_majority_2_coloring_swaps(g, initial, node_order)
    return colors


def weak_majority_2_coloring_swaps(
    g: Graph,
    initial: Coloring | None = None,
    node_order: Sequence[int] | None = None,
    on_swap: Callable[[int, int], None] | None = None,
) -> tuple[Coloring, int]:
    """Like :func:`weak_majority_2_coloring` but also returns the number of
    swaps performed; ``on_swap(node, mono_after)`` is invoked per swap."""
    colors = list(initial) if initial is not None else [Color.RED] * g.n
    if len(colors) != g.n:
        raise PreconditionError("initial coloring must cover every node")
    order = list(node_order) if node_order is not None else list(range(g.n))
    if sorted(order) != list(range(g.n)):
        raise PreconditionError("node_order must be a permutation of all node ids")

    mono_deg = [
        sum(1 for j in g.adj[i] if colors[j] is colors[i]) for i in range(g.n)
    ]
    total_mono = sum(mono_deg) // 2
    swaps = 0
    budget = total_mono  # each swap strictly decreases total_mono
    while True:
        target = -1
        for i in order:
            if 2 * mono_deg[i] > g.degree(i):
                target = i
                break
        if target < 0:
            return tuple(colors), swaps
        if swaps >= budget:
            raise InternalInvariantError(
                "swap loop exceeded its monochromatic-edge budget"
            )
        old = colors[target]
        colors[target] = old.other
        delta = mono_deg[target] - (g.degree(target) - mono_deg[target])
        total_mono -= delta
        mono_deg[target] = g.degree(target) - mono_deg[target]
        for j in g.adj[target]:
            if colors[j] is old:
                mono_deg[j] -= 1
            else:
                mono_deg[j] += 1
        swaps += 1
        if on_swap is not None:
            on_swap(target, total_mono)


def illusion_coloring(g: Graph, initial: Coloring | None = None) -> ColoredGraph:
    """Color ``g`` so that strictly more than half the nodes disagree locally
    with the global majority winner (a majority-weak-majority illusion).

    Starts from a stabilized weak majority 2-coloring.  While the global
    vote ties and at most half the nodes see a non-tied neighborhood, the
    lowest-id node with a tied neighborhood is flipped (which preserves the
    monochromatic total) and the coloring re-stabilized.  Every iteration
    either finishes or strictly lowers the monochromatic total, so the loop
    terminates; the guarantee is checked before returning and a violation
    raises :class:`InternalInvariantError`.
    """
    if g.n < 1:
        raise PreconditionError("illusion coloring needs at least one node")
    colors = weak_majority_2_coloring(g, initial)
    for _ in range(g.edge_count + 2):
        cg = ColoredGraph(g, colors)
        if cg.global_winner is not Winner.TIE:
            break
        non_tied = sum(
            1 for i in range(g.n) if cg.local_winner(i) is not Winner.TIE
        )
        if 2 * non_tied > g.n:
            break
        j = next(i for i in range(g.n) if cg.local_winner(i) is Winner.TIE)
        colors = weak_majority_2_coloring(g, flipped(colors, j))
    result = ColoredGraph(g, colors)
    under = sum(
        1
        for i in range(g.n)
        if result.local_winner(i) is not result.global_winner
    )
    if not 2 * under > g.n:
        raise InternalInvariantError(
            f"illusion coloring left only {under} of {g.n} nodes in disagreement"
        )
    return result


def proper_2_coloring(g: Graph) -> Coloring | None:
    """Proper 2-coloring (zero monochromatic edges) if ``g`` is bipartite.

    Deterministic: breadth-first from the lowest-id node of each component,
    roots colored red.  Returns ``None`` on any odd cycle.
    """
    colors: list[Color | None] = [None] * g.n
    for root in range(g.n):
        if colors[root] is not None:
            continue
        colors[root] = Color.RED
        queue = [root]
        while queue:
            nxt: list[int] = []
            for u in queue:
                for v in sorted(g.adj[u]):
                    if colors[v] is None:
                        colors[v] = colors[u].other
                        nxt.append(v)
                    elif colors[v] is colors[u]:
                        return None
            queue = nxt
    return tuple(colors)  # type: ignore[arg-type]


def strict_illusion_from_proper(g: Graph) -> ColoredGraph | None:
    """Coloring with at least half the nodes under strict majority illusion,
    derived from a proper 2-coloring.

    Returns ``None`` when ``g`` is not bipartite, or when the proper
    coloring's global vote ties and no node has all neighbors of degree
    above 2 (the two failure reasons are independently checkable via
    :func:`proper_2_coloring` and the degree condition).  With a non-tied
    global vote the proper coloring itself is returned; on a tie the
    lowest-id qualifying node is flipped, leaving exactly ``n/2`` nodes
    whose neighborhood majority opposes the new global winner.
    """
    base = proper_2_coloring(g)
    if base is None:
        return None
    cg = ColoredGraph(g, base)
    if cg.global_winner is not Winner.TIE:
        _require_strict_count(cg, minimum=g.n // 2 + 1)
        return cg
    pick = -1
    for i in range(g.n):
        if all(g.degree(j) > 2 for j in g.adj[i]):
            pick = i
            break
    if pick < 0:
        return None
    out = cg.with_flipped(pick)
    _require_strict_count(out, minimum=g.n // 2)
    return out


def odd_degree_swap_upgrade(cg: ColoredGraph) -> ColoredGraph | None:
    """Upgrade a globally-tied weak majority coloring on an all-odd-degree
    graph to one with at least half the nodes under strict majority illusion.

    A node is swappable when every neighbor's color margin is at least 2
    (hence at least 3, margins being odd).  Flipping the lowest-id swappable
    node resolves the global tie while every previously minority-majority
    neighborhood keeps its winner.  Returns ``None`` when no node is
    swappable; raises :class:`PreconditionError` when some degree is even,
    the coloring is not a weak majority 2-coloring, or the global vote is
    not tied.
    """
    g = cg.graph
    if any(d % 2 == 0 for d in g.degrees()):
        raise PreconditionError("all node degrees must be odd")
    if not is_weak_majority_coloring(g, cg.colors):
        raise PreconditionError("coloring is not a weak majority 2-coloring")
    if cg.global_winner is not Winner.TIE:
        raise PreconditionError("global vote must be tied")

    def margin(u: int) -> int:
        red = cg.local_red_count(u)
        return abs(2 * red - g.degree(u))

    pick = -1
    for j in range(g.n):
        if all(margin(u) >= 2 for u in g.adj[j]):
            pick = j
            break
    if pick < 0:
        return None
    out = cg.with_flipped(pick)
    _require_strict_count(out, minimum=(g.n + 1) // 2)
    return out


def _require_strict_count(cg: ColoredGraph, minimum: int) -> None:
    gw = cg.global_winner
    strict = sum(
        1
        for i in range(cg.graph.n)
        if (lw := cg.local_winner(i)) is not Winner.TIE
        and gw is not Winner.TIE
        and lw is not gw
    )
    if strict < minimum:
        raise InternalInvariantError(
            f"expected at least {minimum} nodes under strict illusion, found {strict}"
        )
