"""Global majority logic (GMJL): syntax, parser, and model checker.

The logic extends propositional logic with counting modalities over a
node's neighborhood and over the whole graph::

    <>n a   strictly more than n neighbors satisfy a
    W a     at least half of the neighbors satisfy a
    E_n a   strictly more than n nodes satisfy a
    GW a    at least half of all nodes satisfy a

``M`` (more than half of the neighbors) and ``GM`` (more than half of all
nodes) are the duals ``~W~`` and ``~GW~``; they are parsed and printed as
first-class operators but evaluate through their expansion, so duality
holds by construction.  Surface syntax: atoms are identifiers, prefix
operators bind tightest, then ``&``, ``|``, ``->`` (right-associative).
"""

from __future__ import annotations

import re
import warnings
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .analysis import IllusionKind
from .coloring import Color, ColoredGraph
from .errors import FormulaSyntaxError, PreconditionError
from .graphs import Graph

DEFAULT_VALUATION_CAP = 22


class Formula:
    """Base class for formula nodes; instances are immutable and hashable."""

    __slots__ = ()


@dataclass(frozen=True)
class Atom(Formula):
    name: str


@dataclass(frozen=True)
class Not(Formula):
    sub: Formula


@dataclass(frozen=True)
class Or(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class And(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Implies(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class NeighborCountOver(Formula):
    """``<>n a``: strictly more than ``bound`` neighbors satisfy ``a``."""

    bound: int
    sub: Formula


@dataclass(frozen=True)
class WeakNeighborMajority(Formula):
    """``W a``: at least half of the neighbors satisfy ``a``."""

    sub: Formula


@dataclass(frozen=True)
class NeighborMajority(Formula):
    """``M a``: more than half of the neighbors satisfy ``a`` (dual of W)."""

    sub: Formula


@dataclass(frozen=True)
class GlobalCountOver(Formula):
    """``E_n a``: strictly more than ``bound`` nodes satisfy ``a``."""

    bound: int
    sub: Formula


@dataclass(frozen=True)
class WeakGlobalMajority(Formula):
    """``GW a``: at least half of all nodes satisfy ``a``."""

    sub: Formula


@dataclass(frozen=True)
class GlobalMajority(Formula):
    """``GM a``: more than half of all nodes satisfy ``a`` (dual of GW)."""

    sub: Formula


def expand(f: Formula) -> Formula:
    """Rewrite derived operators (And, Implies, M, GM) into the core
    connectives; semantics-preserving."""
    if isinstance(f, Atom):
        return f
    if isinstance(f, Not):
        return Not(expand(f.sub))
    if isinstance(f, Or):
        return Or(expand(f.left), expand(f.right))
    if isinstance(f, And):
        return Not(Or(Not(expand(f.left)), Not(expand(f.right))))
    if isinstance(f, Implies):
        return Or(Not(expand(f.left)), expand(f.right))
    if isinstance(f, NeighborCountOver):
        return NeighborCountOver(f.bound, expand(f.sub))
    if isinstance(f, WeakNeighborMajority):
        return WeakNeighborMajority(expand(f.sub))
    if isinstance(f, NeighborMajority):
        return Not(WeakNeighborMajority(Not(expand(f.sub))))
    if isinstance(f, GlobalCountOver):
        return GlobalCountOver(f.bound, expand(f.sub))
    if isinstance(f, WeakGlobalMajority):
        return WeakGlobalMajority(expand(f.sub))
    if isinstance(f, GlobalMajority):
        return Not(WeakGlobalMajority(Not(expand(f.sub))))
    raise TypeError(f"unknown formula node {f!r}")


def atom_names(f: Formula) -> frozenset[str]:
    if isinstance(f, Atom):
        return frozenset({f.name})
    if isinstance(f, (Not, WeakNeighborMajority, NeighborMajority,
                      WeakGlobalMajority, GlobalMajority)):
        return atom_names(f.sub)
    if isinstance(f, (NeighborCountOver, GlobalCountOver)):
        return atom_names(f.sub)
    if isinstance(f, (Or, And, Implies)):
        return atom_names(f.left) | atom_names(f.right)
    raise TypeError(f"unknown formula node {f!r}")


# ---------------------------------------------------------------------------
# Parsing and printing

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<lparen>\()
  | (?P<rparen>\))
  | (?P<arrow>->)
  | (?P<amp>&)
  | (?P<pipe>\|)
  | (?P<tilde>~)
  | (?P<diamond><>)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<number>\d+)
    """,
    re.VERBOSE,
)

_KEYWORDS = {"W", "M", "GW", "GM"}


@dataclass(frozen=True)
class _Token:
    kind: str
    text: str
    pos: int


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise FormulaSyntaxError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup
        if kind != "ws":
            tokens.append(_Token(kind, m.group(), pos))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self) -> _Token | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self) -> _Token:
        tok = self.peek()
        if tok is None:
            raise FormulaSyntaxError("unexpected end of input", len(self.text))
        self.pos += 1
        return tok

    def parse(self) -> Formula:
        f = self.parse_implies()
        tok = self.peek()
        if tok is not None:
            raise FormulaSyntaxError(f"unexpected token {tok.text!r}", tok.pos)
        return f

    def parse_implies(self) -> Formula:
        left = self.parse_or()
        tok = self.peek()
        if tok is not None and tok.kind == "arrow":
            self.take()
            return Implies(left, self.parse_implies())
        return left

    def parse_or(self) -> Formula:
        f = self.parse_and()
        while (tok := self.peek()) is not None and tok.kind == "pipe":
            self.take()
            f = Or(f, self.parse_and())
        return f

    def parse_and(self) -> Formula:
        f = self.parse_unary()
        while (tok := self.peek()) is not None and tok.kind == "amp":
            self.take()
            f = And(f, self.parse_unary())
        return f

    def parse_unary(self) -> Formula:
        tok = self.peek()
        if tok is None:
            raise FormulaSyntaxError("unexpected end of input", len(self.text))
        if tok.kind == "tilde":
            self.take()
            return Not(self.parse_unary())
        if tok.kind == "diamond":
            self.take()
            bound = self.take_index(tok.pos)
            return NeighborCountOver(bound, self.parse_unary())
        if tok.kind == "ident":
            if tok.text in _KEYWORDS:
                self.take()
                ctor = {
                    "W": WeakNeighborMajority,
                    "M": NeighborMajority,
                    "GW": WeakGlobalMajority,
                    "GM": GlobalMajority,
                }[tok.text]
                return ctor(self.parse_unary())
            if tok.text.startswith("E_"):
                self.take()
                suffix = tok.text[2:]
                if not suffix.isdigit():
                    raise FormulaSyntaxError(
                        f"malformed counting index in {tok.text!r}", tok.pos
                    )
                return GlobalCountOver(int(suffix), self.parse_unary())
        return self.parse_primary()

    def take_index(self, opener_pos: int) -> int:
        tok = self.peek()
        if tok is None or tok.kind != "number":
            raise FormulaSyntaxError("malformed counting index after '<>'", opener_pos)
        self.take()
        return int(tok.text)

    def parse_primary(self) -> Formula:
        tok = self.take()
        if tok.kind == "lparen":
            f = self.parse_implies()
            closer = self.peek()
            if closer is None or closer.kind != "rparen":
                raise FormulaSyntaxError("unbalanced parenthesis", tok.pos)
            self.take()
            return f
        if tok.kind == "ident" and tok.text not in _KEYWORDS:
            return Atom(tok.text)
        raise FormulaSyntaxError(f"unexpected token {tok.text!r}", tok.pos)


def parse_formula(text: str) -> Formula:
    """Parse the surface syntax; raises :class:`FormulaSyntaxError` with the
    offending position on lexical errors, unbalanced parentheses, or
    malformed counting indices."""
    return _Parser(text).parse()


def format_formula(f: Formula) -> str:
    """Render a formula so that ``parse_formula(format_formula(f))`` equals
    ``f`` up to derived-operator expansion."""

    def render(node: Formula, level: int) -> str:
        # levels: 0 implies, 1 or, 2 and, 3 unary/primary
        if isinstance(node, Atom):
            return node.name
        if isinstance(node, Implies):
            text = f"{render(node.left, 1)} -> {render(node.right, 0)}"
            need = level > 0
        elif isinstance(node, Or):
            text = f"{render(node.left, 1)} | {render(node.right, 2)}"
            need = level > 1
        elif isinstance(node, And):
            text = f"{render(node.left, 2)} & {render(node.right, 3)}"
            need = level > 2
        else:
            prefix = {
                Not: "~",
                WeakNeighborMajority: "W ",
                NeighborMajority: "M ",
                WeakGlobalMajority: "GW ",
                GlobalMajority: "GM ",
            }.get(type(node))
            if prefix is not None:
                return f"{prefix}{render(node.sub, 3)}"
            if isinstance(node, NeighborCountOver):
                return f"<>{node.bound} {render(node.sub, 3)}"
            if isinstance(node, GlobalCountOver):
                return f"E_{node.bound} {render(node.sub, 3)}"
            raise TypeError(f"unknown formula node {node!r}")
        return f"({text})" if need else text

    return render(f, 0)


# ---------------------------------------------------------------------------
# Models and evaluation


class UnknownAtomWarning(UserWarning):
    """An atom absent from the model was evaluated (treated as false)."""


@dataclass(frozen=True)
class Model:
    """A graph plus a valuation assigning each node its true atoms."""

    graph: Graph
    valuation: tuple[frozenset[str], ...]
    atoms: frozenset[str] | None = None

    def __post_init__(self) -> None:
        if len(self.valuation) != self.graph.n:
            raise PreconditionError(
                f"valuation covers {len(self.valuation)} nodes, "
                f"graph has {self.graph.n}"
            )

    def known_atoms(self) -> frozenset[str]:
        if self.atoms is not None:
            return self.atoms
        out: set[str] = set()
        for v in self.valuation:
            out |= v
        return frozenset(out)


def model_from_colored_graph(cg: ColoredGraph, atom: str = "p") -> Model:
    """Model in which ``atom`` holds exactly at the red nodes."""
    valuation = tuple(
        frozenset({atom}) if c is Color.RED else frozenset() for c in cg.colors
    )
    return Model(cg.graph, valuation, atoms=frozenset({atom}))


class _Evaluator:
    def __init__(self, model: Model):
        self.model = model
        self.all_nodes = frozenset(range(model.graph.n))
        self.known = model.known_atoms()
        self.memo: dict[Formula, frozenset[int]] = {}
        self.warned: set[str] = set()

    def extension(self, f: Formula) -> frozenset[int]:
        cached = self.memo.get(f)
        if cached is not None:
            return cached
        result = self._compute(f)
        self.memo[f] = result
        return result

    def _compute(self, f: Formula) -> frozenset[int]:
        g = self.model.graph
        if isinstance(f, Atom):
            if f.name not in self.known and f.name not in self.warned:
                self.warned.add(f.name)
                warnings.warn(
                    f"atom {f.name!r} is not part of the model; treated as false",
                    UnknownAtomWarning,
                    stacklevel=4,
                )
            return frozenset(
                i for i in self.all_nodes if f.name in self.model.valuation[i]
            )
        if isinstance(f, Not):
            return self.all_nodes - self.extension(f.sub)
        if isinstance(f, Or):
            return self.extension(f.left) | self.extension(f.right)
        if isinstance(f, NeighborCountOver):
            sat = self.extension(f.sub)
            return frozenset(
                i for i in self.all_nodes if len(g.adj[i] & sat) > f.bound
            )
        if isinstance(f, WeakNeighborMajority):
            sat = self.extension(f.sub)
            return frozenset(
                i for i in self.all_nodes if 2 * len(g.adj[i] & sat) >= g.degree(i)
            )
        if isinstance(f, GlobalCountOver):
            sat = self.extension(f.sub)
            return self.all_nodes if len(sat) > f.bound else frozenset()
        if isinstance(f, WeakGlobalMajority):
            sat = self.extension(f.sub)
            return self.all_nodes if 2 * len(sat) >= g.n else frozenset()
        raise TypeError(f"evaluation reached unexpanded node {f!r}")


def extension(model: Model, f: Formula) -> frozenset[int]:
    """Set of nodes at which ``f`` holds."""
    return _Evaluator(model).extension(expand(f))


def model_check(model: Model, i: int, f: Formula) -> bool:
    """Truth of ``f`` at node ``i``; exact half-threshold comparisons."""
    model.graph.check_node(i)
    return i in extension(model, f)


# ---------------------------------------------------------------------------
# The illusion formula library

AGENT_WEAK_MAJORITY_OPPOSITION = "weak-majority-opposition"
AGENT_MAJORITY_OPPOSITION = "majority-opposition"
AGENT_MAJORITY_ILLUSION = "majority-illusion"
AGENT_WEAK_MAJORITY_ILLUSION = "weak-majority-illusion"

_NETWORK_KINDS = {
    IllusionKind.MAJORITY_MAJORITY.value,
    IllusionKind.WEAK_MAJORITY_MAJORITY.value,
    IllusionKind.MAJORITY_WEAK_MAJORITY.value,
    IllusionKind.WEAK_MAJORITY_WEAK_MAJORITY.value,
}

FORMULA_KINDS = (
    AGENT_WEAK_MAJORITY_OPPOSITION,
    AGENT_MAJORITY_OPPOSITION,
    AGENT_MAJORITY_ILLUSION,
    AGENT_WEAK_MAJORITY_ILLUSION,
    IllusionKind.MAJORITY_MAJORITY.value,
    IllusionKind.WEAK_MAJORITY_MAJORITY.value,
    IllusionKind.MAJORITY_WEAK_MAJORITY.value,
    IllusionKind.WEAK_MAJORITY_WEAK_MAJORITY.value,
)


@lru_cache(maxsize=None)
def illusion_formula(kind: str | IllusionKind, atom: str = "p") -> Formula:
    """The library formula expressing an agent- or network-level statement.

    Agent statements: ``weak-majority-opposition``, ``majority-opposition``,
    ``majority-illusion``, ``weak-majority-illusion``.  Network statements:
    the four (weak-)majority-(weak-)majority kinds, built by wrapping the
    agent formula in a global (weak) majority operator.
    """
    name = kind.value if isinstance(kind, IllusionKind) else kind
    p = Atom(atom)
    np_ = Not(p)
    strict_agent = Or(
        And(GlobalMajority(p), NeighborMajority(np_)),
        And(GlobalMajority(np_), NeighborMajority(p)),
    )
    weak_agent = Or(
        Or(
            And(WeakGlobalMajority(p), NeighborMajority(np_)),
            And(WeakGlobalMajority(np_), NeighborMajority(p)),
        ),
        And(
            And(WeakNeighborMajority(p), WeakNeighborMajority(np_)),
            Or(GlobalMajority(p), GlobalMajority(np_)),
        ),
    )
    table: dict[str, Formula] = {
        AGENT_WEAK_MAJORITY_OPPOSITION: Or(
            And(p, WeakNeighborMajority(np_)), And(np_, WeakNeighborMajority(p))
        ),
        AGENT_MAJORITY_OPPOSITION: Or(
            And(p, NeighborMajority(np_)), And(np_, NeighborMajority(p))
        ),
        AGENT_MAJORITY_ILLUSION: strict_agent,
        AGENT_WEAK_MAJORITY_ILLUSION: weak_agent,
        IllusionKind.MAJORITY_MAJORITY.value: GlobalMajority(strict_agent),
        IllusionKind.WEAK_MAJORITY_MAJORITY.value: WeakGlobalMajority(strict_agent),
        IllusionKind.MAJORITY_WEAK_MAJORITY.value: GlobalMajority(weak_agent),
        IllusionKind.WEAK_MAJORITY_WEAK_MAJORITY.value: WeakGlobalMajority(weak_agent),
    }
    if name not in table:
        raise PreconditionError(
            f"unknown formula kind {name!r}; expected one of {FORMULA_KINDS}"
        )
    return table[name]


def _valuations(n: int, atom: str) -> Iterator[tuple[frozenset[str], ...]]:
    only = frozenset({atom})
    empty: frozenset[str] = frozenset()
    for mask in range(1 << n):
        yield tuple(only if (mask >> i) & 1 else empty for i in range(n))


def formula_possible(
    g: Graph, f: Formula, atom: str = "p", cap: int = DEFAULT_VALUATION_CAP
) -> bool:
    """Is ``f`` satisfiable at some node under some valuation of ``atom``?

    Enumerates all single-atom valuations; formulas mentioning other atoms
    are rejected.
    """
    if g.n > cap:
        raise PreconditionError(
            f"graph has {g.n} nodes, above the valuation-search cap {cap}"
        )
    used = atom_names(f)
    if not used <= {atom}:
        raise PreconditionError(
            f"satisfiability search is single-atom; formula uses {sorted(used)}"
        )
    core = expand(f)
    for valuation in _valuations(g.n, atom):
        model = Model(g, valuation, atoms=frozenset({atom}))
        if extension(model, core):
            return True
    return False
