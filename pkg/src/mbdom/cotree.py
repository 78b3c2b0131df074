"""Cotree expressions: cographs written as nested unions and joins of single vertices.

Text grammar::

    E ::= "." | "U(" E ("," E)+ ")" | "J(" E ("," E)+ ")"

Whitespace between tokens is ignored. Leaves are numbered left to right when
an expression is turned into a graph.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property

from .errors import ParseError
from .graph import Graph, join, union


class Kind(Enum):
    LEAF = "."
    UNION = "U"
    JOIN = "J"


@dataclass(frozen=True)
class Cotree:
    kind: Kind
    children: tuple[Cotree, ...] = ()
    # vertex label of a leaf; used by recognition to remember the original index
    label: int | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if self.kind is Kind.LEAF and self.children:
            raise ValueError("a leaf has no children")
        if self.kind is not Kind.LEAF and len(self.children) < 2:
            raise ValueError(f"{self.kind.name.lower()} needs at least two children")

    @classmethod
    def leaf(cls, label: int | None = None) -> Cotree:
        return cls(Kind.LEAF, (), label)

    @classmethod
    def union(cls, *children: Cotree) -> Cotree:
        return cls(Kind.UNION, tuple(children))

    @classmethod
    def join(cls, *children: Cotree) -> Cotree:
        return cls(Kind.JOIN, tuple(children))

    @cached_property
    def size(self) -> int:
        if self.kind is Kind.LEAF:
            return 1
        return sum(c.size for c in self.children)

    def leaf_labels(self) -> list[int | None]:
        """Leaf labels in left-to-right order, i.e. by vertex index of ``cotree_to_graph``."""
        if self.kind is Kind.LEAF:
            return [self.label]
        return [lab for c in self.children for lab in c.leaf_labels()]

    def relabeled(self, start: int = 0) -> Cotree:
        """Copy whose leaves are labeled with their left-to-right position."""
        counter = iter(range(start, start + self.size))

        def walk(e: Cotree) -> Cotree:
            if e.kind is Kind.LEAF:
                return Cotree.leaf(next(counter))
            return Cotree(e.kind, tuple(walk(c) for c in e.children))

        return walk(self)

    def __str__(self) -> str:
        if self.kind is Kind.LEAF:
            return "."
        return f"{self.kind.value}({','.join(str(c) for c in self.children)})"


def parse_cotree(text: str) -> Cotree:
    parser = _Parser(text)
    expr = parser.expr()
    parser.skip_ws()
    if parser.pos != len(text):
        raise ParseError(f"unexpected {text[parser.pos]!r} after expression", offset=parser.pos)
    return expr


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def expect(self, ch: str) -> None:
        self.skip_ws()
        if self.pos >= len(self.text) or self.text[self.pos] != ch:
            got = "end of input" if self.pos >= len(self.text) else repr(self.text[self.pos])
            raise ParseError(f"expected {ch!r}, got {got}", offset=self.pos)
        self.pos += 1

    def expr(self) -> Cotree:
        self.skip_ws()
        if self.pos >= len(self.text):
            raise ParseError("unexpected end of input", offset=self.pos)
        start = self.pos
        ch = self.text[self.pos]
        if ch == ".":
            self.pos += 1
            return Cotree.leaf()
        if ch not in "UJ":
            raise ParseError(f"unexpected {ch!r}", offset=self.pos)
        self.pos += 1
        self.expect("(")
        children = [self.expr()]
        while True:
            self.skip_ws()
            if self.pos < len(self.text) and self.text[self.pos] == ",":
                self.pos += 1
                children.append(self.expr())
            else:
                break
        self.expect(")")
        if len(children) < 2:
            raise ParseError(f"{ch}(...) needs at least two children", offset=start)
        return Cotree(Kind(ch), tuple(children))


def cotree_to_graph(e: Cotree) -> Graph:
    if e.kind is Kind.LEAF:
        return Graph.empty(1)
    op = union if e.kind is Kind.UNION else join
    parts = [cotree_to_graph(c) for c in e.children]
    acc = parts[0]
    for p in parts[1:]:
        acc = op(acc, p)
    return acc


def recognize_cograph(g: Graph) -> Cotree | None:
    """Cotree of ``g`` with leaves labeled by vertex of ``g``, or None if ``g`` has an induced P4.

    Decomposes along components of the graph and of its complement; a
    connected graph with a connected complement on two or more vertices is
    not a cograph. Returns None for the empty graph.
    """
    if g.n == 0:
        return None
    comp = g.complement()

    def split(vertices: list[int], graph: Graph) -> list[list[int]]:
        inside = set(vertices)
        seen: set[int] = set()
        parts = []
        for s in vertices:
            if s in seen:
                continue
            seen.add(s)
            part, stack = [], [s]
            while stack:
                u = stack.pop()
                part.append(u)
                for v in graph.adjacency[u]:
                    if v in inside and v not in seen:
                        seen.add(v)
                        stack.append(v)
            parts.append(sorted(part))
        return parts

    def build(vertices: list[int]) -> Cotree | None:
        if len(vertices) == 1:
            return Cotree.leaf(vertices[0])
        for graph, kind in ((g, Kind.UNION), (comp, Kind.JOIN)):
            parts = split(vertices, graph)
            if len(parts) > 1:
                children = []
                for p in parts:
                    sub = build(p)
                    if sub is None:
                        return None
                    children.append(sub)
                return Cotree(kind, tuple(children))
        return None

    return build(list(range(g.n)))
