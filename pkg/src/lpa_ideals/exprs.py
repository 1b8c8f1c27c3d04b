"""Tiny expression language for naming and combining ideals.

Grammar (precedence `&` over `*` over `+`, comparisons only at top level):

    top     := sum (('<=' | '==') sum)?
    sum     := product ('+' product)*
    product := meet ('*' meet)*
    meet    := atom ('&' atom)*
    atom    := 'L' | '0' | 'I' '(' vertices ';' vertices ')'
             | 'gen' '(' vertices ')'
             | 'comp' '(' [label ':'] vertex ('>' vertex)* ';' poly ')'
             | 'gr' '(' sum ')' | 'rad' '(' sum ')' | '(' sum ')'

`gen(v...)` is the graded ideal generated by the vertices (hereditary
saturated closure, empty S); `comp` names a polynomial on an exitless
cycle written as a chain of vertices with the closing edge implied.
Errors carry the source position.
"""

from __future__ import annotations

import re

from . import fieldpoly, ideals, lattice
from .errors import InputError
from .fieldpoly import FieldSpec
from .graphs import Cycle, Graph
from .ideals import Ideal

_TOKEN = re.compile(r"\s*(<=|==|[A-Za-z_][A-Za-z_0-9]*|[0-9]+|[()+*&;:>,^-])")


class _Tokens:
    def __init__(self, text: str):
        self.text = text
        self.items: list[tuple[str, int]] = []
        pos = 0
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if not m:
                if text[pos:].strip():
                    raise InputError(
                        f"expression syntax error at column {pos + 1}: "
                        f"unexpected {text[pos]!r}")
                break
            self.items.append((m.group(1), m.start(1)))
            pos = m.end()
        self.index = 0

    def peek(self) -> str | None:
        return self.items[self.index][0] if self.index < len(self.items) else None

    def next(self) -> str:
        tok = self.peek()
        if tok is None:
            raise InputError("expression ended unexpectedly")
        self.index += 1
        return tok

    def expect(self, tok: str):
        got = self.peek()
        if got != tok:
            col = (self.items[self.index][1] + 1
                   if self.index < len(self.items) else len(self.text) + 1)
            raise InputError(
                f"expression syntax error at column {col}: "
                f"expected {tok!r}, got {got!r}")
        self.index += 1


class ExprEvaluator:
    """Parse and evaluate ideal expressions over a fixed graph and field."""

    def __init__(self, graph: Graph, field: FieldSpec):
        self.graph = graph
        self.field = field

    def evaluate(self, text: str) -> Ideal | bool:
        toks = _Tokens(text)
        left = self._sum(toks)
        op = toks.peek()
        if op in ("<=", "=="):
            toks.next()
            right = self._sum(toks)
            if toks.peek() is not None:
                raise InputError("trailing input after comparison")
            return (ideals.leq(left, right) if op == "<="
                    else ideals.equals(left, right))
        if toks.peek() is not None:
            raise InputError(f"trailing input: {toks.peek()!r}")
        return left

    def evaluate_ideal(self, text: str) -> Ideal:
        value = self.evaluate(text)
        if not isinstance(value, Ideal):
            raise InputError("expected an ideal expression, got a comparison")
        return value

    # -- recursive descent -------------------------------------------------------

    def _sum(self, toks: _Tokens) -> Ideal:
        out = self._product(toks)
        while toks.peek() == "+":
            toks.next()
            out = ideals.add(out, self._product(toks))
        return out

    def _product(self, toks: _Tokens) -> Ideal:
        out = self._meet(toks)
        while toks.peek() == "*":
            toks.next()
            out = ideals.mul(out, self._meet(toks))
        return out

    def _meet(self, toks: _Tokens) -> Ideal:
        out = self._atom(toks)
        while toks.peek() == "&":
            toks.next()
            out = ideals.meet(out, self._atom(toks))
        return out

    def _atom(self, toks: _Tokens) -> Ideal:
        tok = toks.next()
        if tok == "(":
            inner = self._sum(toks)
            toks.expect(")")
            return inner
        if tok == "L":
            return ideals.whole_ring(self.graph)
        if tok == "0":
            return ideals.zero_ideal(self.graph)
        if tok == "I":
            toks.expect("(")
            H = self._vertices(toks, until=";")
            toks.expect(";")
            S = self._vertices(toks, until=")")
            toks.expect(")")
            return ideals.graded_ideal(
                self.graph, lattice.AdmissiblePair.make(H, S))
        if tok == "gen":
            toks.expect("(")
            verts = self._vertices(toks, until=")")
            toks.expect(")")
            H = lattice.hereditary_saturated_closure(self.graph, verts)
            return ideals.graded_ideal(
                self.graph, lattice.AdmissiblePair.make(sorted(H)))
        if tok == "comp":
            toks.expect("(")
            first = toks.next()
            if toks.peek() == ":":
                toks.next()  # the label is decorative
                first = toks.next()
            if first not in self.graph.vertices:
                raise InputError(f"unknown vertex {first!r}")
            chain = [first]
            while toks.peek() == ">":
                toks.next()
                chain.append(self._vertex(toks))
            toks.expect(";")
            poly_text = self._poly_text(toks)
            toks.expect(")")
            cyc = Cycle.from_vertices(chain)
            poly = fieldpoly.parse_poly(poly_text, self.field)
            return ideals.principal_cycle_ideal(self.graph, cyc, poly)
        if tok in ("gr", "rad"):
            toks.expect("(")
            inner = self._sum(toks)
            toks.expect(")")
            return ideals.gr(inner) if tok == "gr" else ideals.radical(inner)
        raise InputError(f"expression syntax error: unexpected {tok!r}")

    def _vertex(self, toks: _Tokens) -> str:
        v = toks.next()
        if v not in self.graph.vertices:
            raise InputError(f"unknown vertex in expression: {v!r}")
        return v

    def _vertices(self, toks: _Tokens, until: str) -> list[str]:
        out = []
        while toks.peek() != until:
            if out:
                toks.expect(",")
            out.append(self._vertex(toks))
        return out

    def _poly_text(self, toks: _Tokens) -> str:
        # re-join tokens up to the closing parenthesis of comp(...)
        parts = []
        depth = 0
        while True:
            tok = toks.peek()
            if tok is None:
                raise InputError("expression ended inside comp(...)")
            if tok == "(":
                depth += 1
            elif tok == ")":
                if depth == 0:
                    break
                depth -= 1
            parts.append(toks.next())
        if not parts:
            raise InputError("comp(...) is missing its polynomial")
        return "".join(parts)
