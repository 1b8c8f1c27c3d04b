"""Canonical two-sided ideals and their exact arithmetic.

An ideal is a graded part (an admissible pair) plus a finite map from
exitless quotient cycles to Laurent-normalized polynomials of degree at
least one.  The graded part is the largest graded ideal inside the
ideal; a polynomial that normalizes to 1 means the cycle's vertices
belong to the ideal, which canonicalization absorbs into the graded
part.

The product and intersection rules combine four cases per cycle:

* both operands carry the cycle: multiply (resp. lcm) the polynomials;
* one operand carries it and its vertices lie inside the other's H:
  the component sits inside a graded ideal and survives unchanged;
* otherwise the component dies: a graded ideal meeting a foreign
  exitless-cycle component trivially, the two parts annihilate.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass
from typing import Mapping

from . import fieldpoly, lattice
from .errors import CanonicalFormError, PreconditionError
from .fieldpoly import FieldPoly, FieldSpec
from .graphs import Cycle, Graph
from .lattice import AdmissiblePair


@dataclass(frozen=True)
class Ideal:
    """Canonical form: graded part plus cycle-to-polynomial components."""

    graph: Graph
    pair: AdmissiblePair
    components: tuple[tuple[Cycle, FieldPoly], ...]

    @property
    def component_map(self) -> dict[Cycle, FieldPoly]:
        return dict(self.components)

    def is_graded(self) -> bool:
        return not self.components

    def is_zero(self) -> bool:
        return not self.components and not self.pair.H and not self.pair.S

    def is_whole(self) -> bool:
        return not self.components and self.pair.H_set == self.graph.vertices

    def __str__(self):
        if self.is_zero():
            return "0"
        if self.is_whole():
            return "L"
        parts = [f"I{self.pair}"]
        for cyc, poly in self.components:
            parts.append(f"<{poly}({cyc})>")
        return "+".join(parts)


def _require_same_graph(A: Ideal, B: Ideal) -> None:
    if A.graph != B.graph:
        raise PreconditionError("ideals live over different graphs")


def exitless_quotient_cycles(g: Graph, pair: AdmissiblePair) -> list[Cycle]:
    """Exitless cycles of the quotient graph, as cycles of the base graph.

    Cycle vertices never include primed copies (those are sinks), so the
    quotient's exitless cycles are literally base-graph cycles.
    """
    q = lattice.quotient_graph(g, pair)
    return [c for c in q.graph.exitless_cycles()
            if not c.vertex_set & q.primed]


def canonicalize(g: Graph, pair: AdmissiblePair,
                 raw: Mapping[Cycle, FieldPoly]) -> Ideal:
    """Normalize (pair, components) to the canonical ideal it denotes.

    Fixed point: Laurent-normalize every polynomial, drop components
    swallowed by H, and absorb any unit polynomial by joining the
    hereditary saturated closure of its cycle into the graded part.
    Each absorption strictly enlarges H, so this terminates.
    """
    lattice.validate_pair(g, pair)
    components: dict[Cycle, FieldPoly] = {}
    for cyc, poly in raw.items():
        if not g.has_cycle(cyc):
            raise CanonicalFormError(f"{cyc} is not a cycle of the graph")
        components[cyc] = fieldpoly.laurent_normalize(poly)
    while True:
        H = pair.H_set
        components = {c: f for c, f in components.items()
                      if not c.vertex_set <= H}
        for cyc, poly in components.items():
            if cyc.vertex_set & H:
                raise CanonicalFormError(
                    f"cycle {cyc} straddles the hereditary set {sorted(H)}")
        unit_cycles = [c for c, f in components.items() if f.is_one()]
        if not unit_cycles:
            break
        closure = lattice.hereditary_saturated_closure(g, unit_cycles[0].vertices)
        absorbed = AdmissiblePair.make(sorted(closure))
        pair = lattice.pair_join(g, pair, absorbed)
        del components[unit_cycles[0]]
    allowed = set(exitless_quotient_cycles(g, pair))
    for cyc in components:
        if cyc not in allowed:
            raise CanonicalFormError(
                f"cycle {cyc} has an exit in the quotient by {pair}; "
                "input does not denote a canonical ideal")
    seen: set[str] = set()
    for cyc in components:
        if seen & cyc.vertex_set:
            raise AssertionError("component cycles are not vertex-disjoint")
        seen |= cyc.vertex_set
    return Ideal(g, pair, tuple(sorted(components.items())))


def graded_ideal(g: Graph, pair: AdmissiblePair) -> Ideal:
    lattice.validate_pair(g, pair)
    return Ideal(g, pair, ())


def zero_ideal(g: Graph) -> Ideal:
    return Ideal(g, lattice.bottom_pair(), ())


def whole_ring(g: Graph) -> Ideal:
    return Ideal(g, lattice.top_pair(g), ())


def principal_cycle_ideal(g: Graph, cyc: Cycle, poly: FieldPoly) -> Ideal:
    """The ideal generated by poly evaluated at an exitless cycle."""
    return canonicalize(g, lattice.bottom_pair(), {cyc: poly})


def gr(I: Ideal) -> Ideal:
    """The largest graded ideal inside I."""
    return Ideal(I.graph, I.pair, ())


def is_graded(I: Ideal) -> bool:
    return I.is_graded()


def equals(A: Ideal, B: Ideal) -> bool:
    _require_same_graph(A, B)
    return A.pair == B.pair and A.components == B.components


def leq(A: Ideal, B: Ideal) -> bool:
    """Containment A <= B of canonical ideals."""
    _require_same_graph(A, B)
    if not lattice.pair_leq(A.pair, B.pair):
        return False
    b_components = B.component_map
    for cyc, f in A.components:
        if cyc.vertex_set <= B.pair.H_set:
            continue
        g_poly = b_components.get(cyc)
        if g_poly is None or not g_poly.divides(f):
            return False
    return True


def add(A: Ideal, B: Ideal) -> Ideal:
    """Ideal sum; matching cycle components combine by gcd."""
    _require_same_graph(A, B)
    pair = lattice.pair_join(A.graph, A.pair, B.pair)
    a_map, b_map = A.component_map, B.component_map
    raw: dict[Cycle, FieldPoly] = {}
    for cyc in set(a_map) | set(b_map):
        if cyc.vertex_set <= pair.H_set:
            continue
        if cyc in a_map and cyc in b_map:
            raw[cyc] = fieldpoly.poly_gcd(a_map[cyc], b_map[cyc])
        else:
            raw[cyc] = a_map.get(cyc, b_map.get(cyc))
    return canonicalize(A.graph, pair, raw)


def _combine(A: Ideal, B: Ideal, matched) -> Ideal:
    pair = lattice.pair_meet(A.graph, A.pair, B.pair)
    a_map, b_map = A.component_map, B.component_map
    raw: dict[Cycle, FieldPoly] = {}
    for cyc in set(a_map) | set(b_map):
        if cyc in a_map and cyc in b_map:
            raw[cyc] = matched(a_map[cyc], b_map[cyc])
        elif cyc in a_map and cyc.vertex_set <= B.pair.H_set:
            raw[cyc] = a_map[cyc]
        elif cyc in b_map and cyc.vertex_set <= A.pair.H_set:
            raw[cyc] = b_map[cyc]
        # otherwise the component dies
    return canonicalize(A.graph, pair, raw)


def mul(A: Ideal, B: Ideal) -> Ideal:
    """Ideal product in canonical form."""
    _require_same_graph(A, B)
    return _combine(A, B, lambda f, g: f * g)


def meet(A: Ideal, B: Ideal) -> Ideal:
    """Ideal intersection in canonical form."""
    _require_same_graph(A, B)
    return _combine(A, B, fieldpoly.poly_lcm)


def mul_power(A: Ideal, n: int) -> Ideal:
    if n < 1:
        raise PreconditionError("ideal powers need n >= 1")
    out = A
    for _ in range(n - 1):
        out = mul(out, A)
    return out


def radical(I: Ideal) -> Ideal:
    """Replace each component polynomial by its squarefree part.

    The graded part is untouched: graded ideals are their own radical,
    and the radical of an ideal has the same graded part.
    """
    raw = {cyc: fieldpoly.squarefree_part(f) for cyc, f in I.components}
    return canonicalize(I.graph, I.pair, raw)


# -- reporting wrapper -----------------------------------------------------------


@dataclass(frozen=True)
class IdealOpReport:
    """Result of a checked binary operation plus the laws verified en route."""

    op: str
    inputs: tuple[str, str]
    output: str
    checks: tuple[str, ...]
    elapsed_s: float


def checked_op(op: str, A: Ideal, B: Ideal) -> tuple[Ideal, IdealOpReport]:
    """Run add/mul/meet and cross-check the cheap lattice laws."""
    started = time.perf_counter()
    fns = {"add": add, "mul": mul, "meet": meet}
    result = fns[op](A, B)
    checks = []
    if op == "mul":
        if not equals(result, mul(B, A)):
            raise AssertionError("product is not commutative")
        checks.append("commutativity")
        if not leq(result, meet(A, B)):
            raise AssertionError("product is not below the intersection")
        checks.append("product<=meet")
    elif op == "meet":
        if not (leq(result, A) and leq(result, B)):
            raise AssertionError("intersection is not a lower bound")
        checks.append("lower-bound")
    elif op == "add":
        if not (leq(A, result) and leq(B, result)):
            raise AssertionError("sum is not an upper bound")
        checks.append("upper-bound")
    elapsed = time.perf_counter() - started
    return result, IdealOpReport(op, (str(A), str(B)), str(result),
                                 tuple(checks), elapsed)


# -- serialization -----------------------------------------------------------------


def ideal_to_obj(I: Ideal) -> dict:
    return {
        "H": list(I.pair.H),
        "S": list(I.pair.S),
        "components": [
            {"cycle": list(cyc.vertices), "poly": str(poly)}
            for cyc, poly in I.components
        ],
    }


def ideal_from_obj(g: Graph, field: FieldSpec, obj: dict) -> Ideal:
    pair = AdmissiblePair.make(obj.get("H", []), obj.get("S", []))
    raw = {}
    for comp in obj.get("components", []):
        cyc = Cycle.from_vertices(comp["cycle"])
        raw[cyc] = fieldpoly.parse_poly(comp["poly"], field)
    return canonicalize(g, pair, raw)


def ideal_to_json(I: Ideal) -> str:
    return json.dumps(ideal_to_obj(I), indent=2)
