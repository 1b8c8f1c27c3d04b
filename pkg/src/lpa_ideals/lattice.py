"""Hereditary saturated sets, admissible pairs, and quotient graphs.

An admissible pair (H, S) with H hereditary saturated and S a subset of
the breaking vertices B_H names a graded ideal I(H, S).  The pairs of a
finite graph form a finite lattice; meet and join are found by brute
force over the enumerated lattice, which is exact and self-checking at
the vertex counts this package accepts.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import GuardrailError, PreconditionError, UnknownVertexError
from .graphs import Graph, OMEGA, VertexKind

MAX_ENUMERATION_VERTICES = 15

PRIME_SUFFIX = "'"


@dataclass(frozen=True, order=True)
class AdmissiblePair:
    """(H, S): hereditary saturated H plus S inside B_H, as sorted tuples."""

    H: tuple[str, ...]
    S: tuple[str, ...]

    @staticmethod
    def make(H, S=()) -> "AdmissiblePair":
        return AdmissiblePair(tuple(sorted(set(H))), tuple(sorted(set(S))))

    @property
    def H_set(self) -> frozenset[str]:
        return frozenset(self.H)

    @property
    def S_set(self) -> frozenset[str]:
        return frozenset(self.S)

    def __str__(self):
        h = "{" + ",".join(self.H) + "}"
        s = "{" + ",".join(self.S) + "}"
        return f"({h};{s})"


@dataclass(frozen=True)
class QuotientGraph:
    """The quotient graph E\\(H,S); primed sink copies are tagged."""

    graph: Graph
    primed: frozenset[str]


# -- hereditary saturated machinery ---------------------------------------------


def is_hereditary(g: Graph, H: frozenset[str]) -> bool:
    return all(g.reachable_from([v]) <= H for v in H)


def is_saturated(g: Graph, H: frozenset[str]) -> bool:
    for v in g.vertices - H:
        if g.vertex_kind(v) is VertexKind.REGULAR and set(g.out_edges(v)) <= H:
            return False
    return True


def hereditary_closure(g: Graph, X) -> frozenset[str]:
    """All vertices reachable from X, including X itself."""
    return g.reachable_from(X)


def saturate(g: Graph, H) -> frozenset[str]:
    """Least saturated superset of a hereditary H.

    Only regular vertices are ever added; sinks and infinite emitters do
    not participate in saturation.
    """
    current = frozenset(H)
    for v in current:
        g.check_vertex(v)
    if not is_hereditary(g, current):
        raise PreconditionError(f"{sorted(current)} is not hereditary")
    changed = True
    while changed:
        changed = False
        for v in g.vertices - current:
            if (g.vertex_kind(v) is VertexKind.REGULAR
                    and set(g.out_edges(v)) <= current):
                current = current | {v}
                changed = True
    return current


def hereditary_saturated_closure(g: Graph, X) -> frozenset[str]:
    return saturate(g, hereditary_closure(g, X))


def hereditary_saturated_sets(g: Graph) -> list[frozenset[str]]:
    """All hereditary saturated subsets of E^0, sorted.

    Enumerates by closing every vertex subset; graphs beyond
    MAX_ENUMERATION_VERTICES vertices are refused.
    """
    verts = sorted(g.vertices)
    if len(verts) > MAX_ENUMERATION_VERTICES:
        raise GuardrailError(
            f"graph has {len(verts)} vertices; lattice enumeration is "
            f"limited to {MAX_ENUMERATION_VERTICES}")
    found = set()
    for r in range(len(verts) + 1):
        for combo in combinations(verts, r):
            found.add(hereditary_saturated_closure(g, combo))
    return sorted(found, key=lambda s: (len(s), sorted(s)))


def breaking_vertices(g: Graph, H) -> frozenset[str]:
    """Infinite emitters outside H with finite nonzero multiplicity out of H."""
    H = frozenset(H)
    for v in H:
        g.check_vertex(v)
    if not is_hereditary(g, H) or not is_saturated(g, H):
        raise PreconditionError(f"{sorted(H)} is not hereditary saturated")
    out = set()
    for w in g.vertices - H:
        if g.vertex_kind(w) is not VertexKind.INFINITE_EMITTER:
            continue
        escape = g.out_multiplicity(w, targets=g.vertices - H)
        if escape is not OMEGA and escape > 0:
            out.add(w)
    return frozenset(out)


def validate_pair(g: Graph, pair: AdmissiblePair) -> None:
    for v in pair.H + pair.S:
        g.check_vertex(v)
    if not is_hereditary(g, pair.H_set) or not is_saturated(g, pair.H_set):
        raise PreconditionError(f"H={sorted(pair.H)} is not hereditary saturated")
    if not pair.S_set <= breaking_vertices(g, pair.H_set):
        raise PreconditionError(f"S={sorted(pair.S)} is not a subset of B_H")


def admissible_pairs(g: Graph) -> list[AdmissiblePair]:
    """All admissible pairs of g, in deterministic sorted order."""
    return _lattice(g).pairs


def pair_leq(p1: AdmissiblePair, p2: AdmissiblePair) -> bool:
    """Containment order on graded ideals: H1 <= H2 and S1 <= H2 + S2."""
    return p1.H_set <= p2.H_set and p1.S_set <= (p2.H_set | p2.S_set)


def pair_meet(g: Graph, p1: AdmissiblePair, p2: AdmissiblePair) -> AdmissiblePair:
    return _lattice(g).meet(p1, p2)


def pair_join(g: Graph, p1: AdmissiblePair, p2: AdmissiblePair) -> AdmissiblePair:
    return _lattice(g).join(p1, p2)


def top_pair(g: Graph) -> AdmissiblePair:
    return AdmissiblePair.make(sorted(g.vertices))


def bottom_pair() -> AdmissiblePair:
    return AdmissiblePair.make(())


class _Lattice:
    """Per-graph memo of the admissible-pair lattice and its meet/join tables."""

    def __init__(self, g: Graph):
        self.graph = g
        pairs = []
        for H in hereditary_saturated_sets(g):
            bh = sorted(breaking_vertices(g, H))
            for r in range(len(bh) + 1):
                for S in combinations(bh, r):
                    pairs.append(AdmissiblePair.make(sorted(H), S))
        self.pairs = sorted(pairs)
        self._meet: dict[tuple[AdmissiblePair, AdmissiblePair], AdmissiblePair] = {}
        self._join: dict[tuple[AdmissiblePair, AdmissiblePair], AdmissiblePair] = {}

    def _extremum(self, candidates: list[AdmissiblePair], kind: str) -> AdmissiblePair:
        if kind == "max":
            extremes = [c for c in candidates
                        if all(pair_leq(other, c) for other in candidates)]
        else:
            extremes = [c for c in candidates
                        if all(pair_leq(c, other) for other in candidates)]
        if len(extremes) != 1:
            raise AssertionError(
                f"admissible-pair order has no unique {kind} among "
                f"{len(candidates)} candidates; order definition is buggy")
        return extremes[0]

    def meet(self, p1: AdmissiblePair, p2: AdmissiblePair) -> AdmissiblePair:
        key = (p1, p2) if p1 <= p2 else (p2, p1)
        if key not in self._meet:
            below = [q for q in self.pairs if pair_leq(q, p1) and pair_leq(q, p2)]
            self._meet[key] = self._extremum(below, "max")
        return self._meet[key]

    def join(self, p1: AdmissiblePair, p2: AdmissiblePair) -> AdmissiblePair:
        key = (p1, p2) if p1 <= p2 else (p2, p1)
        if key not in self._join:
            above = [q for q in self.pairs if pair_leq(p1, q) and pair_leq(p2, q)]
            self._join[key] = self._extremum(above, "min")
        return self._join[key]


_lattice_cache: dict[int, _Lattice] = {}


def _lattice(g: Graph) -> _Lattice:
    # Keyed by object identity; Graph is immutable so this is safe, and
    # equal-but-distinct graphs simply build their own memo.
    memo = _lattice_cache.get(id(g))
    if memo is None or memo.graph is not g:
        memo = _Lattice(g)
        _lattice_cache[id(g)] = memo
    return memo


# -- quotient graph ---------------------------------------------------------------


def primed_name(v: str) -> str:
    return v + PRIME_SUFFIX


def quotient_graph(g: Graph, pair: AdmissiblePair) -> QuotientGraph:
    """Build E\\(H,S): primed sink copies stand in for B_H \\ S."""
    validate_pair(g, pair)
    H = pair.H_set
    unresolved = breaking_vertices(g, H) - pair.S_set
    vertices = sorted(g.vertices - H)
    primed = frozenset(primed_name(v) for v in unresolved)
    for pv in primed:
        if pv in g.vertices:
            raise PreconditionError(
                f"vertex name {pv!r} collides with a primed copy")
    edges = []
    for (src, dst), mult in g.edge_mults.items():
        if dst in H:
            continue
        edges.append((src, dst, mult))
        if dst in unresolved:
            edges.append((src, primed_name(dst), mult))
    return QuotientGraph(Graph(vertices + sorted(primed), edges), primed)
