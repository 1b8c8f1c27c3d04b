"""Finite directed multigraphs with omega multiplicities.

Parallel edges are stored as a single (src, dst) record carrying a
multiplicity, which is either a positive integer or ``OMEGA``.  An
omega edge models a vertex emitting infinitely many edges toward
finitely many distinct targets, which is all the expressive power the
breaking-vertex machinery needs.

Graphs are immutable after construction; derived data (reachability,
cycle lists) is memoised per instance.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from typing import Iterable, Union

from .errors import InputError, UnknownVertexError


class _Omega:
    """Sentinel for an infinite edge multiplicity."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "ω"

    def __reduce__(self):
        return (_Omega, ())


OMEGA = _Omega()

Mult = Union[int, _Omega]


class VertexKind(enum.Enum):
    SINK = "sink"
    REGULAR = "regular"
    INFINITE_EMITTER = "infinite_emitter"


@dataclass(frozen=True, order=True)
class Cycle:
    """A vertex-distinct directed cycle, stored in canonical rotation.

    The vertex tuple starts at the lexicographically least vertex; the
    closing edge (last -> first) is implied.
    """

    vertices: tuple[str, ...]

    @staticmethod
    def from_vertices(vertices: Iterable[str]) -> "Cycle":
        vs = tuple(vertices)
        if not vs:
            raise InputError("a cycle needs at least one vertex")
        if len(set(vs)) != len(vs):
            raise InputError(f"cycle repeats a vertex: {vs}")
        k = vs.index(min(vs))
        return Cycle(vs[k:] + vs[:k])

    def __post_init__(self):
        if self.vertices and self.vertices[0] != min(self.vertices):
            raise InputError(
                f"cycle {self.vertices} is not in canonical rotation; "
                "use Cycle.from_vertices"
            )

    @property
    def vertex_set(self) -> frozenset[str]:
        return frozenset(self.vertices)

    def edges(self) -> list[tuple[str, str]]:
        n = len(self.vertices)
        return [(self.vertices[i], self.vertices[(i + 1) % n]) for i in range(n)]

    def __str__(self):
        return "(" + ">".join(self.vertices) + ")"


class Graph:
    """Finite directed multigraph with multiplicities in Z>=1 or omega."""

    def __init__(self, vertices: Iterable[str], edges: Iterable[tuple[str, str, Mult]]):
        vs = list(vertices)
        if len(set(vs)) != len(vs):
            raise InputError("duplicate vertex identifiers")
        for v in vs:
            if not isinstance(v, str) or not v:
                raise InputError(f"vertex identifiers must be nonempty strings, got {v!r}")
        self.vertices: frozenset[str] = frozenset(vs)
        mults: dict[tuple[str, str], Mult] = {}
        for src, dst, mult in edges:
            if src not in self.vertices:
                raise UnknownVertexError(src)
            if dst not in self.vertices:
                raise UnknownVertexError(dst)
            if (src, dst) in mults:
                raise InputError(f"duplicate edge record {src}->{dst}; "
                                 "aggregate parallels into one multiplicity")
            if mult is not OMEGA and (not isinstance(mult, int) or mult < 1):
                raise InputError(f"edge {src}->{dst} has invalid multiplicity {mult!r}")
            mults[(src, dst)] = mult
        self.edge_mults: dict[tuple[str, str], Mult] = dict(sorted(mults.items()))
        self._out: dict[str, dict[str, Mult]] = {v: {} for v in sorted(self.vertices)}
        for (src, dst), mult in self.edge_mults.items():
            self._out[src][dst] = mult
        self._reach_cache: dict[str, frozenset[str]] | None = None
        self._simple_cycles: list[Cycle] | None = None

    # -- structural identity -------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.vertices == other.vertices and self.edge_mults == other.edge_mults

    def __hash__(self):
        return hash((self.vertices, tuple(self.edge_mults.items())))

    def __repr__(self):
        return f"Graph({sorted(self.vertices)}, {len(self.edge_mults)} edges)"

    # -- basic queries --------------------------------------------------------

    def check_vertex(self, v: str) -> None:
        if v not in self.vertices:
            raise UnknownVertexError(v)

    def out_edges(self, v: str) -> dict[str, Mult]:
        self.check_vertex(v)
        return self._out[v]

    def vertex_kind(self, v: str) -> VertexKind:
        out = self.out_edges(v)
        if not out:
            return VertexKind.SINK
        if any(m is OMEGA for m in out.values()):
            return VertexKind.INFINITE_EMITTER
        return VertexKind.REGULAR

    def out_multiplicity(self, v: str, targets: frozenset[str] | None = None) -> Mult:
        """Total multiplicity of edges from v, optionally restricted to targets."""
        total = 0
        for dst, mult in self.out_edges(v).items():
            if targets is not None and dst not in targets:
                continue
            if mult is OMEGA:
                return OMEGA
            total += mult
        return total

    # -- reachability ----------------------------------------------------------

    def _reachable(self) -> dict[str, frozenset[str]]:
        if self._reach_cache is None:
            cache = {}
            for start in self.vertices:
                seen = {start}
                stack = [start]
                while stack:
                    u = stack.pop()
                    for w in self._out[u]:
                        if w not in seen:
                            seen.add(w)
                            stack.append(w)
                cache[start] = frozenset(seen)
            self._reach_cache = cache
        return self._reach_cache

    def reaches(self, u: str, v: str) -> bool:
        """True iff there is a directed path (length >= 0) from u to v."""
        self.check_vertex(u)
        self.check_vertex(v)
        return v in self._reachable()[u]

    def reachable_from(self, sources: Iterable[str]) -> frozenset[str]:
        out: set[str] = set()
        for v in sources:
            self.check_vertex(v)
            out |= self._reachable()[v]
        return frozenset(out)

    def downward_directed(self, D: Iterable[str]) -> bool:
        """True iff every pair in D has a common vertex of D below it."""
        ds = sorted(set(D))
        for v in ds:
            self.check_vertex(v)
        reach = self._reachable()
        for i, u in enumerate(ds):
            for v in ds[i + 1:]:
                if not any(w in reach[u] and w in reach[v] for w in ds):
                    return False
        return True

    # -- cycles ------------------------------------------------------------------

    def simple_cycles(self) -> list[Cycle]:
        """All vertex-distinct directed cycles, in sorted canonical form."""
        if self._simple_cycles is None:
            order = sorted(self.vertices)
            cycles: set[Cycle] = set()

            def extend(start: str, path: list[str], on_path: set[str]):
                for nxt in self._out[path[-1]]:
                    if nxt == start:
                        cycles.add(Cycle.from_vertices(path))
                    elif nxt > start and nxt not in on_path:
                        on_path.add(nxt)
                        path.append(nxt)
                        extend(start, path, on_path)
                        path.pop()
                        on_path.remove(nxt)

            for start in order:
                extend(start, [start], {start})
            self._simple_cycles = sorted(cycles)
        return list(self._simple_cycles)

    def exitless_cycles(self) -> list[Cycle]:
        """Cycles whose every vertex has total out-multiplicity exactly 1."""
        out = []
        for cyc in self.simple_cycles():
            if all(self.out_multiplicity(v) == 1 for v in cyc.vertices):
                out.append(cyc)
        return out

    def has_cycle(self, cyc: Cycle) -> bool:
        return all(dst in self._out.get(src, {}) for src, dst in cyc.edges())


# -- serialization ------------------------------------------------------------


def _mult_from_json(raw, where: str) -> Mult:
    if raw == "omega":
        return OMEGA
    if isinstance(raw, bool) or not isinstance(raw, int):
        raise InputError(f"{where}: multiplicity must be a positive integer or \"omega\"")
    if raw < 1:
        raise InputError(f"{where}: multiplicity must be >= 1, got {raw}")
    return raw


def graph_from_obj(obj) -> Graph:
    """Build a Graph from a decoded graph-document object."""
    if not isinstance(obj, dict):
        raise InputError("graph document must be a JSON object")
    if "vertices" not in obj:
        raise InputError("graph document is missing \"vertices\"")
    vertices = obj["vertices"]
    if not isinstance(vertices, list):
        raise InputError("\"vertices\" must be a list of strings")
    edges = []
    for i, e in enumerate(obj.get("edges", [])):
        where = f"edges[{i}]"
        if not isinstance(e, dict) or "src" not in e or "dst" not in e:
            raise InputError(f"{where}: expected an object with src/dst/mult")
        edges.append((e["src"], e["dst"], _mult_from_json(e.get("mult", 1), where)))
    return Graph(vertices, edges)


def parse_graph(text: str) -> Graph:
    """Parse the JSON graph document format."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"graph document is not valid JSON: {exc}") from exc
    return graph_from_obj(obj)


def graph_to_obj(g: Graph) -> dict:
    edges = []
    for (src, dst), mult in sorted(g.edge_mults.items()):
        edges.append({"src": src, "dst": dst,
                      "mult": "omega" if mult is OMEGA else mult})
    return {"vertices": sorted(g.vertices), "edges": edges}


def render_graph(g: Graph) -> str:
    return json.dumps(graph_to_obj(g), indent=2)


def export_dot(g: Graph, *, name: str = "E", primed: frozenset[str] = frozenset()) -> str:
    """Render as a DOT digraph; omega edges are labeled with ω."""
    lines = [f"digraph {name} {{"]
    for v in sorted(g.vertices):
        attrs = ' [shape=doublecircle]' if v in primed else ""
        lines.append(f'  "{v}"{attrs};')
    for (src, dst), mult in sorted(g.edge_mults.items()):
        if mult is OMEGA:
            label = ' [label="ω"]'
        elif mult != 1:
            label = f' [label="{mult}"]'
        else:
            label = ""
        lines.append(f'  "{src}" -> "{dst}"{label};')
    lines.append("}")
    return "\n".join(lines) + "\n"
