import pytest

from lpa_ideals import (
    Cycle,
    Graph,
    InputError,
    UnknownVertexError,
    VertexKind,
    export_dot,
    graph_from_obj,
    graph_to_obj,
    parse_graph,
)
from lpa_ideals.graphs import OMEGA


def test_parse_minimal_loop():
    g = graph_from_obj({"vertices": ["v"],
                        "edges": [{"src": "v", "dst": "v", "mult": 1}]})
    assert g.vertices == {"v"}
    assert g.edge_mults == {("v", "v"): 1}


def test_parse_omega_edge():
    g = graph_from_obj({
        "vertices": ["w", "h", "z"],
        "edges": [{"src": "w", "dst": "h", "mult": "omega"},
                  {"src": "w", "dst": "z", "mult": 1}]})
    assert g.vertex_kind("w") is VertexKind.INFINITE_EMITTER


def test_parse_unknown_dst_rejected():
    with pytest.raises(InputError):
        graph_from_obj({"vertices": ["v"],
                        "edges": [{"src": "v", "dst": "missing", "mult": 1}]})


def test_parse_duplicate_edge_pair_rejected():
    with pytest.raises(InputError):
        graph_from_obj({"vertices": ["v"],
                        "edges": [{"src": "v", "dst": "v", "mult": 1},
                                  {"src": "v", "dst": "v", "mult": 2}]})


def test_parse_bad_multiplicity_rejected():
    for bad in (0, -1, "lots", 1.5, True):
        with pytest.raises(InputError):
            graph_from_obj({"vertices": ["v"],
                            "edges": [{"src": "v", "dst": "v", "mult": bad}]})


def test_vertex_kinds(g1, g4):
    assert g1.vertex_kind("v") is VertexKind.REGULAR
    assert g4.vertex_kind("w") is VertexKind.INFINITE_EMITTER
    assert g4.vertex_kind("z") is VertexKind.SINK


def test_reaches_reflexive(all_graphs):
    for g in all_graphs.values():
        for v in g.vertices:
            assert g.reaches(v, v)


def test_reaches_g3(g3):
    assert g3.reaches("v1", "v")
    assert not g3.reaches("v", "v1")


def test_reaches_transitive(all_graphs):
    for g in all_graphs.values():
        for u in g.vertices:
            for v in g.vertices:
                for w in g.vertices:
                    if g.reaches(u, v) and g.reaches(v, w):
                        assert g.reaches(u, w)


def test_simple_cycles(g1, g3, g5):
    assert g1.simple_cycles() == [Cycle.from_vertices(["v"])]
    assert g3.simple_cycles() == [Cycle.from_vertices(["v1"]),
                                  Cycle.from_vertices(["v2"])]
    assert g5.simple_cycles() == [Cycle.from_vertices(["a", "b"])]


def test_simple_cycles_acyclic_path():
    g = graph_from_obj({"vertices": ["a", "b", "c"],
                        "edges": [{"src": "a", "dst": "b", "mult": 1},
                                  {"src": "b", "dst": "c", "mult": 1}]})
    assert g.simple_cycles() == []


def test_exitless_cycles(g1, g2):
    assert g1.exitless_cycles() == [Cycle.from_vertices(["v"])]
    assert g2.exitless_cycles() == []


def test_exitless_cycles_parallel_loop():
    g = graph_from_obj({"vertices": ["v"],
                        "edges": [{"src": "v", "dst": "v", "mult": 2}]})
    assert g.simple_cycles() == [Cycle.from_vertices(["v"])]
    assert g.exitless_cycles() == []


def test_downward_directed(g3):
    assert g3.downward_directed({"v", "v1", "v2"})
    assert not g3.downward_directed({"v1", "v2"})
    assert g3.downward_directed({"v1"})


def test_cycle_canonical_rotation():
    assert Cycle.from_vertices(["b", "a"]) == Cycle.from_vertices(["a", "b"])
    with pytest.raises(InputError):
        Cycle.from_vertices(["a", "a"])
    with pytest.raises(InputError):
        Cycle.from_vertices([])


def test_export_dot(g1, g4):
    dot1 = export_dot(g1)
    assert dot1.startswith("digraph")
    assert '"v" -> "v"' in dot1
    assert 'label="ω"' in export_dot(g4)
    assert export_dot(Graph([], [])).splitlines() == ["digraph E {", "}"]


def test_roundtrip_serialization(all_graphs):
    for g in all_graphs.values():
        assert graph_from_obj(graph_to_obj(g)) == g


def test_parse_graph_rejects_junk():
    with pytest.raises(InputError):
        parse_graph("not json")
    with pytest.raises(InputError):
        parse_graph("[1,2]")


def test_omega_is_singleton_and_unorderable():
    assert OMEGA is OMEGA
    assert str(OMEGA) == "omega" or "ω" in str(OMEGA) or repr(OMEGA)
