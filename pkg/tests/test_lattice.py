import itertools

import pytest

from lpa_ideals import (
    AdmissiblePair,
    GuardrailError,
    InputError,
    PreconditionError,
    admissible_pairs,
    breaking_vertices,
    graph_from_obj,
    hereditary_closure,
    hereditary_saturated_sets,
    is_hereditary,
    is_saturated,
    pair_join,
    pair_leq,
    pair_meet,
    quotient_graph,
    saturate,
    validate_pair,
)
from lpa_ideals.lattice import bottom_pair, top_pair


def pair(H, S=()):
    return AdmissiblePair.make(H, S)


def test_hereditary_closure(g1, g3):
    assert hereditary_closure(g3, {"v1"}) == {"v1", "v"}
    assert hereditary_closure(g3, set()) == set()
    assert hereditary_closure(g1, {"v"}) == {"v"}


def test_saturate(g3, g4):
    assert saturate(g3, {"v"}) == {"v"}
    g = graph_from_obj({"vertices": ["u", "h"],
                        "edges": [{"src": "u", "dst": "h", "mult": 1}]})
    assert saturate(g, {"h"}) == {"h", "u"}
    # saturation only ever adds regular vertices
    assert saturate(g4, {"h"}) == {"h"}


def test_saturate_requires_hereditary(g3):
    with pytest.raises(PreconditionError):
        saturate(g3, {"v1"})


def test_hereditary_saturated_sets(g1, g2, g3):
    assert hereditary_saturated_sets(g1) == [frozenset(), frozenset({"v"})]
    assert sorted(map(sorted, hereditary_saturated_sets(g2))) == \
        [[], ["u", "v"], ["v"]]
    assert sorted(map(sorted, hereditary_saturated_sets(g3))) == \
        [[], ["v"], ["v", "v1"], ["v", "v1", "v2"], ["v", "v2"]]


def test_hereditary_saturated_guardrail():
    n = 16
    names = [f"n{i}" for i in range(n)]
    g = graph_from_obj({"vertices": names, "edges": []})
    with pytest.raises(GuardrailError):
        hereditary_saturated_sets(g)


def test_breaking_vertices(g1, g4):
    assert breaking_vertices(g4, {"h"}) == {"w"}
    assert breaking_vertices(g1, set()) == set()
    assert breaking_vertices(g4, set()) == set()


def test_admissible_pairs(g1, g3, g4):
    assert admissible_pairs(g1) == [pair([]), pair(["v"])]
    ps4 = admissible_pairs(g4)
    assert pair(["h"]) in ps4
    assert pair(["h"], ["w"]) in ps4
    assert len(admissible_pairs(g3)) == 5


def test_validate_pair(g3, g4):
    validate_pair(g4, pair(["h"], ["w"]))
    with pytest.raises(PreconditionError):
        validate_pair(g3, pair(["v1"]))  # not hereditary saturated
    with pytest.raises(PreconditionError):
        validate_pair(g4, pair(["h"], ["z"]))  # z is not a breaking vertex


def test_pair_leq(g4):
    assert pair_leq(pair(["h"]), pair(["h"], ["w"]))
    assert not pair_leq(pair(["h"], ["w"]), pair(["h"]))
    for p in admissible_pairs(g4):
        assert pair_leq(p, p)


def test_pair_meet_join(g3):
    assert pair_meet(g3, pair(["v", "v1"]), pair(["v", "v2"])) == pair(["v"])
    assert pair_join(g3, pair(["v", "v1"]), pair(["v", "v2"])) == \
        pair(["v", "v1", "v2"])
    whole = top_pair(g3)
    for p in admissible_pairs(g3):
        assert pair_meet(g3, p, whole) == p
        assert pair_join(g3, p, bottom_pair()) == p


def test_lattice_absorption(all_graphs):
    for g in all_graphs.values():
        for p, q in itertools.product(admissible_pairs(g), repeat=2):
            assert pair_meet(g, p, pair_join(g, p, q)) == p
            assert pair_join(g, p, pair_meet(g, p, q)) == p


def test_quotient_graph_g4(g4):
    q = quotient_graph(g4, pair(["h"]))
    assert q.graph.vertices == {"w", "z", "w'"}
    assert q.graph.edge_mults == {("w", "z"): 1}
    assert q.primed == {"w'"}
    q2 = quotient_graph(g4, pair(["h"], ["w"]))
    assert q2.graph.vertices == {"w", "z"}
    assert q2.graph.edge_mults == {("w", "z"): 1}
    assert q2.primed == frozenset()


def test_quotient_graph_g2(g2):
    q = quotient_graph(g2, pair(["v"]))
    assert q.graph.vertices == {"u"}
    assert q.graph.edge_mults == {("u", "u"): 1}
    assert q.graph.exitless_cycles()  # the loop gained exitlessness


def test_quotient_of_top_is_empty(all_graphs):
    for g in all_graphs.values():
        q = quotient_graph(g, top_pair(g))
        assert not q.graph.vertices


def test_pair_make_normalizes_order():
    assert pair(["b", "a"]) == pair(["a", "b"])
    assert pair(["a", "b"]).H == ("a", "b")
