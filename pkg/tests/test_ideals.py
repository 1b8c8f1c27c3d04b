import json

import pytest

from lpa_ideals import (
    AdmissiblePair,
    CanonicalFormError,
    PreconditionError,
    Cycle,
    FieldSpec,
    add,
    canonicalize,
    checked_op,
    equals,
    exitless_quotient_cycles,
    gr,
    graded_ideal,
    ideal_from_obj,
    ideal_to_json,
    ideal_to_obj,
    leq,
    meet,
    mul,
    mul_power,
    parse_poly,
    principal_cycle_ideal,
    radical,
    whole_ring,
    zero_ideal,
)

F5 = FieldSpec(5)


def poly_ideal(g, text, cycle=None):
    cyc = cycle if cycle is not None else g.exitless_cycles()[0]
    return principal_cycle_ideal(g, cyc, parse_poly(text, F5))


def test_canonicalize_normalizes_polynomials(g1):
    c = Cycle.from_vertices(["v"])
    I = canonicalize(g1, AdmissiblePair.make([]), {c: parse_poly("3x^3+3x^2", F5)})
    assert I.component_map[c] == parse_poly("x+1", F5)


def test_canonicalize_absorbs_units(g1):
    c = Cycle.from_vertices(["v"])
    I = canonicalize(g1, AdmissiblePair.make([]), {c: parse_poly("x", F5)})
    assert I.is_whole()
    assert not I.components


def test_canonicalize_rejects_cycle_with_exit(g2):
    c = Cycle.from_vertices(["u"])
    with pytest.raises(CanonicalFormError):
        canonicalize(g2, AdmissiblePair.make([]), {c: parse_poly("x+1", F5)})


def test_exitless_quotient_cycles(g2):
    assert exitless_quotient_cycles(g2, AdmissiblePair.make([])) == []
    assert exitless_quotient_cycles(g2, AdmissiblePair.make(["v"])) == \
        [Cycle.from_vertices(["u"])]


def test_gr(g1, g3):
    A = poly_ideal(g1, "x+1")
    assert gr(A) == zero_ideal(g1)
    c1 = Cycle.from_vertices(["v1"])
    I = canonicalize(g3, AdmissiblePair.make(["v", "v2"]),
                     {c1: parse_poly("x+1", F5)})
    assert gr(I) == graded_ideal(g3, AdmissiblePair.make(["v", "v2"]))
    W = whole_ring(g3)
    assert gr(W) == W
    assert gr(gr(I)) == gr(I)


def test_is_graded_flags(g1):
    assert zero_ideal(g1).is_graded()
    assert whole_ring(g1).is_graded()
    assert not poly_ideal(g1, "x+1").is_graded()


def test_leq(g1):
    assert leq(poly_ideal(g1, "(x+1)^2"), poly_ideal(g1, "x+1"))
    assert not leq(poly_ideal(g1, "x+1"), poly_ideal(g1, "x+2"))
    A = poly_ideal(g1, "x+1")
    assert leq(A, A)
    assert leq(zero_ideal(g1), A)
    assert leq(A, whole_ring(g1))


def test_add(g1):
    assert add(poly_ideal(g1, "x+1"), poly_ideal(g1, "x+2")).is_whole()
    assert equals(add(poly_ideal(g1, "(x+1)^2"), poly_ideal(g1, "(x+1)(x+2)")),
                  poly_ideal(g1, "x+1"))
    A = poly_ideal(g1, "(x+1)^2")
    assert equals(add(A, A), A)


def test_mul(g1):
    assert equals(mul(poly_ideal(g1, "x+1"), poly_ideal(g1, "x+2")),
                  poly_ideal(g1, "x^2+3x+2"))


def test_mul_meet_foreign_component_dies(g6):
    # a graded ideal away from the cycle annihilates cycle components
    Ih = graded_ideal(g6, AdmissiblePair.make(["h"]))
    fc = poly_ideal(g6, "x+1")
    assert mul(Ih, fc).is_zero()
    assert meet(Ih, fc).is_zero()


def test_meet(g1):
    assert equals(meet(poly_ideal(g1, "x+1"), poly_ideal(g1, "x+2")),
                  poly_ideal(g1, "x^2+3x+2"))
    A = poly_ideal(g1, "(x+1)^2")
    assert equals(meet(A, whole_ring(g1)), A)


def test_equals_normalization(g1):
    c = Cycle.from_vertices(["v"])
    A = canonicalize(g1, AdmissiblePair.make([]), {c: parse_poly("2x+2", F5)})
    assert equals(A, poly_ideal(g1, "x+1"))
    assert not equals(poly_ideal(g1, "x+1"), poly_ideal(g1, "(x+1)^2"))


def test_mul_power(g1):
    A = poly_ideal(g1, "x+1")
    assert equals(mul_power(A, 1), A)
    assert equals(mul_power(A, 3), poly_ideal(g1, "(x+1)^3"))
    with pytest.raises(PreconditionError):
        mul_power(A, 0)


def test_radical(g1, g3):
    assert equals(radical(poly_ideal(g1, "(x+1)^2(x+2)")),
                  poly_ideal(g1, "x^2+3x+2"))
    assert equals(radical(poly_ideal(g1, "(x+1)^3")), poly_ideal(g1, "x+1"))
    G = graded_ideal(g3, AdmissiblePair.make(["v"]))
    assert equals(radical(G), G)


def test_checked_op(g1):
    A = poly_ideal(g1, "x+1")
    B = poly_ideal(g1, "x+2")
    result, report = checked_op("mul", A, B)
    assert equals(result, poly_ideal(g1, "x^2+3x+2"))
    assert report.elapsed_s >= 0


def test_serialization_roundtrip(g1, g4):
    for I in (poly_ideal(g1, "(x+1)^2"), zero_ideal(g1), whole_ring(g1),
              graded_ideal(g4, AdmissiblePair.make(["h"], ["w"]))):
        obj = json.loads(ideal_to_json(I))
        assert equals(ideal_from_obj(I.graph, F5, obj), I)
        assert obj == ideal_to_obj(I)


def test_cross_graph_operations_rejected(g1, g3):
    with pytest.raises(Exception):
        mul(zero_ideal(g1), zero_ideal(g3))
