import pytest

from lpa_ideals import (
    AdmissiblePair,
    CanonicalFormError,
    ExprEvaluator,
    FieldSpec,
    InputError,
    equals,
    graded_ideal,
    parse_poly,
    principal_cycle_ideal,
    whole_ring,
    zero_ideal,
)

F5 = FieldSpec(5)


@pytest.fixture
def ev1(g1):
    return ExprEvaluator(g1, F5)


@pytest.fixture
def ev3(g3):
    return ExprEvaluator(g3, F5)


def poly_ideal(g, text):
    return principal_cycle_ideal(g, g.exitless_cycles()[0], parse_poly(text, F5))


def test_component_product(g1, ev1):
    got = ev1.evaluate("comp(c: v; x+1) * comp(c: v; x+2)")
    assert equals(got, poly_ideal(g1, "x^2+3x+2"))


def test_gen_meet(g3, ev3):
    got = ev3.evaluate("gen(v1) & gen(v2)")
    assert equals(got, graded_ideal(g3, AdmissiblePair.make(["v"])))


def test_gr_drops_components(g1, ev1):
    assert ev1.evaluate("gr(comp(c: v; x+1))").is_zero()


def test_rad(g1, ev1):
    assert ev1.evaluate("rad(comp(v; (x+1)^2)) == comp(v; x+1)") is True


def test_literals(g1, ev1):
    assert ev1.evaluate("L").is_whole()
    assert ev1.evaluate("0").is_zero()
    assert equals(ev1.evaluate("I(v;)"), whole_ring(g1))
    assert equals(ev1.evaluate("I(;)"), zero_ideal(g1))


def test_pair_literal_with_s(g4):
    ev = ExprEvaluator(g4, F5)
    got = ev.evaluate("I(h; w)")
    assert equals(got, graded_ideal(g4, AdmissiblePair.make(["h"], ["w"])))


def test_comparisons(ev1):
    assert ev1.evaluate("comp(v; (x+1)^2) <= comp(v; x+1)") is True
    assert ev1.evaluate("comp(v; x+1) <= comp(v; x+2)") is False
    assert ev1.evaluate("comp(v; x+1) == comp(v; x+1)") is True


def test_precedence(g1, ev1):
    # & binds tighter than *, which binds tighter than +
    got = ev1.evaluate("0 + comp(v; x+1) * comp(v; x+1) & comp(v; (x+1)^3)")
    assert equals(got, poly_ideal(g1, "(x+1)^4"))
    with_parens = ev1.evaluate("(0 + comp(v; x+1)) * comp(v; x+1)")
    assert equals(with_parens, poly_ideal(g1, "(x+1)^2"))


def test_multi_vertex_cycle(g5):
    ev = ExprEvaluator(g5, F5)
    I = ev.evaluate("comp(a>b; x+1)")
    assert len(I.components) == 1
    # rotation is canonicalized, so both spellings name the same cycle
    assert ev.evaluate("comp(b>a; x+1) == comp(a>b; x+1)") is True


def test_referential_transparency(ev1):
    first = ev1.evaluate("comp(v; (x+1)^2) + comp(v; (x+1)(x+2))")
    second = ev1.evaluate("comp(v; (x+1)^2) + comp(v; (x+1)(x+2))")
    assert equals(first, second)


def test_errors(ev1, ev3):
    with pytest.raises(InputError):
        ev1.evaluate("comp(nope; x+1)")
    with pytest.raises(InputError):
        ev1.evaluate("comp(v; x+1) +")
    with pytest.raises(InputError):
        ev1.evaluate("comp(v; x+1) <= comp(v; x+1) <= L")
    with pytest.raises(InputError):
        ev1.evaluate("I(v")
    with pytest.raises(CanonicalFormError):
        ev3.evaluate("comp(v; x+1)")  # v carries no cycle on G3
    with pytest.raises(InputError):
        ev1.evaluate("comp(v; )")
    with pytest.raises(InputError):
        ev1.evaluate("@")


def test_evaluate_ideal_rejects_comparison(ev1):
    with pytest.raises(InputError):
        ev1.evaluate_ideal("L == L")
