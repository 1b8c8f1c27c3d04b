import random

import pytest

from lpa_ideals import (
    FieldSpec,
    check_laws,
    gr,
    mul,
    random_graph,
    random_ideal,
)
from lpa_ideals.fieldpoly import irreducibles
from lpa_ideals.laws import shrink

F5 = FieldSpec(5)


def test_laws_pass_on_g3(g3):
    report = check_laws(g3, seed=1, trials=100)
    assert report.ok, report.to_obj()["counterexamples"]


def test_laws_pass_on_g1(g1):
    report = check_laws(g1, seed=7, trials=100)
    assert report.ok, report.to_obj()["counterexamples"]


def test_corrupted_mul_is_caught(g1):
    def bad_mul(A, B):
        return gr(mul(A, B))  # drops every cycle component

    report = check_laws(g1, seed=3, trials=30, mul_override=bad_mul)
    assert not report.ok
    assert report.to_obj()["counterexamples"]


def test_reports_are_reproducible(g2):
    a = check_laws(g2, seed=11, trials=20).to_obj()
    b = check_laws(g2, seed=11, trials=20).to_obj()
    assert a == b


def test_trials_precondition(g1):
    with pytest.raises(ValueError):
        check_laws(g1, seed=0, trials=0)


def test_random_graph_respects_bounds():
    rng = random.Random(5)
    for _ in range(50):
        g = random_graph(rng, max_vertices=8)
        assert 1 <= len(g.vertices) <= 8


def test_random_ideal_is_canonical(g1, g6):
    rng = random.Random(9)
    irr = irreducibles(F5, 2)
    for g in (g1, g6):
        for _ in range(30):
            I = random_ideal(rng, g, F5, irr)
            for cyc, poly in I.components:
                assert poly.is_laurent_normal()
                assert poly.degree >= 1


def test_shrink_finds_smaller_counterexample(g1):
    rng = random.Random(2)
    irr = irreducibles(F5, 2)
    A = random_ideal(rng, g1, F5, irr)

    def failing(x):
        return bool(x.components)  # fails exactly on non-graded ideals

    while not A.components:
        A = random_ideal(rng, g1, F5, irr)
    (small,) = shrink(failing, A)
    assert small.components
    assert sum(p.degree for _, p in small.components) <= \
        sum(p.degree for _, p in A.components)


def test_skips_never_count_as_passes(g6):
    # G6 has graded ideals with infinite up-sets: oracle laws must be
    # reported as skips there, not as silent passes
    report = check_laws(g6, seed=4, trials=40)
    assert report.ok
    obj = report.to_obj()
    oracle_laws = [name for name in obj["laws"]
                   if "oracle" in name or "meet-of-primes" in name]
    assert any(obj["laws"][name]["skip"] > 0 for name in oracle_laws)
