"""Randomized law checking for the ideal calculus.

Each trial draws three random canonical ideals over a graph and asserts
the structure laws: commutativity and associativity of the product,
distributivity of the lattice, product below intersection, the graded
characterizations, the primary/irreducible equivalences against the
brute-force oracle, radical and factorization round trips, and the
multiplication-ring witness.  Oracles that need up-set enumeration are
skipped (and counted as such) when the up-set is infinite or over
budget.

Failures carry a greedily shrunk counterexample: components are
dropped, polynomials shrunk to single factors, and the graded part
shrunk toward the zero pair, as long as the law keeps failing.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field

from . import classify, fieldpoly, ideals, lattice
from .errors import GuardrailError
from .fieldpoly import FieldPoly, FieldSpec
from .graphs import Graph, OMEGA
from .ideals import Ideal

DEFAULT_FIELD = FieldSpec(5)


# -- random generation -----------------------------------------------------------


def random_graph(rng: random.Random, max_vertices: int = 8,
                 allow_omega: bool = True) -> Graph:
    """Random DAG skeleton plus random loops and optional omega edges."""
    n = rng.randint(1, max_vertices)
    names = [f"v{i}" for i in range(n)]
    edges = {}
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < 0.3:
                edges[(names[i], names[j])] = rng.choice([1, 1, 1, 2])
    for i in range(n):
        if rng.random() < 0.4:
            edges[(names[i], names[i])] = 1
    if allow_omega and n >= 2 and rng.random() < 0.3:
        src = rng.choice(names[:-1])
        dsts = [d for d in names if d != src]
        edges[(src, rng.choice(dsts))] = OMEGA
    return Graph(names, [(s, d, m) for (s, d), m in edges.items()])


def _random_poly(rng: random.Random, irreducibles: list[FieldPoly],
                 field: FieldSpec) -> FieldPoly:
    # product of random irreducible factors, total degree capped at 4
    poly = FieldPoly.one(field)
    for _ in range(rng.randint(1, 3)):
        q = rng.choice(irreducibles)
        if poly.degree + q.degree > 4:
            break
        poly = poly * q
    if poly.is_one():
        poly = rng.choice([q for q in irreducibles if q.degree == 1])
    return poly


def random_ideal(rng: random.Random, g: Graph,
                 field: FieldSpec = DEFAULT_FIELD,
                 irreducibles: list[FieldPoly] | None = None) -> Ideal:
    if irreducibles is None:
        irreducibles = fieldpoly.irreducibles(field, 2)
    pairs = lattice.admissible_pairs(g)
    pair = rng.choice(pairs)
    raw = {}
    for cyc in ideals.exitless_quotient_cycles(g, pair):
        if rng.random() < 0.6:
            raw[cyc] = _random_poly(rng, irreducibles, field)
    return ideals.canonicalize(g, pair, raw)


# -- shrinking ------------------------------------------------------------------------


def _shrink_candidates(I: Ideal):
    g = I.graph
    for k in range(len(I.components)):
        rest = dict(I.components[:k] + I.components[k + 1:])
        yield ideals.canonicalize(g, I.pair, rest)
    for k, (cyc, poly) in enumerate(I.components):
        for q, _ in fieldpoly.factor(poly):
            if q != poly:
                smaller = dict(I.components)
                smaller[cyc] = q
                yield ideals.canonicalize(g, I.pair, smaller)
    if I.pair.H or I.pair.S:
        try:
            yield ideals.canonicalize(g, lattice.bottom_pair(), dict(I.components))
        except Exception:
            pass


def shrink(failing, *ideal_args: Ideal) -> tuple[Ideal, ...]:
    """Greedy shrink: keep any single-ideal replacement that still fails."""
    current = list(ideal_args)
    improved = True
    while improved:
        improved = False
        for i, I in enumerate(current):
            for candidate in _shrink_candidates(I):
                trial = current[:i] + [candidate] + current[i + 1:]
                try:
                    still_failing = failing(*trial)
                except Exception:
                    still_failing = False
                if still_failing:
                    current = trial
                    improved = True
                    break
            if improved:
                break
    return tuple(current)


# -- the law suite ------------------------------------------------------------------


@dataclass
class LawReport:
    graph: Graph
    seed: int
    trials: int
    passes: dict[str, int] = field(default_factory=dict)
    failures: dict[str, int] = field(default_factory=dict)
    skips: dict[str, int] = field(default_factory=dict)
    counterexamples: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def _record(self, law: str, outcome: str):
        bucket = {"pass": self.passes, "fail": self.failures,
                  "skip": self.skips}[outcome]
        bucket[law] = bucket.get(law, 0) + 1

    def to_obj(self) -> dict:
        laws = sorted(set(self.passes) | set(self.failures) | set(self.skips))
        return {
            "seed": self.seed,
            "trials": self.trials,
            "ok": self.ok,
            "laws": {
                law: {"pass": self.passes.get(law, 0),
                      "fail": self.failures.get(law, 0),
                      "skip": self.skips.get(law, 0)}
                for law in laws
            },
            "counterexamples": self.counterexamples,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_obj(), indent=2)


def _law(report: LawReport, name: str, predicate, *args: Ideal):
    """Evaluate a law; on failure, shrink the arguments and record them."""
    try:
        holds = predicate(*args)
    except GuardrailError:
        report._record(name, "skip")
        return
    if holds:
        report._record(name, "pass")
        return
    def failing(*xs):
        return not predicate(*xs)
    small = shrink(failing, *args)
    report._record(name, "fail")
    report.counterexamples.append({
        "law": name,
        "ideals": [str(x) for x in small],
    })


def check_laws(g: Graph, seed: int, trials: int,
               field: FieldSpec = DEFAULT_FIELD,
               enumeration_bound: int = classify.DEFAULT_ENUMERATION_BOUND,
               mul_override=None) -> LawReport:
    """Run the randomized law suite; mul_override is a mutation-testing hook."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    report = LawReport(g, seed, trials)
    irr = fieldpoly.irreducibles(field, 2)
    mul = mul_override if mul_override is not None else ideals.mul
    whole = ideals.whole_ring(g)
    for trial in range(trials):
        # split a per-trial stream from the seed so results are stable
        rng = random.Random(seed * 1_000_003 + trial)
        A = random_ideal(rng, g, field, irr)
        B = random_ideal(rng, g, field, irr)
        C = random_ideal(rng, g, field, irr)

        _law(report, "commutativity",
             lambda a, b: ideals.equals(mul(a, b), mul(b, a)), A, B)
        _law(report, "associativity",
             lambda a, b, c: ideals.equals(mul(mul(a, b), c), mul(a, mul(b, c))),
             A, B, C)
        _law(report, "distributivity",
             lambda a, b, c: ideals.equals(
                 ideals.meet(a, ideals.add(b, c)),
                 ideals.add(ideals.meet(a, b), ideals.meet(a, c))),
             A, B, C)
        _law(report, "product<=meet",
             lambda a, b: ideals.leq(mul(a, b), ideals.meet(a, b)), A, B)
        _law(report, "graded-product-is-meet",
             lambda a, b: not a.is_graded()
             or ideals.equals(mul(a, b), ideals.meet(a, b)), A, B)
        _law(report, "graded-iff-idempotent",
             lambda a: ideals.equals(mul(a, a), a) == a.is_graded(), A)
        _law(report, "lattice-consistency",
             lambda a, b: (ideals.leq(a, b)
                           == ideals.equals(ideals.add(a, b), b)
                           == ideals.equals(ideals.meet(a, b), a)), A, B)
        _law(report, "modular-law",
             lambda a, b, c: _modular(a, b, c), A, B, C)
        _law(report, "comaximal-product",
             lambda a, b: not ideals.equals(ideals.add(a, b), whole)
             or ideals.equals(mul(a, b), ideals.meet(a, b)), A, B)
        _law(report, "radical-idempotent",
             lambda a: ideals.equals(ideals.radical(ideals.radical(a)),
                                     ideals.radical(a)), A)
        _law(report, "ideal<=radical",
             lambda a: ideals.leq(a, ideals.radical(a)), A)

        if not A.is_zero() and not A.is_whole():
            _law(report, "primary=irreducible=oracle",
                 lambda a: (classify.is_primary(a) == classify.is_irreducible(a)
                            == classify.irreducible_oracle(a, enumeration_bound)),
                 A)
            _law(report, "radical=meet-of-primes",
                 lambda a: ideals.equals(
                     ideals.radical(a),
                     classify.radical_oracle(a, enumeration_bound)), A)
            _law(report, "prime-power-remultiplies",
                 lambda a: _prime_power_roundtrip(a), A)
        if not A.is_whole():
            _law(report, "factor-remultiply",
                 lambda a: _factor_verifies(a), A)
        _law(report, "solve-quotient-roundtrip",
             lambda a, b: _solve_roundtrip(a, b), A, B)
    return report


def _modular(A: Ideal, B: Ideal, C: Ideal) -> bool:
    big = ideals.add(A, C)  # force A <= big
    left = ideals.meet(ideals.add(A, B), big)
    right = ideals.add(A, ideals.meet(B, big))
    return ideals.equals(left, right)


def _prime_power_roundtrip(A: Ideal) -> bool:
    decomposition = classify.prime_power_decomposition(A)
    if decomposition is None:
        return True
    P, n = decomposition
    return (classify.is_prime(P).is_prime
            and ideals.equals(ideals.mul_power(P, n), A))


def _factor_verifies(A: Ideal) -> bool:
    result = classify.factor_into_primes(A)
    if isinstance(result, classify.FactorFailure):
        return True
    return result.verified and ideals.equals(
        _product(result.factors, A.graph), A)


def _product(factors, g: Graph) -> Ideal:
    acc = ideals.whole_ring(g)
    for P in factors:
        acc = ideals.mul(acc, P)
    return acc


def _solve_roundtrip(A: Ideal, B: Ideal) -> bool:
    big = ideals.add(A, B)
    C = classify.solve_quotient(A, big)
    return ideals.equals(ideals.mul(big, C), A)
