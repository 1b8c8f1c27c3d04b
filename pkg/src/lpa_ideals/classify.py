"""Prime, primary and irreducible classification and prime factorization.

Prime ideals come in three shapes: graded with a downward-directed
complement and S = B_H; graded with S missing exactly one breaking
vertex u that every remaining vertex reaches; and non-graded with a
single irreducible-polynomial component on the unique exitless quotient
cycle that every remaining vertex reaches.

The factorization algorithm peels an ideal into the minimal graded
primes over its graded part, matches each cycle component to the one
minimal prime avoiding the cycle, and splits the component polynomial
into irreducible factors, each contributing one prime per multiplicity.
Every factorization is verified by remultiplication before it is
returned.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import product as iter_product

from . import fieldpoly, ideals, lattice
from .errors import GuardrailError, PreconditionError
from .fieldpoly import FieldPoly
from .graphs import Graph
from .ideals import Ideal
from .lattice import AdmissiblePair

DEFAULT_ENUMERATION_BOUND = 10 ** 6


class PrimeCase(enum.Enum):
    GRADED_FULL_S = "graded case (i)"
    GRADED_MISSING_ONE = "graded case (ii)"
    NON_GRADED = "non-graded case (iii)"
    NOT_PRIME = "not prime"


@dataclass(frozen=True)
class PrimalityVerdict:
    is_prime: bool
    case: PrimeCase
    witness: str | None = None


@dataclass(frozen=True)
class PrimeFactorization:
    factors: tuple[Ideal, ...]
    verified: bool


class FailureReason(enum.Enum):
    GRADED_PART_NOT_INTERSECTION_OF_MINIMAL_PRIMES = "graded part is not an " \
        "irredundant intersection of its minimal graded primes"
    COMPONENT_MATCHING_FAILED = "a cycle component has no unique minimal " \
        "prime avoiding its cycle"


@dataclass(frozen=True)
class FactorFailure:
    reason: FailureReason
    details: str


# -- primality --------------------------------------------------------------------


def is_prime(I: Ideal) -> PrimalityVerdict:
    """Classification of I against the three prime shapes."""
    g = I.graph
    if I.is_whole():
        return PrimalityVerdict(False, PrimeCase.NOT_PRIME,
                                "the whole ring is not a proper ideal")
    H = I.pair.H_set
    S = I.pair.S_set
    bh = lattice.breaking_vertices(g, H)
    complement = g.vertices - H
    if I.is_graded():
        if S == bh:
            if g.downward_directed(complement):
                return PrimalityVerdict(True, PrimeCase.GRADED_FULL_S)
            return PrimalityVerdict(False, PrimeCase.NOT_PRIME,
                                    f"{sorted(complement)} is not downward directed")
        missing = bh - S
        if len(missing) == 1 and S == bh - missing:
            (u,) = missing
            stragglers = [v for v in complement if not g.reaches(v, u)]
            if not stragglers:
                return PrimalityVerdict(True, PrimeCase.GRADED_MISSING_ONE)
            return PrimalityVerdict(
                False, PrimeCase.NOT_PRIME,
                f"{sorted(stragglers)} do not reach the withheld vertex {u}")
        return PrimalityVerdict(False, PrimeCase.NOT_PRIME,
                                f"S misses {len(missing)} breaking vertices")
    if S != bh:
        return PrimalityVerdict(False, PrimeCase.NOT_PRIME,
                                "non-graded prime needs S = B_H")
    if len(I.components) != 1:
        return PrimalityVerdict(False, PrimeCase.NOT_PRIME,
                                f"{len(I.components)} cycle components, need 1")
    (cyc, poly), = I.components
    if not fieldpoly.is_irreducible(poly):
        return PrimalityVerdict(False, PrimeCase.NOT_PRIME,
                                f"{poly} is reducible")
    base = cyc.vertices[0]
    stragglers = [v for v in complement if not g.reaches(v, base)]
    if stragglers:
        return PrimalityVerdict(
            False, PrimeCase.NOT_PRIME,
            f"{sorted(stragglers)} do not reach the component cycle")
    return PrimalityVerdict(True, PrimeCase.NON_GRADED)


def _require_proper(I: Ideal) -> None:
    if I.is_whole():
        raise PreconditionError("the whole ring is not a proper ideal")


def prime_power_decomposition(I: Ideal) -> tuple[Ideal, int] | None:
    """Write I as P^n for a prime P, or None when no such form exists."""
    _require_proper(I)
    if I.is_graded():
        return (I, 1) if is_prime(I).is_prime else None
    graded_part = ideals.gr(I)
    verdict = is_prime(graded_part)
    if not (verdict.is_prime and verdict.case is PrimeCase.GRADED_FULL_S):
        return None
    if len(I.components) != 1:
        return None
    (cyc, poly), = I.components
    factors = fieldpoly.factor(poly)
    if len(factors) != 1:
        return None
    p, n = factors[0]
    P = ideals.canonicalize(I.graph, I.pair, {cyc: p})
    if not ideals.equals(ideals.mul_power(P, n), I):
        return None
    return P, n


def is_primary(I: Ideal) -> bool:
    """Primary coincides with irreducible coincides with prime power here."""
    return prime_power_decomposition(I) is not None


def is_irreducible(I: Ideal) -> bool:
    return prime_power_decomposition(I) is not None


# -- up-set enumeration and oracles ---------------------------------------------------


def ideals_containing(I: Ideal, bound: int = DEFAULT_ENUMERATION_BOUND) -> list[Ideal]:
    """The complete finite list of canonical ideals containing a nonzero I.

    For each admissible pair above I's, every surviving exitless quotient
    cycle must carry a component forced by I (a proper monic divisor of
    I's polynomial there); a surviving cycle I says nothing about admits
    infinitely many polynomials, so enumeration is refused.
    """
    if I.is_zero():
        raise PreconditionError(
            "the up-set of the zero ideal is not enumerable this way; "
            "pass a nonzero ideal")
    g = I.graph
    comp = I.component_map
    plans = []
    total = 1
    for pair in lattice.admissible_pairs(g):
        if not lattice.pair_leq(I.pair, pair):
            continue
        H = pair.H_set
        surviving = [c for c in ideals.exitless_quotient_cycles(g, pair)
                     if not c.vertex_set <= H]
        choices = []
        for cyc in surviving:
            forced = comp.get(cyc)
            if forced is None:
                raise GuardrailError(
                    f"infinite up-set: cycle {cyc} survives in the quotient "
                    f"by {pair} but is unconstrained by the input ideal")
            # divisor 1 is excluded: a unit component means the cycle is
            # absorbed, which the pairs with cyc inside H already cover
            divisors = [d for d in fieldpoly.monic_divisors(forced)
                        if not d.is_one()]
            choices.append((cyc, divisors))
        for cyc, _ in I.components:
            if not (cyc.vertex_set <= H or any(c == cyc for c, _ in choices)):
                raise AssertionError(
                    f"component cycle {cyc} vanished from the quotient by {pair}")
        count = 1
        for _, divisors in choices:
            count *= len(divisors)
        total += count
        if total > bound:
            raise GuardrailError(
                f"up-set enumeration exceeds the bound of {bound} candidates")
        plans.append((pair, choices))
    out = []
    for pair, choices in plans:
        for assignment in iter_product(*(divs for _, divs in choices)):
            raw = {cyc: d for (cyc, _), d in zip(choices, assignment)}
            J = ideals.canonicalize(g, pair, raw)
            if not ideals.leq(I, J):
                raise AssertionError(f"enumerated {J} does not contain {I}")
            out.append(J)
    uniq = {(J.pair, J.components): J for J in out}
    return sorted(uniq.values(), key=lambda J: (J.pair, J.components))


def irreducible_oracle(I: Ideal, bound: int = DEFAULT_ENUMERATION_BOUND) -> bool:
    """Brute-force irreducibility: no two strictly larger ideals meet to I."""
    _require_proper(I)
    if I.is_zero():
        raise PreconditionError("the oracle runs on nonzero ideals only")
    above = [J for J in ideals_containing(I, bound) if not ideals.equals(J, I)]
    for i, J1 in enumerate(above):
        for J2 in above[i:]:
            if ideals.equals(ideals.meet(J1, J2), I):
                return False
    return True


def radical_oracle(I: Ideal, bound: int = DEFAULT_ENUMERATION_BOUND) -> Ideal:
    """Radical as the meet of all primes containing I, enumerated exhaustively."""
    if I.is_zero():
        raise PreconditionError("the oracle runs on nonzero ideals only")
    primes = [J for J in ideals_containing(I, bound) if is_prime(J).is_prime]
    out = ideals.whole_ring(I.graph)
    for P in primes:
        out = ideals.meet(out, P)
    return out


# -- factorization -----------------------------------------------------------------


def graded_primes(g: Graph) -> list[Ideal]:
    """All graded prime ideals, from the admissible-pair lattice."""
    out = []
    for pair in lattice.admissible_pairs(g):
        P = ideals.graded_ideal(g, pair)
        if not P.is_whole() and is_prime(P).is_prime:
            out.append(P)
    return out


def minimal_graded_primes_over(G: Ideal) -> list[Ideal]:
    """Minimal elements of the graded primes containing a proper graded G."""
    if not G.is_graded():
        raise PreconditionError("minimal graded primes need a graded input")
    _require_proper(G)
    over = [P for P in graded_primes(G.graph) if ideals.leq(G, P)]
    return [P for P in over
            if not any(ideals.leq(Q, P) and not ideals.equals(Q, P)
                       for Q in over)]


def _meet_all(g: Graph, members) -> Ideal:
    out = ideals.whole_ring(g)
    for m in members:
        out = ideals.meet(out, m)
    return out


def factor_into_primes(I: Ideal) -> PrimeFactorization | FactorFailure:
    """Factor a proper ideal into primes, verified by remultiplication."""
    _require_proper(I)
    g = I.graph
    graded_part = ideals.gr(I)
    minimal = minimal_graded_primes_over(graded_part)
    if not ideals.equals(_meet_all(g, minimal), graded_part):
        return FactorFailure(
            FailureReason.GRADED_PART_NOT_INTERSECTION_OF_MINIMAL_PRIMES,
            f"meet of {len(minimal)} minimal graded primes differs from "
            f"gr(I) = {graded_part}")
    for dropped in range(len(minimal)):
        rest = minimal[:dropped] + minimal[dropped + 1:]
        if ideals.equals(_meet_all(g, rest), graded_part):
            return FactorFailure(
                FailureReason.GRADED_PART_NOT_INTERSECTION_OF_MINIMAL_PRIMES,
                f"intersection is redundant: dropping {minimal[dropped]} "
                "does not change the meet")
    factors: list[Ideal] = []
    matched: set[int] = set()
    for cyc, poly in I.components:
        hosts = [k for k, P in enumerate(minimal)
                 if not cyc.vertex_set <= P.pair.H_set]
        if len(hosts) != 1:
            return FactorFailure(
                FailureReason.COMPONENT_MATCHING_FAILED,
                f"cycle {cyc} is avoided by {len(hosts)} minimal primes, need 1")
        k = hosts[0]
        matched.add(k)
        P = minimal[k]
        full_s = AdmissiblePair.make(
            P.pair.H, sorted(lattice.breaking_vertices(g, P.pair.H_set)))
        for q, m in fieldpoly.factor(poly):
            prime = ideals.canonicalize(g, full_s, {cyc: q})
            factors.extend([prime] * m)
    for k, P in enumerate(minimal):
        if k not in matched:
            factors.append(P)
    factors.sort(key=lambda J: (J.pair, J.components))
    product = factors[0]
    for f in factors[1:]:
        product = ideals.mul(product, f)
    if not ideals.equals(product, I):
        raise AssertionError(
            f"prime factorization of {I} fails to remultiply: got {product}")
    return PrimeFactorization(tuple(factors), verified=True)


def solve_quotient(A: Ideal, B: Ideal) -> Ideal:
    """Given A <= B, produce C with B*C = A (multiplication-ring witness)."""
    if not ideals.leq(A, B):
        raise PreconditionError("solve_quotient needs A <= B")
    if ideals.equals(A, B):
        C = ideals.whole_ring(A.graph)
    elif ideals.leq(A, ideals.gr(B)):
        # anything inside the graded part of B is absorbed: BC = C
        C = A
    else:
        b_map = B.component_map
        raw: dict = {}
        for cyc, f in A.components:
            if cyc.vertex_set <= B.pair.H_set:
                raw[cyc] = f
                continue
            g_poly = b_map[cyc]
            if not g_poly.divides(f):
                raise AssertionError(
                    "leq guaranteed divisibility of matched components")
            # f == g leaves the constant 1: the cycle's vertices belong to
            # C, and canonicalize absorbs them into the graded part.
            raw[cyc] = f // g_poly
        C = ideals.canonicalize(A.graph, A.pair, raw)
    if not ideals.equals(ideals.mul(B, C), A):
        raise AssertionError("solve_quotient result fails remultiplication")
    return C
