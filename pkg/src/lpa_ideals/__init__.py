"""Exact ideal arithmetic for Leavitt path algebras of finite graphs over F_p.

The package models two-sided ideals of L_K(E) in their canonical form, an
admissible pair (H, S) of vertices plus finitely many cycle components
carrying polynomials, and builds arithmetic, classification, factorization
and randomized law checking on top of that representation.
"""

from .errors import (
    CanonicalFormError,
    GuardrailError,
    InputError,
    InternalLawError,
    LpaError,
    PreconditionError,
    UnknownVertexError,
)
from .graphs import (
    OMEGA,
    Cycle,
    Graph,
    VertexKind,
    export_dot,
    graph_from_obj,
    graph_to_obj,
    parse_graph,
    render_graph,
)
from .fieldpoly import (
    FieldPoly,
    FieldSpec,
    factor,
    format_poly,
    irreducibles,
    is_irreducible,
    laurent_normalize,
    monic_divisors,
    parse_poly,
    poly_gcd,
    poly_lcm,
    squarefree_part,
)
from .lattice import (
    AdmissiblePair,
    QuotientGraph,
    admissible_pairs,
    breaking_vertices,
    hereditary_closure,
    hereditary_saturated_closure,
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
from .ideals import (
    Ideal,
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
    principal_cycle_ideal,
    radical,
    whole_ring,
    zero_ideal,
)
from .classify import (
    FactorFailure,
    FailureReason,
    PrimalityVerdict,
    PrimeCase,
    PrimeFactorization,
    factor_into_primes,
    graded_primes,
    ideals_containing,
    irreducible_oracle,
    is_primary,
    is_prime,
    prime_power_decomposition,
    radical_oracle,
    solve_quotient,
)
from .classify import is_irreducible as is_irreducible_ideal
from .laws import LawReport, check_laws, random_graph, random_ideal
from .exprs import ExprEvaluator

__version__ = "0.1.0"
