"""Command-line interface.

Subcommands: lattice, quotient, eval, classify, factor, solve, fuzz,
export-dot.  Graph documents are JSON files (or ``-`` for stdin); all
structured output goes to stdout, diagnostics to stderr.  Exit codes:
0 success, 1 usage or parse error, 2 mathematical precondition failure
or factorization failure, 3 internal law violation.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import classify, fieldpoly, graphs, ideals, lattice, laws
from .errors import InputError, InternalLawError, LpaError, PreconditionError
from .exprs import ExprEvaluator
from .fieldpoly import FieldSpec
from .graphs import Graph

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PRECONDITION = 2
EXIT_LAW_VIOLATION = 3


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as handle:
            return handle.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc


def _load_graph(path: str, field_override: int | None) -> tuple[Graph, FieldSpec]:
    text = _read_text(path)
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON: {exc}") from exc
    g = graphs.graph_from_obj(obj)
    p = field_override
    if p is None:
        p = obj.get("field", {}).get("p", 5) if isinstance(obj, dict) else 5
    return g, FieldSpec(p)


def _emit(obj, fmt: str, table_renderer=None):
    if fmt == "table" and table_renderer is not None:
        print(table_renderer(obj))
    else:
        print(json.dumps(obj, indent=2))


# -- subcommands --------------------------------------------------------------------


def cmd_lattice(args) -> int:
    g, _ = _load_graph(args.graph, args.field_p)
    pairs = lattice.admissible_pairs(g)
    if args.format == "dot":
        print(_lattice_dot(g, pairs), end="")
        return EXIT_OK
    rows = []
    for pair in pairs:
        I = ideals.graded_ideal(g, pair)
        verdict = classify.is_prime(I)
        rows.append({
            "H": list(pair.H),
            "S": list(pair.S),
            "prime": verdict.is_prime,
            "case": verdict.case.value if verdict.is_prime else None,
            "whole_ring": I.is_whole(),
        })
    def table(rows):
        lines = []
        for r in rows:
            flag = "whole ring" if r["whole_ring"] else (
                r["case"] if r["prime"] else "not prime")
            lines.append(f"H={{{','.join(r['H'])}}} S={{{','.join(r['S'])}}}  {flag}")
        return "\n".join(lines)
    _emit(rows, args.format, table)
    return EXIT_OK


def _lattice_dot(g: Graph, pairs) -> str:
    lines = ["digraph lattice {", "  rankdir=BT;"]
    names = {pair: str(pair) for pair in pairs}
    for pair in pairs:
        lines.append(f'  "{names[pair]}";')
    for low in pairs:
        for high in pairs:
            if low == high or not lattice.pair_leq(low, high):
                continue
            strictly_between = any(
                mid not in (low, high)
                and lattice.pair_leq(low, mid) and lattice.pair_leq(mid, high)
                for mid in pairs)
            if not strictly_between:
                lines.append(f'  "{names[low]}" -> "{names[high]}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def cmd_quotient(args) -> int:
    g, _ = _load_graph(args.graph, args.field_p)
    try:
        obj = json.loads(args.pair)
    except json.JSONDecodeError as exc:
        raise InputError(f"--pair is not valid JSON: {exc}") from exc
    pair = lattice.AdmissiblePair.make(obj.get("H", []), obj.get("S", []))
    q = lattice.quotient_graph(g, pair)
    if args.format == "dot":
        print(graphs.export_dot(q.graph, primed=q.primed), end="")
    else:
        out = graphs.graph_to_obj(q.graph)
        out["primed"] = sorted(q.primed)
        _emit(out, args.format)
    return EXIT_OK


def cmd_eval(args) -> int:
    g, field = _load_graph(args.graph, args.field_p)
    value = ExprEvaluator(g, field).evaluate(args.expr)
    if isinstance(value, bool):
        _emit({"result": value}, args.format, lambda o: str(o["result"]).lower())
    else:
        _emit(ideals.ideal_to_obj(value), args.format, lambda o: str(value))
    return EXIT_OK


def cmd_classify(args) -> int:
    g, field = _load_graph(args.graph, args.field_p)
    I = ExprEvaluator(g, field).evaluate_ideal(args.expr)
    if I.is_whole():
        raise PreconditionError("classification needs a proper ideal, got L")
    verdict = classify.is_prime(I)
    decomposition = classify.prime_power_decomposition(I)
    out = {
        "ideal": ideals.ideal_to_obj(I),
        "graded": I.is_graded(),
        "prime": verdict.is_prime,
        "prime_case": verdict.case.value if verdict.is_prime else None,
        "prime_witness": verdict.witness,
        "primary": decomposition is not None,
        "irreducible": decomposition is not None,
        "prime_power": None if decomposition is None else {
            "prime": ideals.ideal_to_obj(decomposition[0]),
            "exponent": decomposition[1],
        },
        "radical": ideals.ideal_to_obj(ideals.radical(I)),
    }
    _emit(out, args.format)
    return EXIT_OK


def cmd_factor(args) -> int:
    g, field = _load_graph(args.graph, args.field_p)
    I = ExprEvaluator(g, field).evaluate_ideal(args.expr)
    result = classify.factor_into_primes(I)
    if isinstance(result, classify.FactorFailure):
        _emit({"failure": {"reason": result.reason.name,
                           "details": result.details}}, args.format)
        return EXIT_PRECONDITION
    _emit({
        "input": ideals.ideal_to_obj(I),
        "factors": [ideals.ideal_to_obj(P) for P in result.factors],
        "verified": result.verified,
    }, args.format)
    return EXIT_OK


def cmd_solve(args) -> int:
    g, field = _load_graph(args.graph, args.field_p)
    evaluator = ExprEvaluator(g, field)
    A = evaluator.evaluate_ideal(args.expr_a)
    B = evaluator.evaluate_ideal(args.expr_b)
    C = classify.solve_quotient(A, B)
    _emit({
        "A": ideals.ideal_to_obj(A),
        "B": ideals.ideal_to_obj(B),
        "C": ideals.ideal_to_obj(C),
        "verified": ideals.equals(ideals.mul(B, C), A),
    }, args.format)
    return EXIT_OK


def cmd_fuzz(args) -> int:
    field = FieldSpec(args.field_p if args.field_p else 5)
    reports = []
    if args.graph:
        g, field = _load_graph(args.graph, args.field_p)
        targets = [g]
    elif args.random_graphs:
        rng = random.Random(args.seed)
        targets = [laws.random_graph(rng) for _ in range(args.random_graphs)]
    else:
        raise InputError("fuzz needs a graph file or --random-graphs N")
    mul_override = _corrupted_mul if args.self_check else None
    ok = True
    for g in targets:
        report = laws.check_laws(g, args.seed, args.trials, field,
                                 enumeration_bound=args.bound,
                                 mul_override=mul_override)
        reports.append(report.to_obj())
        ok = ok and report.ok
    print(json.dumps(reports if len(reports) > 1 else reports[0], indent=2))
    # with --self-check the deliberately corrupted product should make this
    # nonzero; a zero exit there means the harness lost its teeth
    return EXIT_OK if ok else EXIT_LAW_VIOLATION


def _corrupted_mul(A, B):
    # deliberately wrong product: drops every cycle component
    honest = ideals.mul(A, B)
    return ideals.gr(honest)


def cmd_export_dot(args) -> int:
    g, _ = _load_graph(args.graph, args.field_p)
    print(graphs.export_dot(g), end="")
    return EXIT_OK


# -- entry point -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field-p", type=int, default=None,
                        help="override the field prime from the graph file")
    common.add_argument("--bound", type=int,
                        default=classify.DEFAULT_ENUMERATION_BOUND,
                        help="up-set enumeration bound for oracles")
    common.add_argument("--format", choices=["json", "table", "dot"],
                        default="json")
    parser = argparse.ArgumentParser(
        prog="lpa-ideals",
        description="Exact ideal-lattice computations for Leavitt path "
                    "algebras of finite graphs over F_p.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, **kwargs):
        return sub.add_parser(name, parents=[common], **kwargs)

    p = add("lattice", help="list admissible pairs and prime flags")
    p.add_argument("graph")
    p.set_defaults(func=cmd_lattice)

    p = add("quotient", help="build the quotient graph of a pair")
    p.add_argument("graph")
    p.add_argument("--pair", required=True,
                   help='admissible pair JSON, e.g. {"H":["v"],"S":[]}')
    p.set_defaults(func=cmd_quotient)

    p = add("eval", help="evaluate an ideal expression")
    p.add_argument("graph")
    p.add_argument("expr")
    p.set_defaults(func=cmd_eval)

    p = add("classify", help="prime/primary/irreducible verdicts")
    p.add_argument("graph")
    p.add_argument("expr")
    p.set_defaults(func=cmd_classify)

    p = add("factor", help="factor an ideal into primes")
    p.add_argument("graph")
    p.add_argument("expr")
    p.set_defaults(func=cmd_factor)

    p = add("solve", help="find C with B*C == A for A <= B")
    p.add_argument("graph")
    p.add_argument("expr_a")
    p.add_argument("expr_b")
    p.set_defaults(func=cmd_solve)

    p = add("fuzz", help="run the randomized law suite")
    p.add_argument("graph", nargs="?")
    p.add_argument("--random-graphs", type=int, default=0)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--trials", type=int, default=40)
    p.add_argument("--self-check", action="store_true",
                   help="corrupt the product on purpose; expect a counterexample")
    p.set_defaults(func=cmd_fuzz)

    p = add("export-dot", help="render the graph as DOT")
    p.add_argument("graph")
    p.set_defaults(func=cmd_export_dot)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (InternalLawError, AssertionError) as exc:
        print(f"internal law violation: {exc}", file=sys.stderr)
        return EXIT_LAW_VIOLATION
    except LpaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
