"""Command-line front end.

Exit codes: 0 success, 1 input error, 2 internal invariant violation,
3 undecided finiteness verdict.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from .certificate import Certificate, serialize
from .criteria import (
    criterion_outer_degree,
    criterion_subleading,
    delta_report,
    derivative_irreducible_criterion,
    fried1_phi_classifier,
    indecomposability_report,
)
from .decompose import (
    DEFAULT_NODE_CAP,
    DecompositionError,
    InvariantViolation,
    complete_decompositions,
    decompose_once,
    ritt_swap,
)
from .dickson import DicksonMismatch, checked_dickson, recognize
from .diophantine import FinitenessVerdict, finiteness, solution_scan
from .lacunary import ConditionNotMet, ExcludedShape, quadrinomial_decompositions, trinomial_decompositions, zannier_bound_check
from .monodromy import DEFAULT_SEED, DEFAULT_TOLERANCE, MonodromyError, monodromy
from .parse import ParseError, canonical_text, parse

EXIT_OK, EXIT_INPUT, EXIT_INVARIANT, EXIT_UNDECIDED = 0, 1, 2, 3


def _const(text: str) -> Fraction:
    p = parse(text)
    if not p.is_constant:
        raise ValueError(f"expected a rational constant, got {text!r}")
    return p[0]


def _t(p) -> str:
    return canonical_text(p)


def _pairs_payload(pairs):
    return [{"g": _t(p.g), "h": _t(p.h)} for p in pairs]


# Each handler returns (certificate, text lines, exit code).


def _decompose(args):
    f = parse(args.expr)
    pairs = decompose_once(f)
    lines = [f"{_t(p.g)}  ∘  {_t(p.h)}" for p in pairs] or ["indecomposable"]
    return Certificate("DECOMPOSITION_TREE", {"f": _t(f)}, {"pairs": _pairs_payload(pairs)}), lines, EXIT_OK


def _complete(args):
    f = parse(args.expr)
    chains = complete_decompositions(f, node_cap=args.node_cap)
    payload = {"chains": [[_t(c) for c in d.components] for d in chains]}
    lines = ["  ∘  ".join(_t(c) for c in d.components) for d in chains]
    return Certificate("DECOMPOSITION_TREE", {"f": _t(f)}, payload), lines, EXIT_OK


def _indecomposable(args):
    f = parse(args.expr)
    rep = indecomposability_report(f)
    payload = {"verdict": rep.verdict.value, "reasons": rep.reasons, "admissible_outer_degrees": sorted(rep.degree_constraints)}
    lines = [rep.verdict.value] + [f"  {r['criterion']}: {'fired' if r['fired'] else 'silent'}" for r in rep.reasons]
    return Certificate("INDECOMPOSABLE_REPORT", {"f": _t(f)}, payload), lines, EXIT_OK


def _criterion(args):
    f = parse(args.expr)
    payload = {
        "subleading_gcd": criterion_subleading(f),
        "admissible_outer_degrees": sorted(criterion_outer_degree(f)),
        "derivative_irreducible": derivative_irreducible_criterion(f),
        "phi_class": fried1_phi_classifier(f).value,
    }
    lines = [f"{k}: {v}" for k, v in payload.items()]
    return Certificate("INDECOMPOSABLE_REPORT", {"f": _t(f)}, payload), lines, EXIT_OK


def _delta(args):
    f = parse(args.expr)
    rep = delta_report(f)
    payload = {
        "resultant": _t(rep.resultant_in_gamma),
        "profile": [{"factor": _t(p), "multiplicity": m} for p, m in rep.multiplicity_profile],
        "delta_max": rep.delta_max,
    }
    lines = [f"R(gamma) = {payload['resultant']}", f"delta_max = {rep.delta_max}"]
    return Certificate("INDECOMPOSABLE_REPORT", {"f": _t(f)}, payload), lines, EXIT_OK


def _dickson(args):
    a = _const(args.a)
    d = checked_dickson(args.m, a)
    return Certificate("REPRESENTATION", {"m": args.m, "a": str(a)}, {"dickson": _t(d)}), [_t(d)], EXIT_OK


def _recognize(args):
    f = parse(args.expr)
    form = recognize(f)
    payload = {"dickson_form": form.as_dict() if form else None}
    line = "not an affine Dickson conjugate" if form is None else _dickson_text(form)
    return Certificate("REPRESENTATION", {"f": _t(f)}, payload), [line], EXIT_OK


def _dickson_text(form) -> str:
    arg = "x" if form.b == 0 else f"x + {form.b}" if form.b > 0 else f"x - {-form.b}"
    out = f"D_{form.m}({arg}, {form.a})"
    if form.alpha != 1:
        out = f"{form.alpha} * {out}"
    if form.c:
        out += f" + {form.c}" if form.c > 0 else f" - {-form.c}"
    return out


def _lacunary(fn):
    def handler(args):
        f = parse(args.expr)
        pairs = fn(f)
        lines = [f"{_t(p.g)}  ∘  {_t(p.h)}" for p in pairs] or ["no decomposition"]
        return Certificate("DECOMPOSITION_TREE", {"f": _t(f)}, {"pairs": _pairs_payload(pairs)}), lines, EXIT_OK

    return handler


def _zannier(args):
    g, h = parse(args.g), parse(args.h)
    rep = zannier_bound_check(g, h)
    payload = {"deg_f": rep.deg_f, "l": rep.l, "deg_h": rep.deg_h, "lhs": rep.lhs, "rhs": rep.rhs, "holds": rep.holds}
    lines = [f"deg f + l - 1 = {rep.lhs} <= 2 l (l-1) deg h = {rep.rhs}: {rep.holds}"]
    return Certificate("INDECOMPOSABLE_REPORT", {"g": _t(g), "h": _t(h)}, payload), lines, EXIT_OK


def _finiteness(args):
    f, g = parse(args.f), parse(args.g)
    cert = finiteness(f, g)
    payload = cert.as_payload()
    lines = [cert.verdict.value]
    for c in cert.cases:
        tail = f": {c.lhs} vs {c.rhs}" if c.lhs or c.rhs else ""
        lines.append(f"  k={c.k} kind={c.kind} switched={c.switched}: {c.outcome} [{c.tactic}] {c.identity}{tail}")
    if cert.residual_note:
        lines.append(f"note: {cert.residual_note}")
    if args.max_box is not None:
        sols = solution_scan(f, g, args.max_box, args.denominator)
        payload["solution_scan"] = {
            "box": args.max_box,
            "denominator": args.denominator,
            "solutions": [[str(x), str(y)] for x, y in sols],
        }
        lines.append(f"solutions with |x|,|y| <= {args.max_box}: {[(str(x), str(y)) for x, y in sols]}")
    code = EXIT_UNDECIDED if cert.verdict is FinitenessVerdict.UNDECIDED else EXIT_OK
    return Certificate("FINITENESS", {"f": _t(f), "g": _t(g)}, payload), lines, code


def _monodromy(args):
    f = parse(args.expr)
    rep = monodromy(f, tolerance=args.tolerance, seed=args.seed)
    payload = rep.as_payload()
    lines = [
        f"group order {rep.group.order}, infinity cycle type {rep.infinity_permutation.cycle_type()}",
        f"transitive={rep.transitive} primitive={rep.primitive} doubly_transitive={rep.doubly_transitive}",
        f"block systems: {payload['block_systems']}",
    ]
    inp = {"f": _t(f), "tolerance": args.tolerance, "seed": args.seed}
    return Certificate("MONODROMY_REPORT", inp, payload), lines, EXIT_OK


def _swap(args):
    g, h = parse(args.g), parse(args.h)
    res = ritt_swap(g, h)
    if res is None:
        payload = {"swapped": None}
        lines = ["no swap: the composite has no right component of the required degree"]
    else:
        payload = {"swapped": {"g": _t(res.g), "h": _t(res.h)}, "patterns": list(res.patterns)}
        lines = [f"{_t(res.g)}  ∘  {_t(res.h)}   ({', '.join(res.patterns)})"]
    return Certificate("REPRESENTATION", {"g": _t(g), "h": _t(h)}, payload), lines, EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="polydecomp", description="Functional decomposition of polynomials over Q.")
    parser.add_argument("--json", action="store_true", help="emit a JSON certificate")
    sub = parser.add_subparsers(dest="command", required=True)

    def one(name, handler, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("expr")
        p.set_defaults(handler=handler)
        return p

    one("decompose", _decompose, "all decompositions f = g∘h")
    one("complete", _complete, "all complete decompositions").add_argument("--node-cap", type=int, default=DEFAULT_NODE_CAP)
    one("indecomposable", _indecomposable, "indecomposability verdict with reasons")
    one("recognize-dickson", _recognize, "recognize an affine Dickson conjugate")
    one("delta", _delta, "critical-value resultant and delta_max")
    one("criterion", _criterion, "cheap gcd and irreducibility criteria")
    one("trinomial", _lacunary(trinomial_decompositions), "decompositions of a trinomial")
    one("quadrinomial", _lacunary(quadrinomial_decompositions), "decompositions of a quadrinomial")
    mono = one("monodromy", _monodromy, "numeric monodromy group")
    mono.add_argument("--tolerance", type=float, default=DEFAULT_TOLERANCE)
    mono.add_argument("--seed", type=int, default=DEFAULT_SEED)

    d = sub.add_parser("dickson", help="Dickson polynomial D_m(x, a)")
    d.add_argument("m", type=int)
    d.add_argument("a")
    d.set_defaults(handler=_dickson)

    for name, handler, help_text in (("zannier-check", _zannier, "sparsity bound for g∘h"), ("swap", _swap, "Ritt swap of a coprime pair")):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("g")
        p.add_argument("h")
        p.set_defaults(handler=handler)

    fin = sub.add_parser("finiteness", help="finiteness certificate for f(x) = g(y)")
    fin.add_argument("f")
    fin.add_argument("g")
    fin.add_argument("--max-box", type=int, default=None, help="also scan |x|, |y| <= N")
    fin.add_argument("--denominator", type=int, default=1, help="scan x = X/L, y = Y/L")
    fin.set_defaults(handler=_finiteness)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cert, lines, code = args.handler(args)
    except (InvariantViolation, DicksonMismatch) as exc:
        print(f"internal invariant violated: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except (ParseError, ExcludedShape, ConditionNotMet, DecompositionError, MonodromyError, ValueError) as exc:
        code_name = getattr(exc, "code", "INPUT_ERROR")
        print(f"error [{code_name}]: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if args.json:
        sys.stdout.write(serialize(cert))
    else:
        print("\n".join(lines))
    return code


if __name__ == "__main__":
    sys.exit(main())
