"""Command-line front end: normalize expressions, evaluate actions, run suites.

Report records are line-oriented ``key=value`` fields::

    suite=<name>, case=<id>, residual=<float>, pass=<true|false>

Exit codes: 0 all checks passed, 1 failures present, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import math
import random
import sys

from . import gauss, haar, parser, uq, weyl
from .coeff import NumericContext
from .errors import IndexOutOfRange, ParseError, QweylError
from .report import SuiteReport

SUITES = ("weyl-relations", "ab-rho", "action-table", "module-algebra",
          "pointwise", "model2-n1", "invariance", "cyclicity", "obstruction")


def _symbolic_suite(name, relations, n):
    rep = SuiteReport(name)
    for rel in relations:
        element = weyl.normal_form(n, rel.terms)
        rep.record(rel.name, element.is_zero,
                   detail="" if element.is_zero else str(element))
    return rep


def run_weyl_relations(n, args):
    rels = weyl.coordinate_relations(n) + weyl.localized_relations(n)
    return _symbolic_suite("weyl-relations", rels, n)


def run_ab_rho(n, args):
    rep = _symbolic_suite("ab-rho", weyl.ab_rho_relations(n), n)
    for name, element in weyl.hermitian_generators(n):
        ok = element.star() == element
        rep.record(f"hermitian[{name}]", ok)
    return rep


def run_action_table(n, args):
    return uq.check_action_table(n)


def run_module_algebra(n, args):
    return uq.check_module_algebra(n, degree=args.degree)


def _numeric_ctx(args):
    return NumericContext(phi=args.phi, tolerance=args.tolerance)


def run_pointwise(n, args):
    ctx = _numeric_ctx(args)
    rng = random.Random(args.seed)
    states = gauss.sample_states(n, rng, args.samples)
    rels = weyl.coordinate_relations(n) + weyl.localized_relations(n)
    rep = gauss.check_relations_pointwise(n, rels, states, ctx)
    rep.extend(gauss.check_hermiticity_pointwise(n, states, ctx))
    return rep


def run_model2(n, args):
    if n != 1:
        raise QweylError("the two-component model is defined for --n 1 only")
    ctx = _numeric_ctx(args)
    rng = random.Random(args.seed)
    states = [gauss.model2_random_state(rng) for _ in range(args.samples)]
    return gauss.check_model2(states, ctx)


def run_invariance(n, args):
    ictx = haar.IntegralContext(c=args.c, ctx=_numeric_ctx(args))
    rep = haar.check_invariance(n, ictx, count=args.samples, seed=args.seed)
    if n == 1:
        alt = haar.IntegralContext(c=args.c, ctx=_numeric_ctx(args),
                                   density="qinv")
        sub = haar.check_invariance(1, alt, count=args.samples, seed=args.seed,
                                    suite="invariance")
        for case in sub.cases:
            rep.record(f"qinv:{case.case}", case.passed, residual=case.residual)
    return rep


def run_cyclicity(n, args):
    ictx = haar.IntegralContext(c=args.c, ctx=_numeric_ctx(args))
    return haar.check_cyclicity(n, ictx, count=args.samples, seed=args.seed)


def run_obstruction(n, args):
    return haar.check_obstruction()


_RUNNERS = {
    "weyl-relations": run_weyl_relations,
    "ab-rho": run_ab_rho,
    "action-table": run_action_table,
    "module-algebra": run_module_algebra,
    "pointwise": run_pointwise,
    "model2-n1": run_model2,
    "invariance": run_invariance,
    "cyclicity": run_cyclicity,
    "obstruction": run_obstruction,
}


def _emit(report_lines, out_path):
    text = "\n".join(report_lines)
    if text:
        print(text)
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text + ("\n" if text else ""))


def _cmd_verify(args):
    merged = SuiteReport("verify")
    if args.suite:
        runner = _RUNNERS[args.suite]
        rep = runner(args.n, args)
        merged.cases.extend(rep.cases)
    else:
        for suite in SUITES:
            ranks = (1,) if suite in ("model2-n1", "obstruction") else (1, 2)
            for n in ranks:
                rep = _RUNNERS[suite](n, args)
                for case in rep.cases:
                    merged.cases.append(type(case)(
                        case.suite, f"n{n}:{case.case}", case.passed,
                        case.residual, case.detail))
    _emit(merged.lines(), args.out)
    return 0 if merged.ok else 1


def _cmd_normalize(args):
    value = parser.parse_expression(args.expr, args.n)
    print(value)
    return 0


def _cmd_act(args):
    h = parser.parse_hopf(args.hopf, args.n)
    f = parser.parse_algebra(args.element, args.n)
    print(uq.act_element(h, f))
    return 0


def _parse_state(text, n, ctx_name):
    legs = []
    for part in text.replace(";", " ").split():
        part = part.strip().strip("()")
        if not part:
            continue
        fields = [p.strip() for p in part.split(",")]
        if len(fields) != 3:
            raise ParseError(
                f"{ctx_name}: each leg is (eps,gammaRe,gammaIm)", 0)
        eps, gre, gim = (float(p) for p in fields)
        legs.append((eps, complex(gre, gim)))
    if len(legs) != n:
        raise ParseError(f"{ctx_name}: expected {n} legs, got {len(legs)}", 0)
    return gauss.GaussianState.from_legs(1.0, legs)


def _cmd_integrate(args):
    ictx = haar.IntegralContext(c=args.c, ctx=_numeric_ctx(args),
                                density=args.density)
    ket = _parse_state(args.ket, args.n, "--ket")
    bra = _parse_state(args.bra, args.n, "--bra")
    value = haar.quantum_trace(haar.rank_one(ket, bra), ictx)
    print(f"h={value.real:.12e}{value.imag:+.12e}j")
    return 0


def _cmd_repr_check(args):
    rep = run_pointwise(args.n, args)
    if args.n == 1:
        rep.extend(run_model2(1, args))
    _emit(rep.lines(), args.out)
    return 0 if rep.ok else 1


def build_arg_parser():
    ap = argparse.ArgumentParser(
        prog="qweyl",
        description="Verification kernel for invariant integration on the "
                    "real q-Weyl algebra")
    sub = ap.add_subparsers(dest="verb", required=True)

    def common(p, samples=10):
        p.add_argument("--n", type=int, default=1, help="number of coordinate pairs")
        p.add_argument("--phi", type=float, default=math.pi / 3,
                       help="deformation angle, q = exp(i*phi)")
        p.add_argument("--tolerance", type=float, default=1e-9)
        p.add_argument("--samples", type=int, default=samples)
        p.add_argument("--seed", type=int, default=7)
        p.add_argument("--c", type=float, default=1.0,
                       help="trace normalization constant")
        p.add_argument("--out", default=None, help="also write the report here")

    p = sub.add_parser("normalize", help="print the canonical form")
    p.add_argument("--n", type=int, default=1)
    p.add_argument("expr")
    p.set_defaults(fn=_cmd_normalize)

    p = sub.add_parser("act", help="apply a symmetry word to an element")
    p.add_argument("--n", type=int, default=1)
    p.add_argument("hopf")
    p.add_argument("element")
    p.set_defaults(fn=_cmd_act)

    p = sub.add_parser("verify", help="run verification suites")
    common(p)
    p.add_argument("--suite", choices=SUITES, default=None)
    p.add_argument("--degree", type=int, default=2,
                   help="monomial degree bound for module-algebra sweeps")
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("integrate", help="invariant integral of a dyad")
    common(p)
    p.add_argument("--density", choices=("gamma", "qinv"), default="gamma")
    p.add_argument("--ket", required=True,
                   help="legs as (eps,gammaRe,gammaIm), semicolon separated")
    p.add_argument("--bra", required=True)
    p.set_defaults(fn=_cmd_integrate)

    p = sub.add_parser("repr-check", help="pointwise representation checks")
    common(p)
    p.set_defaults(fn=_cmd_repr_check)
    return ap


def main(argv=None):
    ap = build_arg_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.fn(args)
    except (ParseError, IndexOutOfRange, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except QweylError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
