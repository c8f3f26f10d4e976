"""Command-line interface.

    qpoly eval <family> --n N [--k K] [--order N] [--format text|latex|json]
    qpoly connect <family> --n N [--k K] [--aux a1,a2,...] [--format ...]
    qpoly verify [--suite NAME] [--max-n N] [--format text|json] [--report PATH]

Families for eval: hermite, laguerre, gegenbauer and their classical-*
counterparts.  Exit codes: 0 success, 1 verification failure, 2 usage error.
The default truncation order is 12, overridable with --order or the
QPOLY_ORDER environment variable.  --q-sample adds a floating-point
cross-check of the command's dual-route identity at the given rational q.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from fractions import Fraction

from .families import (
    LaguerreIndex,
    ZPolynomial,
    gegenbauer_classical,
    hermite_classical,
    laguerre_classical,
    q_gegenbauer_direct,
    q_gegenbauer_genfun,
    q_hermite,
    q_laguerre,
)
from .connection import (
    gegenbauer_connection,
    gegenbauer_connection_value,
    hermite_connection,
    laguerre_connection,
)
from .render import (
    latex_cospoly,
    latex_cpoly,
    latex_zpoly,
    polynomial_json_dict,
    render_polynomial_json,
    text_beta,
    text_cmono,
    text_cospoly,
    text_cpoly,
    text_zpoly,
)
from .verify import (
    SUITE_NAMES,
    chebyshev_recurrence,
    hermite_genfun_classical,
    laguerre_genfun_classical,
    run_suite,
)

EVAL_FAMILIES = ("hermite", "laguerre", "gegenbauer",
                 "classical-hermite", "classical-laguerre", "classical-gegenbauer")
CONNECT_FAMILIES = ("hermite", "laguerre", "gegenbauer")

# numeric cross-check sample points (z, theta, lambda)
_Z_SAMPLE = 1.3
_THETA_SAMPLE = 0.9
_LAMBDA_SAMPLE = 2.5


def _default_order():
    env = os.environ.get("QPOLY_ORDER")
    if env:
        try:
            return max(int(env), 0)
        except ValueError:
            pass
    return 12


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="qpoly",
        description="Exact q-orthogonal polynomials and their nonlinear "
                    "connection formulae in terms of classical polynomials.")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--order", type=int, default=None,
                        help="series truncation order (default 12 or $QPOLY_ORDER)")
    common.add_argument("--format", choices=("text", "latex", "json"), default="text")
    common.add_argument("--q-sample", dest="q_sample", default=None, metavar="RATIONAL",
                        help="floating-point cross-check at this q (e.g. 7/10)")

    p_eval = sub.add_parser("eval", parents=[common],
                            help="construct one polynomial exactly")
    p_eval.add_argument("family", choices=EVAL_FAMILIES)
    p_eval.add_argument("--n", type=int, required=True)
    p_eval.add_argument("--k", type=int, default=None,
                        help="degree index for the Laguerre families")

    p_conn = sub.add_parser("connect", parents=[common],
                            help="expand a deformed polynomial over classical products")
    p_conn.add_argument("family", choices=CONNECT_FAMILIES)
    p_conn.add_argument("--n", type=int, required=True)
    p_conn.add_argument("--k", type=int, default=None)
    p_conn.add_argument("--aux", default=None,
                        help="comma-separated auxiliary integers n_1,n_2,... (Laguerre)")

    p_ver = sub.add_parser("verify", help="run the identity-verification suites")
    p_ver.add_argument("--suite", choices=SUITE_NAMES, default="all")
    p_ver.add_argument("--max-n", dest="max_n", type=int, default=None)
    p_ver.add_argument("--format", choices=("text", "json"), default="text")
    p_ver.add_argument("--report", default=None, metavar="PATH",
                       help="also write the report (JSON) to this path")
    return parser


def _parse_q_sample(text, parser):
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        parser.error(f"--q-sample needs a rational number, got {text!r}")
    if value <= 0 or value == 1:
        parser.error("--q-sample must be positive and different from 1")
    return value


# ---------------------------------------------------------------------------
# eval
# ---------------------------------------------------------------------------

def _eval_polynomial(family, n, k, order):
    """Returns (polynomial, independent-route polynomial)."""
    if family == "hermite":
        return q_hermite(n, max(order, n)), hermite_connection(n).rescaled_total()
    if family == "laguerre":
        return (q_laguerre(n, k, max(order, k)),
                laguerre_connection(n, k).rescaled_total())
    if family == "gegenbauer":
        return q_gegenbauer_direct(n), q_gegenbauer_genfun(n, max(order, n))
    if family == "classical-hermite":
        return hermite_classical(n), hermite_genfun_classical(n)
    if family == "classical-laguerre":
        return laguerre_classical(LaguerreIndex(k, n - k)), laguerre_genfun_classical(n, k)
    if family == "classical-gegenbauer":
        return gegenbauer_classical(n), chebyshev_recurrence(n)
    raise ValueError(family)


def _poly_text(poly):
    return text_zpoly(poly) if isinstance(poly, ZPolynomial) else text_cospoly(poly)


def _poly_latex(poly):
    return latex_zpoly(poly) if isinstance(poly, ZPolynomial) else latex_cospoly(poly)


def _poly_numeric(poly, q_value, z=_Z_SAMPLE, theta=_THETA_SAMPLE, lam=_LAMBDA_SAMPLE):
    s_value = math.sqrt(q_value)
    lam_value = q_value**lam
    if isinstance(poly, ZPolynomial):
        return poly.eval_numeric(z, s_value, lam_value)
    return poly.eval_numeric(theta, s_value, lam_value)


def _numeric_crosscheck(poly, other, q_sample, out):
    qv = float(q_sample)
    a = _poly_numeric(poly, qv)
    b = _poly_numeric(other, qv)
    scale = max(abs(a), abs(b), 1.0)
    print(f"numeric cross-check at q = {q_sample} "
          f"(z = {_Z_SAMPLE}, theta = {_THETA_SAMPLE}, lambda = {_LAMBDA_SAMPLE}):", file=out)
    print(f"  primary route:     {a}", file=out)
    print(f"  independent route: {b}", file=out)
    print(f"  relative diff:     {abs(a - b) / scale:.3e}", file=out)


def _cmd_eval(args, parser, out):
    family = args.family
    if "laguerre" in family:
        if args.k is None:
            parser.error(f"family {family} needs --k")
        if args.k < 0:
            parser.error("--k must be >= 0")
    elif args.k is not None:
        parser.error(f"family {family} takes no --k")
    if args.n < 0:
        parser.error("--n must be >= 0")
    order = args.order if args.order is not None else _default_order()
    poly, other = _eval_polynomial(family, args.n, args.k, order)
    if args.format == "json":
        print(render_polynomial_json(poly, family, args.n, args.k,
                                     total_check=(poly == other)), file=out)
    elif args.format == "latex":
        print(_poly_latex(poly), file=out)
    else:
        print(_poly_text(poly), file=out)
    if args.q_sample is not None:
        _numeric_crosscheck(poly, other, args.q_sample, out)
    return 0


# ---------------------------------------------------------------------------
# connect
# ---------------------------------------------------------------------------

def _parse_aux(text, parser):
    if text is None:
        return {}
    try:
        values = [int(x) for x in text.split(",") if x.strip() != ""]
    except ValueError:
        parser.error(f"--aux needs comma-separated integers, got {text!r}")
    return {j + 1: v for j, v in enumerate(values)}


def _connect_table(expansion, fmt):
    """Rows of (label, rendered value) mirroring the contribution tables."""
    rows = []
    for term in expansion.terms:
        value = expansion.rescaled_term_value(term)
        rendered = _poly_text(value) if fmt == "text" else _poly_latex(value)
        rows.append((term.descriptor.label(), rendered))
    return rows


def _cmd_connect(args, parser, out):
    family = args.family
    if args.n < 0:
        parser.error("--n must be >= 0")
    if family == "laguerre":
        if args.k is None:
            parser.error("family laguerre needs --k")
        if args.k < 0:
            parser.error("--k must be >= 0")
    else:
        if args.k is not None:
            parser.error(f"family {family} takes no --k")
        if args.aux is not None:
            parser.error(f"family {family} takes no --aux")
    aux = _parse_aux(args.aux, parser)

    if family == "gegenbauer":
        expansion = gegenbauer_connection(args.n)
        value = gegenbauer_connection_value(expansion)
        check = value == q_gegenbauer_direct(args.n)
        if args.format == "json":
            doc = {
                "family": family, "n": args.n,
                "terms": [
                    {"monomial": text_cmono(t.descriptor), "coefficient": text_beta(t.coefficient)}
                    for t in expansion.terms
                ],
                "total": text_cpoly(expansion.total),
                "total_check": "pass" if check else "fail",
            }
            print(json.dumps(doc, indent=2), file=out)
        elif args.format == "latex":
            print(latex_cpoly(expansion.total), file=out)
        else:
            for term in expansion.terms:
                print(f"{text_cmono(term.descriptor):12s}  {text_beta(term.coefficient)}", file=out)
            print(f"total: {text_cpoly(expansion.total)}", file=out)
            print(f"check against explicit form: {'pass' if check else 'fail'}", file=out)
        if args.q_sample is not None:
            _numeric_crosscheck(value, q_gegenbauer_direct(args.n), args.q_sample, out)
        return 0 if check else 1

    if family == "hermite":
        expansion = hermite_connection(args.n)
        target = q_hermite(args.n)
    else:
        expansion = laguerre_connection(args.n, args.k, aux)
        target = q_laguerre(args.n, args.k)
    check = expansion.rescaled_total() == target

    if args.format == "json":
        doc = polynomial_json_dict(expansion.rescaled_total(), family, args.n,
                                   args.k, total_check=check)
        doc["terms"] = [
            {"solution": t.descriptor.label(),
             "factors": list(t.factors),
             "value": _poly_text(expansion.rescaled_term_value(t))}
            for t in expansion.terms
        ]
        if aux:
            doc["aux"] = {str(j): v for j, v in sorted(aux.items())}
        print(json.dumps(doc, indent=2), file=out)
    elif args.format == "latex":
        for label, rendered in _connect_table(expansion, "latex"):
            print(f"% {label}", file=out)
            print(rendered + r" \\", file=out)
        print("% total", file=out)
        print(_poly_latex(expansion.rescaled_total()), file=out)
    else:
        rows = _connect_table(expansion, "text")
        width = max(len(label) for label, _ in rows)
        for label, rendered in rows:
            print(f"{label:<{width}}  |  {rendered}", file=out)
        print(f"total: {_poly_text(expansion.rescaled_total())}", file=out)
        print(f"check against direct construction: {'pass' if check else 'fail'}", file=out)

    if args.q_sample is not None:
        _numeric_crosscheck(expansion.rescaled_total(), target, args.q_sample, out)
    return 0 if check else 1


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def _cmd_verify(args, parser, out):
    if args.max_n is not None and args.max_n < 0:
        parser.error("--max-n must be >= 0")
    report = run_suite(args.suite, args.max_n)
    if args.format == "json":
        print(report.to_json(), file=out)
    else:
        print(report.format_text(), file=out)
    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            fh.write(report.to_json() + "\n")
    return 0 if report.passed else 1


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "q_sample", None) is not None:
        args.q_sample = _parse_q_sample(args.q_sample, parser)
    out = sys.stdout
    try:
        if args.command == "eval":
            return _cmd_eval(args, parser, out)
        if args.command == "connect":
            return _cmd_connect(args, parser, out)
        return _cmd_verify(args, parser, out)
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
