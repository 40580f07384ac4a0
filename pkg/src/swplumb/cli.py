"""Command-line interface: graph ingestion, manifold builders, verification runs.

Exit codes: 0 success, 1 invalid input, 2 resource cap exceeded.  Rational
values are printed as exact fractions; JSON output carries num/den pairs.
The one floating-point surface (the Gauss-sum cross-check) is labelled as such.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from math import gcd

from .brieskorn import BrieskornSpec, brieskorn_seifert, classify, \
    closed_form_invariants
from .dedekind import dr_sum, dr_sum_direct
from .errors import OrderCapExceeded, SwplumbError
from .homology import DEFAULT_ORDER_CAP, homology_from_lattice
from .plumbing import PlumbingGraph, build_lattice
from .report import compute_report_from, render_table, report_to_json
from .seifert import SeifertData, ks_route, lens_chain, seifert_casson_walker, \
    seifert_k2nv, seifert_torsion_shortcut, star_graph
from . import verify as verify_mod

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_CAP = 2


def _frac(x: Fraction) -> str:
    return str(x)


def _match(tag: str, lhs, rhs) -> str:
    flag = "MATCH" if lhs == rhs else "MISMATCH"
    return f"  {tag}: {lhs} vs {rhs}  [{flag}]"


def _parse_fraction(text: str) -> Fraction:
    return Fraction(text)


def _compute(graph, args):
    lattice = build_lattice(graph)
    group = homology_from_lattice(lattice)
    report = compute_report_from(lattice, group, max_order=args.max_order,
                                 all_spinc=args.all_spinc, threads=args.threads)
    return report, lattice, group


def _print_report(report, args, cross=None, cross_title="route cross-checks"):
    if args.format == "json":
        doc = report_to_json(report)
        if cross:
            doc["cross_checks"] = cross
        print(json.dumps(doc, sort_keys=True))
    else:
        print(render_table(report))
        if cross:
            print()
            print(f"{cross_title}:")
            for line in cross:
                print(line)


def _cmd_graph(args) -> int:
    try:
        with open(args.path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        print(f"error: cannot read {args.path}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except json.JSONDecodeError as exc:
        print(f"error: {args.path} line {exc.lineno} col {exc.colno}: {exc.msg}",
              file=sys.stderr)
        return EXIT_INPUT
    graph = PlumbingGraph.from_dict(doc)
    report, _, _ = _compute(graph, args)
    _print_report(report, args)
    return EXIT_OK


def _cmd_lens(args) -> int:
    p, q = args.p, args.q
    if not (0 < q < p) or gcd(p, q) != 1:
        print(f"error: need coprime 0 < q < p, got p={p} q={q}", file=sys.stderr)
        return EXIT_INPUT
    graph = lens_chain(p, q)
    report, _, _ = _compute(graph, args)
    s_qp = dr_sum(q, p)
    lines = [
        _match("torsion at 1", report.torsion_at_1, Fraction(p - 1, 4 * p) - s_qp),
        _match("Casson-Walker", report.casson_walker, Fraction(p, 2) * s_qp),
        _match("K^2 + #V", report.k2_plus_nv,
               Fraction(2 * (p - 1), p) - 12 * s_qp),
    ]
    _print_report(report, args, lines, "route cross-checks (lens closed forms)")
    return EXIT_OK


def _cmd_seifert(args) -> int:
    arms = []
    for spec in args.arm:
        try:
            a_txt, w_txt = spec.split("/")
            arms.append((int(a_txt), int(w_txt)))
        except ValueError:
            print(f"error: arm {spec!r} is not of the form alpha/omega",
                  file=sys.stderr)
            return EXIT_INPUT
    try:
        data = SeifertData(args.b, arms)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    graph = star_graph(data)
    report, lattice, group = _compute(graph, args)
    ks = ks_route(data)
    lines = [
        _match("Casson-Walker (closed form)", report.casson_walker,
               seifert_casson_walker(data)),
        _match("K^2 + #V (closed form)", report.k2_plus_nv, seifert_k2nv(data)),
        _match("torsion at 1 (arm shortcut)", report.torsion_at_1,
               seifert_torsion_shortcut(data, lattice, group,
                                        max_order=args.max_order)),
        f"  eta-invariant route: KS = {ks.ks}, |S0+| = {len(ks.s0_plus)}, "
        f"|S0-| = {len(ks.s0_minus)}, applicable = {ks.applicable}",
    ]
    if ks.applicable:
        lines.append(_match("sw0 via eta route", report.sw0, ks.sw0_ks))
    _print_report(report, args, lines, "route cross-checks (Seifert closed forms)")
    return EXIT_OK


def _cmd_brieskorn(args) -> int:
    try:
        spec = BrieskornSpec(args.exponents)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    cls = classify(spec)
    if cls.kind == "not_qhs":
        print(f"error: {tuple(args.exponents)} is not a rational homology "
              f"sphere (base genus {spec.genus})", file=sys.stderr)
        return EXIT_INPUT
    closed = closed_form_invariants(spec)
    data = brieskorn_seifert(spec)
    graph = star_graph(data)
    report, _, _ = _compute(graph, args)
    flag = "MATCH" if closed.gorenstein_check else "MISMATCH"
    lines = [
        _match("|H| (closed form)", report.order_h, closed.order_h),
        _match("torsion at 1 (closed form)", report.torsion_at_1,
               closed.torsion_closed),
        _match("Casson-Walker (closed form)", report.casson_walker,
               closed.lambda_closed),
        _match("sw0 (closed form)", report.sw0, closed.sw0),
        f"  fiber signature = {closed.sigma_f}; "
        f"-sw0 vs sigma/8: {-closed.sw0} vs {closed.sigma_f / 8}  [{flag}]",
    ]
    _print_report(report, args, lines,
                  f"route cross-checks (classification {cls.kind}, "
                  f"parameter {cls.d}, parts {cls.bs})")
    return EXIT_OK


def _cmd_dedekind(args) -> int:
    h, k = args.h, args.k
    if k < 1 or gcd(h, k) != 1:
        print(f"error: need coprime h, k with k >= 1, got h={h} k={k}",
              file=sys.stderr)
        return EXIT_INPUT
    try:
        x = _parse_fraction(args.x)
        y = _parse_fraction(args.y)
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: bad shift argument: {exc}", file=sys.stderr)
        return EXIT_INPUT
    fast = dr_sum(h, k, x, y)
    direct = dr_sum_direct(h, k, x, y)
    if args.format == "json":
        print(json.dumps({
            "h": h, "k": k,
            "x": {"num": x.numerator, "den": x.denominator},
            "y": {"num": y.numerator, "den": y.denominator},
            "value": {"num": fast.numerator, "den": fast.denominator},
            "oracle_agrees": fast == direct,
        }, sort_keys=True))
    else:
        print(f"s({h},{k};{x},{y}) = {fast}")
        print(f"direct summation oracle: {direct}  "
              f"[{'MATCH' if fast == direct else 'MISMATCH'}]")
    return EXIT_OK if fast == direct else EXIT_INPUT


def _cmd_verify(args) -> int:
    if args.list:
        for name in verify_mod.fixture_names():
            print(name)
        return EXIT_OK
    ok = verify_mod.run(out=print)
    return EXIT_OK if ok else EXIT_INPUT


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="swplumb",
        description="Exact torsion / Casson-Walker / monopole-count invariants "
                    "of negative-definite plumbed 3-manifolds.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("table", "json"), default="table")
        p.add_argument("--max-order", type=int, default=DEFAULT_ORDER_CAP,
                       help="cap on |H| for character sums (default 10^6)")
        p.add_argument("--all-spinc", action="store_true",
                       help="also list sw0 for every spin-c offset")
        p.add_argument("--threads", type=int, default=1,
                       help="worker threads for the character reduction")

    p_graph = sub.add_parser("graph", help="invariants of a plumbing graph JSON file")
    p_graph.add_argument("path")
    common(p_graph)
    p_graph.set_defaults(func=_cmd_graph)

    p_lens = sub.add_parser("lens", help="lens space from coprime p, q")
    p_lens.add_argument("p", type=int)
    p_lens.add_argument("q", type=int)
    common(p_lens)
    p_lens.set_defaults(func=_cmd_lens)

    p_seif = sub.add_parser("seifert", help="Seifert manifold from normalized data")
    p_seif.add_argument("--b", type=int, required=True)
    p_seif.add_argument("--arm", action="append", required=True,
                        metavar="ALPHA/OMEGA")
    common(p_seif)
    p_seif.set_defaults(func=_cmd_seifert)

    p_brie = sub.add_parser("brieskorn",
                            help="diagonal complete intersection link")
    p_brie.add_argument("exponents", type=int, nargs="+")
    common(p_brie)
    p_brie.set_defaults(func=_cmd_brieskorn)

    p_ded = sub.add_parser("dedekind", help="Dedekind-Rademacher sum")
    p_ded.add_argument("h", type=int)
    p_ded.add_argument("k", type=int)
    p_ded.add_argument("--x", default="0", help="rational shift, e.g. 1/2")
    p_ded.add_argument("--y", default="0")
    p_ded.add_argument("--format", choices=("table", "json"), default="table")
    p_ded.set_defaults(func=_cmd_dedekind)

    p_ver = sub.add_parser("verify", help="run the acceptance fixture suite")
    p_ver.add_argument("--list", action="store_true",
                       help="print fixture names without running")
    p_ver.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except OrderCapExceeded as exc:
        print(f"error: {exc} (raise --max-order to proceed)", file=sys.stderr)
        return EXIT_CAP
    except (SwplumbError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
