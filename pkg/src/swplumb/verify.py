"""Acceptance fixture suite: every numbered criterion as a runnable family.

Each fixture family returns (name, passed, detail) triples; the `run` entry
point prints one line per check and reports overall success.  All equalities
are exact rational comparisons except the Gauss-sum family, which is the
package's single floating-point check (tolerance 1e-9).
"""

from __future__ import annotations

import random
from fractions import Fraction
from math import gcd

from . import dedekind
from .brieskorn import BrieskornSpec, brieskorn_seifert, classify, \
    closed_form_invariants
from .corpus import (a_chain, dn_seifert, e_star, nonstar_13_vertex,
                     polygonal_seifert, standard_corpus, three_arm_family)
from .exact import IntMatrix, adjugate_inverse, cyclotomic_field, \
    cyclotomic_polynomial, invert_rational_matrix, smith_normal_form
from .homology import gauss_sum_check, homology_from_lattice, \
    linking_matrix, q_can, spinc_conjugate
from .plumbing import blow_up_edge, blow_up_vertex, build_lattice, \
    casson_walker, k2_plus_nv, numerically_gorenstein
from .seifert import SeifertData, ks_route, lens_chain, seifert_casson_walker, \
    seifert_k2nv, seifert_torsion_shortcut, star_graph
from .torsion import WeightVector, delta_at_one_check, \
    regularized_product, sw0, swiden_consistency, torsion_table, weight_vector

Check = tuple  # (name, passed, detail)


def _pipeline(graph):
    lattice = build_lattice(graph)
    group = homology_from_lattice(lattice)
    return lattice, group


def _summary(label, failures, total) -> Check:
    if failures:
        return (label, False, f"{len(failures)}/{total} failed: {failures[:4]}")
    return (label, True, f"{total} checks")


# -- criterion families -------------------------------------------------------

def lens_sweep():
    """All coprime (p, q) up to 50: closed forms for torsion, lambda, K^2+#V, zero gap."""
    failures = []
    total = 0
    for p in range(2, 51):
        for q in range(1, p):
            if gcd(p, q) != 1:
                continue
            total += 1
            lattice, group = _pipeline(lens_chain(p, q))
            s_qp = dedekind.dr_sum(q, p)
            t1 = torsion_table(lattice, group).t_at_1
            lam = casson_walker(lattice)
            k2 = k2_plus_nv(lattice)
            ok = (t1 == Fraction(p - 1, 4 * p) - s_qp
                  and lam == Fraction(p, 2) * s_qp
                  and k2 == Fraction(2 * (p - 1), p) - 12 * s_qp
                  and t1 - lam / p - k2 / 8 == 0)
            if not ok:
                failures.append((p, q))
    return [_summary("lens closed forms and zero gap, p <= 50", failures, total)]


def a_chain_sweep():
    """Chains of -2 curves up to 29 vertices: 8 sw0 = p - 1."""
    failures = []
    for p in range(2, 31):
        lattice, group = _pipeline(a_chain(p))
        if sw0(lattice, group) != Fraction(p - 1, 8):
            failures.append(p)
    return [_summary("(-2)-chain monopole count, p <= 30", failures, 29)]


def d_family():
    """Two routes for the dihedral-type stars: 8 sw0 = p + 2, p = n - 2."""
    failures = []
    for n in range(4, 13):
        data = dn_seifert(n)
        lattice, group = _pipeline(star_graph(data))
        want = Fraction(n, 8)  # (p + 2)/8 with p = n - 2
        torsion_route = sw0(lattice, group)
        ks = ks_route(data)
        if not (torsion_route == want and ks.applicable and ks.sw0_ks == want):
            failures.append(n)
    return [_summary("dihedral-type stars, both routes, 4 <= n <= 12", failures, 9)]


def e_family():
    """The three exceptional stars: sw0 = 6/8, 7/8, 1."""
    checks = []
    targets = {6: Fraction(6, 8), 7: Fraction(7, 8), 8: Fraction(1)}
    for kind, want in targets.items():
        lattice, group = _pipeline(e_star(kind))
        got = sw0(lattice, group)
        checks.append((f"exceptional star E{kind}: sw0", got == want,
                       f"{got} vs {want}"))
    # E7 via the eta-invariant route (KS = 7)
    ks = ks_route(SeifertData(-2, [(2, 1), (3, 2), (4, 3)]))
    checks.append(("E7 eta-invariant equals 7", ks.ks == 7 and ks.applicable,
                   f"KS = {ks.ks}"))
    # E6 and E8 through the complete-intersection closed forms
    for exps, want_sw, want_sig in [((2, 3, 4), Fraction(3, 4), -6),
                                    ((2, 3, 5), Fraction(1), -8)]:
        rep = closed_form_invariants(BrieskornSpec(exps))
        checks.append((f"intersection link {exps}: signature route",
                       rep.sw0 == want_sw and rep.sigma_f == want_sig
                       and rep.gorenstein_check,
                       f"sw0 = {rep.sw0}, sigma = {rep.sigma_f}"))
    return checks


def three_arm_sweep():
    """Central -3 with three (m, m-1) arms: both routes, zero gap."""
    failures = []
    for m in (2, 4, 5, 7, 8):
        data = three_arm_family(m)
        lattice, group = _pipeline(star_graph(data))
        want = (Fraction(3 * m) - Fraction(m, 3) - 2) / 8
        ks = ks_route(data)
        plus_expected = (m - 3) // 6 + 1 if m > 3 else 0
        ok = (sw0(lattice, group) == want
              and ks.applicable and ks.sw0_ks == want
              and len(ks.s0_plus) == plus_expected
              and sw0(lattice, group) - k2_plus_nv(lattice) / 8 == 0)
        if not ok:
            failures.append(m)
    return [_summary("three-arm family, both routes, m in {2,4,5,7,8}",
                     failures, 5)]


def three_arm_m3():
    """The m = 3 member: eta route inapplicable, torsion route gives 3/4."""
    data = three_arm_family(3)
    lattice, group = _pipeline(star_graph(data))
    t1 = torsion_table(lattice, group).t_at_1
    lam_over = casson_walker(lattice) / group.order
    got = sw0(lattice, group)
    ks = ks_route(data)
    ok = (t1 == Fraction(5, 9) and lam_over == Fraction(-7, 36)
          and got == Fraction(3, 4)
          and got - k2_plus_nv(lattice) / 8 == 0
          and not ks.applicable)
    return [("three-arm family at m = 3 (torsion route only)", ok,
             f"T(1) = {t1}, lambda/|H| = {lam_over}, sw0 = {got}")]


def polygonal_family():
    """Cone-over-polygon stars: 8 sw0 = 17 + nu - sum(a_i), gap 1."""
    failures = []
    cases = ([3, 4, 5], [3, 3, 3, 3], [2, 2, 2, 2, 2],
             [3, 3, 3, 3, 3], [3, 3, 3, 3, 3, 3])
    for a_list in cases:
        data = polygonal_seifert(a_list)
        lattice, group = _pipeline(star_graph(data))
        got = sw0(lattice, group)
        want = Fraction(17 + len(a_list) - sum(a_list), 8)
        gap = got - k2_plus_nv(lattice) / 8
        ks = ks_route(data)
        if not (got == want and gap == 1 and ks.applicable and ks.sw0_ks == want):
            failures.append(a_list)
    return [_summary("polygonal stars: count formula and unit gap",
                     failures, len(cases))]


def nonstar_example():
    """The 13-vertex non-star graph; |H| = 3 gates the transcription."""
    lattice, group = _pipeline(nonstar_13_vertex())
    checks = [("non-star graph: |H| gate", group.order == 3,
               f"|H| = {group.order}")]
    if group.order == 3:
        t1 = torsion_table(lattice, group).t_at_1
        lam_over = casson_walker(lattice) / 3
        got = sw0(lattice, group)
        k2 = k2_plus_nv(lattice)
        ok = (lam_over == Fraction(-49, 36) and t1 == Fraction(8, 9)
              and k2 == 10 and got == Fraction(9, 4)
              and got == Fraction(9, 4) - k2 / 8 + Fraction(10, 8)
              and got - k2 / 8 == 1)
        checks.append(("non-star graph: invariants and unit gap", ok,
                       f"T(1) = {t1}, lambda/|H| = {lam_over}, "
                       f"K^2+#V = {k2}, sw0 = {got}"))
    return checks


def brieskorn_corpus():
    """Complete-intersection corpus: closed forms vs pipeline, signature check."""
    case_i = [(2, 3, 5), (2, 3, 7), (2, 3, 11), (4, 6, 5), (6, 10, 7),
              (6, 10, 7, 11)]
    case_ii = [(4, 2, 2, 3), (8, 2, 2, 3, 5)]
    checks = []
    for exps in case_i + case_ii:
        spec = BrieskornSpec(exps)
        cls = classify(spec)
        if cls.kind == "not_qhs":
            checks.append((f"{exps}: classification", False, "not a QHS"))
            continue
        rep = closed_form_invariants(spec)
        ok = rep.gorenstein_check
        detail = f"{cls.kind}, |H| = {rep.order_h}, sw0 = {rep.sw0}"
        if rep.order_h <= 10 ** 4:
            lattice, group = _pipeline(star_graph(brieskorn_seifert(spec)))
            t1 = torsion_table(lattice, group).t_at_1
            ok = ok and (group.order == rep.order_h
                         and t1 == rep.torsion_closed
                         and casson_walker(lattice) == rep.lambda_closed)
            detail += ", pipeline cross-checked"
        checks.append((f"intersection link {exps}", ok, detail))
    return checks


# -- property families --------------------------------------------------------

def snf_and_inverse_props():
    rng = random.Random(20240901)
    failures = []
    total = 0
    for _ in range(40):
        rows = rng.randrange(1, 5)
        cols = rng.randrange(1, 5)
        mat = IntMatrix([[rng.randrange(-6, 7) for _ in range(cols)]
                         for _ in range(rows)])
        snf = smith_normal_form(mat)
        total += 1
        diag = snf.diagonal
        chain_ok = all(diag[i + 1] % diag[i] == 0 for i in range(len(diag) - 1)
                       if diag[i])
        zeros_last = all(diag[j] == 0 for j in range(len(diag))
                         if any(diag[i] == 0 for i in range(j + 1)))
        if not (snf.U * mat * snf.V == snf.D
                and abs(snf.U.det()) == 1 and abs(snf.V.det()) == 1
                and chain_ok and zeros_last):
            failures.append(mat.entries)
    for _ in range(25):
        n = rng.randrange(1, 6)
        mat = IntMatrix([[rng.randrange(-5, 6) for _ in range(n)]
                         for _ in range(n)])
        total += 1
        if mat.det() == 0:
            continue
        if invert_rational_matrix(mat) != adjugate_inverse(mat):
            failures.append(mat.entries)
    fixed = IntMatrix([[-2, 1], [1, -2]])
    total += 1
    if smith_normal_form(fixed).diagonal != (1, 3):
        failures.append("fixed-chain")
    return [_summary("integer normal form and exact inverse oracles",
                     failures, total)]


def cyclotomic_props():
    failures = []
    total = 0
    if cyclotomic_polynomial(1) != (-1, 1) or cyclotomic_polynomial(4) != (1, 0, 1) \
            or cyclotomic_polynomial(12) != (1, 0, -1, 0, 1):
        failures.append("small-polynomials")
    total += 1
    rng = random.Random(77)
    for n in range(2, 25):
        field = cyclotomic_field(n)
        total += 1
        zero_sum = field.zero()
        for k in range(n):
            zero_sum = zero_sum + field.root_of_unity(k)
        if not zero_sum.is_zero:
            failures.append(("root-sum", n))
        a = field.element([Fraction(rng.randrange(-4, 5), rng.randrange(1, 4))
                           for _ in range(field.degree)])
        b = field.root_of_unity(rng.randrange(n)) + field.rational(2)
        c = field.element([rng.randrange(-3, 4) for _ in range(field.degree)])
        total += 1
        if ((a + b) * c != a * c + b * c or a * b != b * a
                or (a + b) + c != a + (b + c)):
            failures.append(("ring-axioms", n))
        if not a.is_zero:
            total += 1
            if a * a.inverse() != field.one():
                failures.append(("inverse", n))
    return [_summary("cyclotomic field axioms and root sums", failures, total)]


def dedekind_props():
    failures = []
    total = 0
    # reciprocity sweep
    for k in range(1, 61):
        for h in range(1, k):
            if gcd(h, k) != 1:
                continue
            total += 1
            lhs = dedekind.dr_sum(h, k) + dedekind.dr_sum(k, h)
            rhs = Fraction(-1, 4) + Fraction(h * h + k * k + 1, 12 * h * k)
            if lhs != rhs:
                failures.append(("reciprocity", h, k))
    # fast path against the direct oracle, shifted arguments included
    rng = random.Random(5)
    for _ in range(200):
        k = rng.randrange(1, 501)
        h = rng.randrange(-2 * k, 2 * k + 1)
        if gcd(h, k) != 1:
            continue
        x = Fraction(rng.randrange(-12, 13), rng.randrange(1, 13))
        y = Fraction(rng.randrange(-12, 13), rng.randrange(1, 13))
        total += 1
        if dedekind.dr_sum(h, k, x, y) != dedekind.dr_sum_direct(h, k, x, y):
            failures.append(("oracle", h, k, str(x), str(y)))
    # shift periodicity
    for _ in range(40):
        k = rng.randrange(2, 40)
        h = rng.randrange(1, k)
        if gcd(h, k) != 1:
            continue
        x = Fraction(rng.randrange(-6, 7), rng.randrange(1, 9))
        y = Fraction(rng.randrange(-6, 7), rng.randrange(1, 9))
        total += 1
        if dedekind.dr_sum(h, k, x, y) != dedekind.dr_sum(h, k, x + 3, y - 2):
            failures.append(("periodicity", h, k))
    # averaging identity for the sawtooth
    for k in range(1, 31):
        for _ in range(10):
            w = Fraction(rng.randrange(-20, 21), rng.randrange(1, 12))
            total += 1
            lhs = sum(dedekind.dedekind_symbol(Fraction(mu + w, k))
                      for mu in range(k))
            if lhs != dedekind.dedekind_symbol(w):
                failures.append(("averaging", k, str(w)))
    # root-of-unity sums against their closed forms; twist exponents swept low
    for p in range(2, 41):
        for q in range(1, p):
            if gcd(p, q) != 1:
                continue
            for t in ((0, 1, 2, 3) if p <= 15 else (0,)):
                total += 1
                pairs = dedekind.fourier_identity_suite(p, q, t)
                for name, lhs, rhs in pairs:
                    if lhs != rhs:
                        failures.append((name, p, q, t))
    return [_summary("Dedekind sums: reciprocity, oracle, root-of-unity identities",
                     failures, total)]


def torsion_props():
    failures = []
    total = 0
    for name, graph in standard_corpus():
        lattice = build_lattice(graph)
        group = homology_from_lattice(lattice)
        for v0 in range(lattice.size):
            total += 1
            if not delta_at_one_check(lattice, v0):
                failures.append(("order-count", name, v0))
        if group.order == 1 or group.order > 200:
            continue
        # base-vertex and scale independence
        wv_cache = {}
        for chi in group.characters():
            if chi.is_trivial:
                continue
            exps = [group.char_exponent(chi, gi) for gi in group.generator_images]
            values = set()
            for v0 in range(lattice.size):
                if exps[v0] or any(exps[u] for u in lattice.neighbors[v0]):
                    wv = wv_cache.get(v0)
                    if wv is None:
                        wv = wv_cache[v0] = weight_vector(lattice, v0)
                    values.add(regularized_product(lattice, group, chi, wv))
                    if v0 == wv.v0 and len(values) == 1:
                        scaled = WeightVector(v0=wv.v0, m=3 * wv.m,
                                              w=tuple(3 * x for x in wv.w))
                        values.add(regularized_product(lattice, group, chi, scaled))
            total += 1
            if len(values) != 1:
                failures.append(("independence", name, chi.exponents))
        # conjugation symmetry of the transform
        sample = [group.identity] + [h for h in group.elements()][1:3]
        for h in sample:
            table = torsion_table(lattice, group, h)
            conj = torsion_table(lattice, group, spinc_conjugate(lattice, group, h))
            total += 1
            if any(val != conj.entries[group.conjugate_character(chi)]
                   for chi, val in table.entries.items()):
                failures.append(("symmetry", name, h))
    return [_summary("torsion transform: order counting, independence, symmetry",
                     failures, total)]


def swiden_family():
    failures = []
    total = 0
    for name, graph in standard_corpus():
        lattice = build_lattice(graph)
        group = homology_from_lattice(lattice)
        if group.order > 500 or group.order == 1:
            continue
        sample = [group.identity] + [h for h in group.elements()][-1:]
        for h in sample:
            total += 1
            if not swiden_consistency(lattice, group, h, max_order=500):
                failures.append((name, h))
    return [_summary("torsion vs quadratic-function identities, |H| <= 500",
                     failures, total)]


def quadratic_function_family():
    failures = []
    total = 0
    rng = random.Random(11)
    for name, graph in standard_corpus():
        lattice = build_lattice(graph)
        group = homology_from_lattice(lattice)
        if group.order > 200 or group.order == 1:
            continue
        elements = list(group.elements())
        qvals = {h: q_can(lattice, group, h) for h in elements}
        bmat = linking_matrix(lattice, group)
        k = group.rank

        def bform(g, h):
            acc = Fraction(0)
            for i in range(k):
                if g[i]:
                    acc += g[i] * sum(bmat[i][j] * h[j] for j in range(k) if h[j])
            return acc % 1

        # quadratic-function law against the linking form
        for g in elements:
            qg = qvals[g]
            for h in elements:
                total += 1
                lhs = (qvals[group.add(g, h)] - qg - qvals[h]) % 1
                if lhs != bform(g, h):
                    failures.append(("law", name, g, h))
                    break
        # lift independence: shift a lift by a column of the intersection matrix
        for h in elements[:6]:
            base = group.lift(h)
            col = rng.randrange(lattice.size)
            shifted = tuple(x + lattice.I[v, col] for v, x in enumerate(base))
            total += 1
            if qvals[h] != q_can(lattice, group, h, lift=shifted):
                failures.append(("lift", name, h))
        # quadratic form refinement in the integral-cycle case
        if numerically_gorenstein(lattice):
            for h in elements:
                for c in (2, 3):
                    total += 1
                    if (qvals[group.scale(c, h)] - c * c * qvals[h]) % 1 != 0:
                        failures.append(("form", name, h, c))
        # conjugation is an involution
        for h in elements:
            total += 1
            twice = spinc_conjugate(lattice, group,
                                    spinc_conjugate(lattice, group, h))
            if twice != h:
                failures.append(("involution", name, h))
        # linking form nondegeneracy
        rows = {tuple(bform(g, h) for h in elements) for g in elements}
        total += 1
        if len(rows) != group.order:
            failures.append(("nondegenerate", name))
    # eighth-root-of-unity Gauss sums (floating point, labelled)
    for name, graph in standard_corpus():
        lattice = build_lattice(graph)
        group = homology_from_lattice(lattice)
        if group.order > 500:
            continue
        total += 1
        computed, predicted = gauss_sum_check(lattice, group)
        if abs(computed - predicted) >= 1e-9:
            failures.append(("gauss", name))
    return [_summary("quadratic functions, linking form, Gauss sums",
                     failures, total)]


def blowup_family():
    failures = []
    total = 0
    for name, graph in standard_corpus():
        lattice = build_lattice(graph)
        group = homology_from_lattice(lattice)
        if group.order > 300:
            continue
        base = (group.order, k2_plus_nv(lattice), casson_walker(lattice),
                torsion_table(lattice, group).t_at_1, sw0(lattice, group))
        moved = [blow_up_vertex(graph, graph.ids[0])]
        if graph.edges:
            moved.append(blow_up_edge(graph, graph.edges[0]))
        for g2 in moved:
            lattice2 = build_lattice(g2)
            group2 = homology_from_lattice(lattice2)
            got = (group2.order, k2_plus_nv(lattice2), casson_walker(lattice2),
                   torsion_table(lattice2, group2).t_at_1, sw0(lattice2, group2))
            total += 1
            if got != base:
                failures.append(name)
    return [_summary("blowup stability of all invariants", failures, total)]


def seifert_round_trip():
    failures = []
    total = 0
    rng = random.Random(321)
    produced = 0
    while produced < 20:
        nu = rng.randrange(3, 6)
        arms = []
        for _ in range(nu):
            a = rng.randrange(2, 13)
            w = rng.randrange(1, a)
            if gcd(a, w) != 1:
                w = 1
            arms.append((a, w))
        b = -rng.randrange(1, 4) - nu // 2
        try:
            data = SeifertData(b, arms)
        except ValueError:
            continue
        produced += 1
        lattice = build_lattice(star_graph(data))
        group = homology_from_lattice(lattice)
        total += 1
        ok = (seifert_casson_walker(data) == casson_walker(lattice)
              and seifert_k2nv(data) == k2_plus_nv(lattice)
              and data.order_h == group.order
              and data.b <= data.e < 0)
        # alternative absorption of the central term into the last arm
        alt = list(-w for _, w in data.arms)
        alt[-1] -= data.b * data.arms[-1][0]
        ok = ok and seifert_casson_walker(data, betas=tuple(alt)) \
            == seifert_casson_walker(data)
        if not ok:
            failures.append((b, arms))
    checks = [_summary("random Seifert data round trips", failures, total)]
    # arm-level torsion shortcut against the generic route, star corpus
    short_fail = []
    star_data = ([dn_seifert(n) for n in (4, 5, 6)]
                 + [three_arm_family(m) for m in (2, 3, 4, 5)]
                 + [polygonal_seifert(a) for a in ([3, 4, 5], [2] * 5)]
                 + [SeifertData(-2, [(2, 1), (3, 2), (4, 3)])])
    for data in star_data:
        lattice = build_lattice(star_graph(data))
        group = homology_from_lattice(lattice)
        for h in (group.identity, next(reversed(list(group.elements())))):
            if seifert_torsion_shortcut(data, lattice, group, h) \
                    != torsion_table(lattice, group, h).t_at_1:
                short_fail.append(data.arms)
    checks.append(_summary("arm-level torsion shortcut agreement",
                           short_fail, 2 * len(star_data)))
    return checks


def eta_route_cross_check():
    """Random Seifert data: whenever the eta route applies it must equal the torsion route."""
    rng = random.Random(424242)
    failures = []
    tried = applicable = 0
    while applicable < 25 and tried < 4000:
        tried += 1
        nu = rng.randrange(3, 5)
        arms = []
        for _ in range(nu):
            a = rng.randrange(2, 9)
            w = rng.randrange(1, a)
            if gcd(a, w) != 1:
                w = 1
            arms.append((a, w))
        b = -rng.randrange(1, 4)
        try:
            data = SeifertData(b, arms)
        except ValueError:
            continue
        if data.order_h > 250:
            continue
        report = ks_route(data)
        if not report.applicable:
            continue
        applicable += 1
        lattice = build_lattice(star_graph(data))
        group = homology_from_lattice(lattice)
        if report.sw0_ks != sw0(lattice, group):
            failures.append((b, arms))
    return [_summary("eta route equals torsion route when applicable",
                     failures, applicable)]


def unimodular_family():
    failures = []
    graphs = [("E8", e_star(8)),
              ("Sigma(2,3,7)", star_graph(brieskorn_seifert(BrieskornSpec((2, 3, 7))))),
              ("Sigma(2,3,11)", star_graph(brieskorn_seifert(BrieskornSpec((2, 3, 11)))))]
    for name, graph in graphs:
        lattice = build_lattice(graph)
        group = homology_from_lattice(lattice)
        if not (group.order == 1
                and sw0(lattice, group) == -casson_walker(lattice)):
            failures.append(name)
    return [_summary("unimodular graphs: monopole count is minus Casson",
                     failures, len(graphs))]


def nonnegativity_sweep():
    failures = []
    total = 0
    items = standard_corpus()
    for exps in [(2, 3, 5), (4, 6, 5), (4, 2, 2, 3)]:
        items.append((f"link{exps}",
                      star_graph(brieskorn_seifert(BrieskornSpec(exps)))))
    for name, graph in items:
        lattice = build_lattice(graph)
        group = homology_from_lattice(lattice)
        total += 1
        gap = sw0(lattice, group) - k2_plus_nv(lattice) / 8
        if gap < 0:
            failures.append((name, gap))
    return [_summary("conjectured gap nonnegative across the corpus",
                     failures, total)]


FIXTURES = (
    ("01-lens-spaces", lens_sweep),
    ("02-minus-two-chains", a_chain_sweep),
    ("03-dihedral-stars", d_family),
    ("04-exceptional-stars", e_family),
    ("05-three-arm-family", three_arm_sweep),
    ("06-three-arm-m3", three_arm_m3),
    ("07-polygonal-stars", polygonal_family),
    ("08-nonstar-graph", nonstar_example),
    ("09-intersection-links", brieskorn_corpus),
    ("10-normal-form-oracles", snf_and_inverse_props),
    ("11-cyclotomic-axioms", cyclotomic_props),
    ("12-dedekind-identities", dedekind_props),
    ("13-torsion-properties", torsion_props),
    ("14-quadratic-identities", swiden_family),
    ("15-linking-and-gauss", quadratic_function_family),
    ("16-blowup-stability", blowup_family),
    ("17-seifert-round-trip", seifert_round_trip),
    ("18-eta-route-random", eta_route_cross_check),
    ("19-unimodular", unimodular_family),
    ("20-nonnegative-gap", nonnegativity_sweep),
)


def fixture_names():
    return tuple(name for name, _ in FIXTURES)


def run(names=None, out=print) -> bool:
    """Run the fixture families (all by default); one pass/fail line per check."""
    wanted = set(names) if names else None
    all_ok = True
    for name, fn in FIXTURES:
        if wanted and name not in wanted:
            continue
        for label, passed, detail in fn():
            flag = "PASS" if passed else "FAIL"
            out(f"[{flag}] {name}: {label} ({detail})")
            all_ok = all_ok and passed
    out("result: " + ("all fixtures passed" if all_ok else "FAILURES detected"))
    return all_ok
