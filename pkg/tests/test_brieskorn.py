"""Diagonal complete intersection links: classification and closed forms."""

from fractions import Fraction
from math import gcd

import pytest

from swplumb.brieskorn import (BrieskornSpec, brieskorn_seifert, classify,
                               closed_form_invariants, order_of_h)
from swplumb.errors import NotQHS
from swplumb.homology import homology_from_lattice
from swplumb.plumbing import build_lattice, casson_walker
from swplumb.seifert import star_graph
from swplumb.torsion import torsion_table

CORPUS = [(2, 3, 5), (2, 3, 7), (2, 3, 11), (4, 6, 5), (6, 10, 7),
          (6, 10, 7, 11), (4, 2, 2, 3), (8, 2, 2, 3, 5)]


class TestClassification:
    def test_pairwise_coprime(self):
        cls = classify(BrieskornSpec((2, 3, 5)))
        assert cls.kind == "case_i" and cls.d == 1

    def test_two_power_pattern(self):
        cls = classify(BrieskornSpec((4, 2, 2, 3)))
        assert cls.kind == "case_ii"
        assert cls.d == 2
        assert tuple(sorted(cls.bs)) == (1, 1, 1, 3)

    def test_positive_genus(self):
        assert classify(BrieskornSpec((2, 2, 2, 2))).kind == "not_qhs"
        spec = BrieskornSpec((2, 2, 2, 2))
        assert spec.genus != 0
        with pytest.raises(NotQHS):
            order_of_h(spec)
        with pytest.raises(NotQHS):
            closed_form_invariants(spec)

    def test_shared_pair(self):
        cls = classify(BrieskornSpec((4, 6, 5)))
        assert cls.kind == "case_i" and cls.d == 2
        assert cls.bs == (2, 3, 5)

    def test_any_four_exponents_coprime(self):
        for exps in CORPUS:
            if len(exps) < 4:
                continue
            n = len(exps)
            for a in range(n):
                for b in range(a + 1, n):
                    for c in range(b + 1, n):
                        for d in range(c + 1, n):
                            g = gcd(gcd(exps[a], exps[b]), gcd(exps[c], exps[d]))
                            assert g == 1

    def test_validation(self):
        with pytest.raises(ValueError):
            BrieskornSpec((2, 3))
        with pytest.raises(ValueError):
            BrieskornSpec((1, 3, 5))


class TestGroupOrder:
    def test_examples(self):
        assert order_of_h(BrieskornSpec((2, 3, 5))) == 1
        assert order_of_h(BrieskornSpec((4, 6, 5))) == 5
        assert order_of_h(BrieskornSpec((4, 2, 2, 3))) == 108

    def test_against_lattice_determinant(self):
        for exps in CORPUS:
            spec = BrieskornSpec(exps)
            want = order_of_h(spec)
            if want > 10 ** 4:
                continue
            lattice = build_lattice(star_graph(brieskorn_seifert(spec)))
            assert lattice.order_h == want, exps


class TestSeifertConstruction:
    def test_degree_values(self):
        assert brieskorn_seifert(BrieskornSpec((2, 3, 5))).e == Fraction(-1, 30)
        assert brieskorn_seifert(BrieskornSpec((2, 3, 7))).e == Fraction(-1, 42)
        assert brieskorn_seifert(BrieskornSpec((4, 6, 5))).e == Fraction(-1, 30)

    def test_poincare_graph_is_the_eight_star(self):
        graph = star_graph(brieskorn_seifert(BrieskornSpec((2, 3, 5))))
        assert len(graph.vertices) == 8
        assert all(e == -2 for _, e in graph.vertices)

    def test_two_power_case_has_even_center(self):
        for exps in [(4, 2, 2, 3), (8, 2, 2, 3, 5), (2, 2, 2, 3)]:
            spec = BrieskornSpec(exps)
            if classify(spec).kind != "case_ii":
                continue
            assert brieskorn_seifert(spec).b % 2 == 0, exps


class TestClosedForms:
    def test_poincare_values(self):
        rep = closed_form_invariants(BrieskornSpec((2, 3, 5)))
        assert rep.torsion_closed == 0
        assert rep.sw0 == 1 == -rep.lambda_closed
        assert rep.sigma_f == -8
        assert rep.gorenstein_check

    def test_237(self):
        rep = closed_form_invariants(BrieskornSpec((2, 3, 7)))
        assert rep.gorenstein_check

    def test_shared_pair_torsion(self):
        rep = closed_form_invariants(BrieskornSpec((4, 6, 5)))
        assert rep.torsion_closed == Fraction(30 * 2 * 1, 24) * (1 - Fraction(1, 25))
        assert rep.gorenstein_check

    def test_corpus_signature_identity(self):
        for exps in CORPUS:
            rep = closed_form_invariants(BrieskornSpec(exps))
            assert rep.gorenstein_check, exps
            assert -rep.sw0 == rep.sigma_f / 8, exps

    def test_corpus_matches_generic_pipeline(self):
        for exps in CORPUS:
            spec = BrieskornSpec(exps)
            rep = closed_form_invariants(spec)
            if rep.order_h > 10 ** 4:
                continue
            lattice = build_lattice(star_graph(brieskorn_seifert(spec)))
            group = homology_from_lattice(lattice)
            assert group.order == rep.order_h, exps
            assert torsion_table(lattice, group).t_at_1 == rep.torsion_closed, exps
            assert casson_walker(lattice) == rep.lambda_closed, exps
