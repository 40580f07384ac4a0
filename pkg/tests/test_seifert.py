"""Seifert data, star graphs, closed forms, eta-invariant route, arm shortcut."""

from fractions import Fraction

import pytest

from swplumb.corpus import dn_seifert, polygonal_seifert, three_arm_family
from swplumb.homology import homology_from_lattice
from swplumb.plumbing import build_lattice, casson_walker, k2_plus_nv
from swplumb.seifert import (SeifertData, hj_expand, ks_route, lens_chain,
                             seifert_casson_walker, seifert_k2nv,
                             seifert_torsion_shortcut, star_graph)
from swplumb.torsion import sw0, torsion_table


def pipeline(data):
    lattice = build_lattice(star_graph(data))
    return lattice, homology_from_lattice(lattice)


class TestContinuedFractions:
    def test_examples(self):
        assert hj_expand(2, 1) == [2]
        assert hj_expand(3, 2) == [2, 2]
        assert hj_expand(5, 3) == [2, 3]
        assert hj_expand(4, 1) == [4]
        assert hj_expand(7, 5) == [2, 2, 3]

    def test_entries_at_least_two(self):
        from math import gcd
        for a in range(2, 40):
            for w in range(1, a):
                if gcd(a, w) == 1:
                    assert all(c >= 2 for c in hj_expand(a, w))

    def test_validation(self):
        with pytest.raises(ValueError):
            hj_expand(4, 2)
        with pytest.raises(ValueError):
            hj_expand(3, 3)


class TestStarGraph:
    def test_dihedral_four(self):
        graph = star_graph(dn_seifert(4))
        assert len(graph.vertices) == 4
        assert all(e == -2 for _, e in graph.vertices)

    def test_three_arm_m2(self):
        graph = star_graph(three_arm_family(2))
        eulers = dict(graph.vertices)
        assert eulers["c"] == -3
        assert sum(1 for _, e in graph.vertices if e == -2) == 3

    def test_e7_shape(self):
        graph = star_graph(SeifertData(-2, [(2, 1), (3, 2), (4, 3)]))
        assert len(graph.vertices) == 7
        assert all(e == -2 for _, e in graph.vertices)

    def test_lens_chains(self):
        assert [e for _, e in lens_chain(2, 1).vertices] == [-2]
        assert [e for _, e in lens_chain(3, 2).vertices] == [-2, -2]
        assert [e for _, e in lens_chain(4, 1).vertices] == [-4]


class TestSeifertData:
    def test_validation(self):
        with pytest.raises(ValueError):
            SeifertData(-2, [(2, 1), (3, 2)])          # too few arms
        with pytest.raises(ValueError):
            SeifertData(-2, [(2, 1), (4, 2), (3, 1)])  # non-coprime arm
        with pytest.raises(ValueError):
            SeifertData(0, [(2, 1), (2, 1), (2, 1)])   # degree not negative
        with pytest.raises(ValueError):
            SeifertData(-2, [(1, 0), (2, 1), (2, 1)])  # trivial arm

    def test_degree_bounds(self):
        for data in (dn_seifert(5), three_arm_family(4),
                     polygonal_seifert([3, 4, 5])):
            assert data.b <= data.e < 0

    def test_group_order(self):
        data = three_arm_family(3)
        assert data.order_h == 27
        lattice, group = pipeline(data)
        assert group.order == 27


class TestClosedForms:
    def test_casson_walker_cross_route(self):
        for data in (dn_seifert(4), dn_seifert(7),
                     SeifertData(-2, [(2, 1), (3, 2), (4, 3)]),
                     three_arm_family(3), polygonal_seifert([3, 3, 3, 3])):
            lattice = build_lattice(star_graph(data))
            assert seifert_casson_walker(data) == casson_walker(lattice)

    def test_k2nv_cross_route(self):
        for data in (dn_seifert(4), three_arm_family(2),
                     polygonal_seifert([2, 2, 2, 2, 2])):
            lattice = build_lattice(star_graph(data))
            assert seifert_k2nv(data) == k2_plus_nv(lattice)

    def test_three_arm_m2_value(self):
        assert seifert_k2nv(three_arm_family(2)) == Fraction(10, 3)

    def test_three_arm_m3_value(self):
        data = three_arm_family(3)
        assert seifert_casson_walker(data) / data.order_h == Fraction(-7, 36)

    def test_alternative_absorption(self):
        data = three_arm_family(4)
        alt = [-w for _, w in data.arms]
        alt[1] -= data.b * data.arms[1][0]
        assert seifert_casson_walker(data, betas=tuple(alt)) == \
            seifert_casson_walker(data)


class TestEtaRoute:
    def test_dihedral_count(self):
        for n in (4, 6, 9):
            report = ks_route(dn_seifert(n))
            assert report.applicable
            assert report.s0_plus == () and report.s0_minus == ()
            assert 8 * report.sw0_ks == n  # p + 2 with p = n - 2

    def test_e7_value(self):
        report = ks_route(SeifertData(-2, [(2, 1), (3, 2), (4, 3)]))
        assert report.ks == 7
        assert report.applicable and report.sw0_ks == Fraction(7, 8)

    def test_three_arm_counts(self):
        for m in (2, 4, 5, 7, 8):
            report = ks_route(three_arm_family(m))
            want_plus = (m - 3) // 6 + 1 if m > 3 else 0
            assert len(report.s0_plus) == want_plus, m
            assert report.s0_minus == ()
            assert report.applicable
            assert 8 * report.sw0_ks == Fraction(3 * m) - Fraction(m, 3) - 2

    def test_three_arm_m3_inapplicable(self):
        report = ks_route(three_arm_family(3))
        assert not report.applicable
        assert report.sw0_ks is None

    def test_polygonal_two_point_count(self):
        report = ks_route(polygonal_seifert([3, 4, 5]))
        assert len(report.s0_plus) == 1 and len(report.s0_minus) == 1
        assert report.applicable

    def test_matches_torsion_route_when_applicable(self):
        for data in (dn_seifert(5), three_arm_family(4),
                     polygonal_seifert([3, 3, 3, 3])):
            report = ks_route(data)
            assert report.applicable
            lattice, group = pipeline(data)
            assert report.sw0_ks == sw0(lattice, group)


class TestArmShortcut:
    def test_matches_generic_route(self):
        for data in (dn_seifert(4), three_arm_family(3),
                     polygonal_seifert([3, 4, 5]),
                     SeifertData(-2, [(2, 1), (3, 2), (4, 3)])):
            lattice, group = pipeline(data)
            assert seifert_torsion_shortcut(data, lattice, group) == \
                torsion_table(lattice, group).t_at_1

    def test_three_arm_m3_value(self):
        data = three_arm_family(3)
        lattice, group = pipeline(data)
        assert seifert_torsion_shortcut(data, lattice, group) == Fraction(5, 9)

    def test_nontrivial_offset(self):
        data = dn_seifert(4)
        lattice, group = pipeline(data)
        for h in group.elements():
            assert seifert_torsion_shortcut(data, lattice, group, h) == \
                torsion_table(lattice, group, h).t_at_1
