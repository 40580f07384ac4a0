"""Torsion transform: regularization, tables, monopole counts, identities."""

from fractions import Fraction

import pytest

from swplumb.corpus import (a_chain, nonstar_13_vertex, standard_corpus,
                            three_arm_family)
from swplumb.errors import InvalidBaseVertex
from swplumb.homology import homology_from_lattice, spinc_conjugate
from swplumb.plumbing import build_lattice
from swplumb.seifert import lens_chain, star_graph
from swplumb.torsion import (WeightVector, conjecture_gap, delta_at_one_check,
                             regularized_product, sw0, swiden_consistency,
                             torsion_table, weight_vector)


def pipeline(graph):
    lattice = build_lattice(graph)
    return lattice, homology_from_lattice(lattice)


class TestWeightVector:
    def test_single_vertex(self):
        lattice, _ = pipeline(a_chain(2))
        wv = weight_vector(lattice, 0)
        assert (wv.m, wv.w) == (2, (1,))

    def test_chain(self):
        lattice, _ = pipeline(a_chain(3))
        assert weight_vector(lattice, 0) == WeightVector(v0=0, m=3, w=(2, 1))

    def test_star_center(self):
        from swplumb.brieskorn import BrieskornSpec, brieskorn_seifert
        graph = star_graph(brieskorn_seifert(BrieskornSpec((2, 3, 5))))
        lattice, _ = pipeline(graph)
        center = lattice.index_of("c")
        wv = weight_vector(lattice, center)
        assert wv.m == 1
        assert wv.w[center] == 30
        ends = [lattice.index_of(i) for i in ("a0v0", "a1v1", "a2v3")]
        assert [wv.w[v] for v in ends] == [15, 10, 6]


class TestRegularizedProduct:
    def test_no_regularization_needed(self):
        lattice, group = pipeline(a_chain(2))
        chi = list(group.characters())[1]
        wv = weight_vector(lattice, 0)
        value = regularized_product(lattice, group, chi, wv)
        # isolated vertex has degree 0: (chi(g) - 1)^(-2) = 1/4
        assert value == group.field.rational(Fraction(1, 4))

    def test_lens_product_shape(self):
        lattice, group = pipeline(lens_chain(7, 3))
        field = group.field
        table = torsion_table(lattice, group)
        ends = [v for v in range(lattice.size) if lattice.degrees[v] == 1]
        for chi in group.characters():
            if chi.is_trivial:
                continue
            exps = [group.char_exponent(chi, group.generator_images[v])
                    for v in ends]
            want = field.inv_root_minus_one(exps[0]) \
                * field.inv_root_minus_one(exps[1])
            assert table.entries[chi] == want

    def test_inadmissible_base_vertex(self):
        # on the m=3 family some characters fix the whole central region
        lattice, group = pipeline(star_graph(three_arm_family(3)))
        images = group.generator_images
        found = False
        for chi in group.characters():
            if chi.is_trivial:
                continue
            exps = [group.char_exponent(chi, g) for g in images]
            for v0 in range(lattice.size):
                if exps[v0] == 0 and all(exps[u] == 0
                                         for u in lattice.neighbors[v0]):
                    wv = weight_vector(lattice, v0)
                    with pytest.raises(InvalidBaseVertex):
                        regularized_product(lattice, group, chi, wv)
                    found = True
                    break
            if found:
                break
        assert found

    def test_base_vertex_independence(self):
        for name, graph in standard_corpus():
            lattice, group = pipeline(graph)
            if not 1 < group.order <= 120:
                continue
            for chi in group.characters():
                if chi.is_trivial:
                    continue
                exps = [group.char_exponent(chi, g)
                        for g in group.generator_images]
                values = set()
                for v0 in range(lattice.size):
                    if exps[v0] or any(exps[u] for u in lattice.neighbors[v0]):
                        wv = weight_vector(lattice, v0)
                        values.add(regularized_product(lattice, group, chi, wv))
                assert len(values) == 1, (name, chi)

    def test_scale_independence(self):
        lattice, group = pipeline(star_graph(three_arm_family(2)))
        chi = [c for c in group.characters() if not c.is_trivial][0]
        wv = weight_vector(lattice, 0)
        base = regularized_product(lattice, group, chi, wv)
        for c in (2, 3):
            scaled = WeightVector(v0=wv.v0, m=c * wv.m,
                                  w=tuple(c * x for x in wv.w))
            assert regularized_product(lattice, group, chi, scaled) == base


class TestTorsionTable:
    def test_single_vertex(self):
        lattice, group = pipeline(a_chain(2))
        table = torsion_table(lattice, group)
        chis = list(group.characters())
        assert table.entries[chis[0]].is_zero
        assert table.entries[chis[1]] == group.field.rational(Fraction(1, 4))
        assert table.t_at_1 == Fraction(1, 8)

    def test_chain_three(self):
        lattice, group = pipeline(a_chain(3))
        assert torsion_table(lattice, group).t_at_1 == Fraction(2, 9)

    def test_nonstar_graph(self):
        lattice, group = pipeline(nonstar_13_vertex())
        assert torsion_table(lattice, group).t_at_1 == Fraction(8, 9)

    def test_threads_do_not_change_the_sum(self):
        lattice, group = pipeline(lens_chain(25, 7))
        assert torsion_table(lattice, group).t_at_1 == \
            torsion_table(lattice, group, threads=4).t_at_1

    def test_symmetry_under_conjugation(self):
        for name, graph in standard_corpus():
            lattice, group = pipeline(graph)
            if not 1 < group.order <= 200:
                continue
            elems = list(group.elements())
            for h in (group.identity, elems[-1]):
                table = torsion_table(lattice, group, h)
                conj = torsion_table(lattice, group,
                                     spinc_conjugate(lattice, group, h))
                for chi, val in table.entries.items():
                    assert val == conj.entries[group.conjugate_character(chi)], name


class TestMonopoleCount:
    def test_single_vertex(self):
        lattice, group = pipeline(a_chain(2))
        assert sw0(lattice, group) == Fraction(1, 8)

    def test_three_arm_m3(self):
        lattice, group = pipeline(star_graph(three_arm_family(3)))
        assert sw0(lattice, group) == Fraction(5, 9) + Fraction(7, 36)

    def test_dihedral(self):
        from swplumb.corpus import dn_seifert
        lattice, group = pipeline(star_graph(dn_seifert(4)))
        assert sw0(lattice, group) == Fraction(1, 2)


class TestConjectureGap:
    def test_lens_chains_close(self):
        for p, q in [(2, 1), (5, 3), (11, 4), (12, 7)]:
            lattice, group = pipeline(lens_chain(p, q))
            assert conjecture_gap(lattice, group) == 0

    def test_three_arm_family_closes(self):
        for m in (2, 4, 5):
            lattice, group = pipeline(star_graph(three_arm_family(m)))
            assert conjecture_gap(lattice, group) == 0

    def test_nonstar_graph_gap_one(self):
        lattice, group = pipeline(nonstar_13_vertex())
        assert conjecture_gap(lattice, group) == 1


class TestQuadraticIdentities:
    def test_single_vertex(self):
        lattice, group = pipeline(a_chain(2))
        assert swiden_consistency(lattice, group, group.identity)

    def test_lens_four_all_offsets(self):
        lattice, group = pipeline(lens_chain(4, 1))
        for h in group.elements():
            assert swiden_consistency(lattice, group, h)

    def test_klein_four(self):
        from swplumb.corpus import dn_seifert
        lattice, group = pipeline(star_graph(dn_seifert(4)))
        assert swiden_consistency(lattice, group, group.identity)


class TestOrderCountAtOne:
    def test_single_vertex(self):
        lattice, _ = pipeline(a_chain(2))
        assert delta_at_one_check(lattice, 0)

    def test_chain(self):
        lattice, _ = pipeline(a_chain(3))
        assert delta_at_one_check(lattice, 0)
        assert delta_at_one_check(lattice, 1)

    def test_every_corpus_vertex(self):
        for name, graph in standard_corpus():
            lattice = build_lattice(graph)
            for v0 in range(lattice.size):
                assert delta_at_one_check(lattice, v0), (name, v0)
