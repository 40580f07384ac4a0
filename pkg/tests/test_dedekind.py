"""Dedekind-Rademacher sums: definition oracle, reciprocity, root-of-unity sums."""

import random
from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from swplumb.dedekind import (dedekind_sum, dedekind_symbol, dr_sum,
                              dr_sum_direct, fourier_identity_suite)


def test_symbol_values():
    assert dedekind_symbol(Fraction(1, 2)) == 0
    assert dedekind_symbol(3) == 0
    assert dedekind_symbol(Fraction(7, 4)) == Fraction(1, 4)
    assert dedekind_symbol(Fraction(-1, 3)) == Fraction(1, 6)


def test_classical_values():
    assert dedekind_sum(1, 5) == Fraction(1, 5)
    for k in range(1, 40):
        assert dedekind_sum(1, k) == Fraction((k - 1) * (k - 2), 12 * k)
    assert dedekind_sum(2, 3) == Fraction(-1, 18)
    assert dr_sum_direct(2, 3) == Fraction(-1, 18)
    assert dedekind_sum(2, 5) == 0


def test_shifted_closed_form():
    # s(1,k;0,y) = k/12 + B2({y})/k away from integral y
    assert dr_sum(1, 2, 0, Fraction(1, 2)) == Fraction(1, 8)
    for k in (2, 3, 7, 12):
        for y in (Fraction(1, 2), Fraction(2, 5), Fraction(-1, 3)):
            f = y % 1
            want = Fraction(k, 12) + (f * f - f + Fraction(1, 6)) / k
            assert dr_sum(1, k, 0, y) == want


def test_reciprocity_sweep():
    for k in range(1, 61):
        for h in range(1, k):
            if gcd(h, k) != 1:
                continue
            assert dedekind_sum(h, k) + dedekind_sum(k, h) == \
                Fraction(-1, 4) + Fraction(h * h + k * k + 1, 12 * h * k)


def test_shifted_reciprocity_against_oracle():
    rng = random.Random(9)
    done = 0
    while done < 40:
        k = rng.randrange(2, 40)
        h = rng.randrange(1, k)
        if gcd(h, k) != 1:
            continue
        x = Fraction(rng.randrange(-8, 9), rng.randrange(1, 9))
        y = Fraction(rng.randrange(-8, 9), rng.randrange(1, 9))
        lhs = dr_sum(h, k, x, y) + dr_sum(k, h, y, x)
        assert lhs == dr_sum_direct(h, k, x, y) + dr_sum_direct(k, h, y, x)
        done += 1


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 120), st.data())
def test_fast_path_matches_direct(k, data):
    h = data.draw(st.integers(-2 * k, 2 * k))
    if gcd(h, k) != 1:
        return
    x = Fraction(data.draw(st.integers(-10, 10)), data.draw(st.integers(1, 10)))
    y = Fraction(data.draw(st.integers(-10, 10)), data.draw(st.integers(1, 10)))
    assert dr_sum(h, k, x, y) == dr_sum_direct(h, k, x, y)


def test_shift_periodicity():
    assert dr_sum(3, 7, Fraction(1, 3), Fraction(1, 5)) == \
        dr_sum(3, 7, Fraction(4, 3), Fraction(-4, 5))


def test_sawtooth_averaging():
    rng = random.Random(3)
    for k in range(1, 31):
        for _ in range(10):
            w = Fraction(rng.randrange(-30, 31), rng.randrange(1, 14))
            total = sum(dedekind_symbol(Fraction(mu + w, k)) for mu in range(k))
            assert total == dedekind_symbol(w)


def test_argument_validation():
    with pytest.raises(ValueError):
        dr_sum(2, 4)
    with pytest.raises(ValueError):
        dr_sum(1, 0)


class TestRootOfUnitySums:
    def test_absolute_square_at_five(self):
        pairs = dict((name, (lhs, rhs))
                     for name, lhs, rhs in fourier_identity_suite(5, 1))
        lhs, rhs = pairs["absolute_square"]
        assert lhs == rhs == Fraction(2, 5)

    def test_double_factor_at_three_two(self):
        pairs = dict((name, (lhs, rhs))
                     for name, lhs, rhs in fourier_identity_suite(3, 2))
        lhs, rhs = pairs["double_factor"]
        assert lhs == rhs == Fraction(2, 9)

    def test_cotangent_product_vanishes(self):
        pairs = dict((name, (lhs, rhs))
                     for name, lhs, rhs in fourier_identity_suite(5, 2))
        lhs, rhs = pairs["cotangent_product"]
        assert rhs == -4 * dedekind_sum(2, 5) == 0
        assert lhs == 0

    def test_full_sweep_small(self):
        for p in range(2, 21):
            for q in range(1, p):
                if gcd(p, q) != 1:
                    continue
                for t in (0, 1, 2):
                    for name, lhs, rhs in fourier_identity_suite(p, q, t):
                        assert lhs == rhs, (name, p, q, t)

    def test_validation(self):
        with pytest.raises(ValueError):
            fourier_identity_suite(1, 1)
        with pytest.raises(ValueError):
            fourier_identity_suite(6, 3)
