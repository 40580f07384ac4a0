"""Dedekind and Dedekind-Rademacher sums, with reciprocity-based fast evaluation.

The shifted sum s(h, k; x, y) is evaluated two ways: a direct O(k) summation
straight from the definition (the oracle), and a Euclid-speed path that
alternates argument reduction with the reciprocity law.  Rational shifts only;
that is all the geometry ever needs.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .exact import CycNum, cyclotomic_field

_ZERO = Fraction(0)
_HALF = Fraction(1, 2)


def dedekind_symbol(x) -> Fraction:
    """((x)): the sawtooth {x} - 1/2 away from the integers, 0 on them."""
    x = Fraction(x)
    if x.denominator == 1:
        return _ZERO
    return (x % 1) - _HALF


def bernoulli2_periodic(x) -> Fraction:
    """B2({x}) = {x}^2 - {x} + 1/6, the periodic second Bernoulli polynomial."""
    f = Fraction(x) % 1
    return f * f - f + Fraction(1, 6)


def dr_sum_direct(h: int, k: int, x=0, y=0) -> Fraction:
    """s(h, k; x, y) summed term by term; the definition-level oracle."""
    _check_args(h, k)
    x = Fraction(x)
    y = Fraction(y)
    total = _ZERO
    for mu in range(k):
        t = Fraction(mu + y, k)
        total += dedekind_symbol(t) * dedekind_symbol(h * t + x)
    return total


def dr_sum(h: int, k: int, x=0, y=0) -> Fraction:
    """s(h, k; x, y) by Euclid-style reduction and the reciprocity laws."""
    _check_args(h, k)
    return _dr(h, k, Fraction(x) % 1, Fraction(y) % 1)


def dedekind_sum(h: int, k: int) -> Fraction:
    """Classical s(h, k)."""
    return dr_sum(h, k)


def _check_args(h, k):
    if k < 1:
        raise ValueError("k must be a positive integer")
    if gcd(h, k) != 1:
        raise ValueError(f"h={h} and k={k} must be coprime")


def _dr(h: int, k: int, x: Fraction, y: Fraction) -> Fraction:
    if k == 1:
        return dedekind_symbol(y) * dedekind_symbol(h * y + x)
    if h < 0:
        return -_dr(-h, k, (-x) % 1, y)
    m = h // k
    if m:  # s(h,k;x,y) = s(h - mk, k; x + my, y)
        h -= m * k
        x = (x + m * y) % 1
    if h == 0:
        return dedekind_symbol(x) * dedekind_symbol(y)
    if x.denominator == 1 and y.denominator == 1:
        rhs = Fraction(-1, 4) + Fraction(h * h + k * k + 1, 12 * h * k)
    else:
        rhs = (dedekind_symbol(x) * dedekind_symbol(y)
               + (h * h * bernoulli2_periodic(y)
                  + bernoulli2_periodic(h * y + k * x)
                  + k * k * bernoulli2_periodic(x)) / (2 * h * k))
    return rhs - _dr(k, h, y, x)


# ---------------------------------------------------------------------------
# Character sums over the p-th roots of unity, against their Dedekind values
# ---------------------------------------------------------------------------

def fourier_identity_suite(p: int, q: int, t: int = 0):
    """Exact (lhs, rhs) pairs for the root-of-unity sums that reduce to Dedekind sums.

    Each lhs is a sum over the nontrivial p-th roots of unity, evaluated in
    Q(zeta_p) and certified rational; each rhs is the matching closed form.
    Returns a list of (name, lhs, rhs).
    """
    if p <= 1:
        raise ValueError("p must exceed 1")
    if gcd(p, q) != 1:
        raise ValueError("p and q must be coprime")
    field = cyclotomic_field(p)

    def rational(total: CycNum) -> Fraction:
        return (total * Fraction(1, p)).as_rational()

    single = field.zero()
    twisted = field.zero()
    plain = field.zero()
    absq = field.zero()
    cotangent = field.zero()
    cot = {}
    for a in range(1, p):
        cot[a] = (field.root_of_unity(a) + 1) * field.inv_root_minus_one(a)
    for j in range(1, p):
        jq = (j * q) % p
        inv_j = field.inv_root_minus_one(j)
        pair = inv_j * field.inv_root_minus_one(jq)
        zt = field.root_of_unity((j * t) % p)
        single = single - zt * inv_j  # 1/(1 - zeta) = -1/(zeta - 1)
        twisted = twisted + zt * pair
        plain = plain + pair
        absq = absq + inv_j * field.inv_root_minus_one((-j) % p)
        cotangent = cotangent + cot[j] * cot[jq]

    results = [
        ("single_factor", rational(single),
         dedekind_symbol(Fraction(2 * t - 1, 2 * p))),
        ("double_factor_twisted", rational(twisted),
         -dr_sum(q, p, Fraction(q + 1 - 2 * t, 2 * p), Fraction(-1, 2))),
        ("double_factor", rational(plain),
         -dr_sum(q, p) + Fraction(p - 1, 4 * p)),
        ("absolute_square", rational(absq),
         Fraction(p, 12) - Fraction(1, 12 * p)),
        ("cotangent_product", rational(cotangent),
         -4 * dr_sum(q, p)),
    ]
    return results
