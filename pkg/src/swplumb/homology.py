"""First homology of the plumbed manifold: group, characters, linking form.

H is the cokernel of the intersection matrix, kept in invariant-factor
coordinates.  The meridian classes g_v (one per vertex) generate H and bridge
group language and graph language; characters are exponent tuples evaluated
as powers of a fixed primitive root of unity of order exp(H).
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction
from math import prod

from .errors import InternalInvariantViolated, OrderCapExceeded
from .exact import CycNum, CyclotomicField, IntMatrix, cyclotomic_field, \
    invert_rational_matrix, smith_normal_form
from .plumbing import LatticeData

DEFAULT_ORDER_CAP = 10 ** 6

GroupElement = tuple


@dataclass(frozen=True)
class Character:
    """A character of H, as an exponent tuple against the invariant factors."""

    exponents: tuple

    @property
    def is_trivial(self) -> bool:
        return not any(self.exponents)


class FinAbGroup:
    """Finite abelian group in invariant-factor form, with meridian images."""

    def __init__(self, invariant_factors, generator_images, umat: IntMatrix, kept):
        self.invariant_factors = tuple(invariant_factors)
        self.generator_images = tuple(generator_images)
        self.order = prod(self.invariant_factors) if self.invariant_factors else 1
        self.exponent = self.invariant_factors[-1] if self.invariant_factors else 1
        self._umat = umat
        self._kept = tuple(kept)
        self._uinv = None
        self._lift_cache = {}
        self._field = None

    # -- structure -------------------------------------------------------------

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)

    @property
    def identity(self) -> GroupElement:
        return (0,) * self.rank

    @property
    def field(self) -> CyclotomicField:
        if self._field is None:
            self._field = cyclotomic_field(self.exponent)
        return self._field

    def add(self, a: GroupElement, b: GroupElement) -> GroupElement:
        return tuple((x + y) % d for x, y, d in zip(a, b, self.invariant_factors))

    def neg(self, a: GroupElement) -> GroupElement:
        return tuple((-x) % d for x, d in zip(a, self.invariant_factors))

    def scale(self, c: int, a: GroupElement) -> GroupElement:
        return tuple((c * x) % d for x, d in zip(a, self.invariant_factors))

    def elements(self, max_order: int = DEFAULT_ORDER_CAP):
        """All elements, lexicographic; raises OrderCapExceeded above the cap."""
        if self.order > max_order:
            raise OrderCapExceeded(self.order, max_order)
        from itertools import product as iproduct
        return iproduct(*(range(d) for d in self.invariant_factors))

    # -- characters --------------------------------------------------------------

    def characters(self, max_order: int = DEFAULT_ORDER_CAP):
        """All |H| characters, lexicographic in exponent tuples, trivial first."""
        if self.order > max_order:
            raise OrderCapExceeded(self.order, max_order)
        from itertools import product as iproduct
        for t in iproduct(*(range(d) for d in self.invariant_factors)):
            yield Character(t)

    def char_exponent(self, chi: Character, h: GroupElement) -> int:
        """e with chi(h) = zeta^e, zeta the fixed primitive exp(H)-th root."""
        n = self.exponent
        total = 0
        for k, x, d in zip(chi.exponents, h, self.invariant_factors):
            if k and x:
                total += (n // d) * k * x
        return total % n

    def char_value(self, chi: Character, h: GroupElement) -> CycNum:
        return self.field.root_of_unity(self.char_exponent(chi, h))

    def conjugate_character(self, chi: Character) -> Character:
        return Character(tuple((-k) % d for k, d in zip(chi.exponents, self.invariant_factors)))

    # -- lifting between H and the vertex lattice ---------------------------------

    def class_of_vector(self, vec) -> GroupElement:
        """Class in H of an integer vector written in the dual vertex basis."""
        w = self._umat.mul_vector(vec)
        return tuple(w[i] % d for i, d in zip(self._kept, self.invariant_factors))

    def lift(self, h: GroupElement):
        """An integer vector in the dual vertex basis whose class is h."""
        hit = self._lift_cache.get(h)
        if hit is not None:
            return hit
        if self._uinv is None:
            inv = invert_rational_matrix(self._umat)
            self._uinv = tuple(tuple(int(x) for x in row) for row in inv)
        y = [0] * self._umat.rows
        for i, x in zip(self._kept, h):
            y[i] = x
        vec = tuple(sum(row[j] * y[j] for j in range(len(y)) if y[j])
                    for row in self._uinv)
        self._lift_cache[h] = vec
        return vec

    def __repr__(self):
        return f"FinAbGroup({list(self.invariant_factors)})"


def homology_from_lattice(lattice: LatticeData) -> FinAbGroup:
    """H = coker(I) via Smith normal form, with the meridian generator images."""
    snf = smith_normal_form(lattice.I)
    diag = snf.diagonal
    if any(d == 0 for d in diag):
        raise InternalInvariantViolated("intersection matrix is singular")
    kept = [i for i, d in enumerate(diag) if d > 1]
    factors = tuple(diag[i] for i in kept)
    u = snf.U
    n = lattice.size
    images = tuple(
        tuple(u[i, v] % diag[i] for i in kept) for v in range(n)
    )
    group = FinAbGroup(factors, images, u, kept)
    if group.order != lattice.order_h:
        raise InternalInvariantViolated(
            f"|H| = {group.order} but |det I| = {lattice.order_h}")
    return group


# ---------------------------------------------------------------------------
# Linking form and quadratic functions
# ---------------------------------------------------------------------------

def _pairing(lattice: LatticeData, a_vec, b_vec) -> Fraction:
    """The rational extension (a, b) = a^T I^{-1} b in the dual basis."""
    iinv = lattice.Iinv
    total = Fraction(0)
    for v, av in enumerate(a_vec):
        if av:
            row = iinv[v]
            total += av * sum(bw * row[w] for w, bw in enumerate(b_vec) if bw)
    return total


def linking_form(lattice: LatticeData, group: FinAbGroup,
                 a: GroupElement, b: GroupElement) -> Fraction:
    """b_M(a, b) in [0, 1): minus the rational pairing of any two lifts, mod 1."""
    return (-_pairing(lattice, group.lift(a), group.lift(b))) % 1


def linking_matrix(lattice: LatticeData, group: FinAbGroup):
    """b_M on the invariant-factor generators; a small k x k table."""
    k = group.rank
    gens = [tuple(int(i == j) for i in range(k)) for j in range(k)]
    return tuple(tuple(linking_form(lattice, group, gi, gj) for gj in gens)
                 for gi in gens)


def q_can(lattice: LatticeData, group: FinAbGroup, h: GroupElement,
          lift=None) -> Fraction:
    """The canonical quadratic function at h, in [0, 1).

    Pick any lift d of h; the value -(1/2)(d - z, d) mod 1 does not depend on
    the choice (z is the anti-canonical vector e_v + 2).
    """
    d = group.lift(h) if lift is None else lift
    shifted = tuple(x - zv for x, zv in zip(d, lattice.z))
    return (-Fraction(1, 2) * _pairing(lattice, shifted, d)) % 1


def spinc_quadratic(lattice: LatticeData, group: FinAbGroup,
                    h_sigma: GroupElement, h: GroupElement) -> Fraction:
    """The quadratic function attached to the spin^c structure h_sigma * sigma_can.

    Value -(1/2)(d + 2*lift(h_sigma) + z, d) mod 1; for h_sigma = 0 this is the
    quadratic function of the canonical structure itself.
    """
    d = group.lift(h)
    hs = group.lift(h_sigma)
    shifted = tuple(x + 2 * y + zv for x, y, zv in zip(d, hs, lattice.z))
    return (-Fraction(1, 2) * _pairing(lattice, shifted, d)) % 1


def spinc_canonical_class(lattice: LatticeData, group: FinAbGroup) -> GroupElement:
    """c(sigma_can): the class of the vector (e_v + 2)_v in H."""
    return group.class_of_vector(lattice.z)


def spinc_conjugate(lattice: LatticeData, group: FinAbGroup,
                    h_sigma: GroupElement) -> GroupElement:
    """Offset of the conjugate structure: -h_sigma - c(sigma_can)."""
    c = spinc_canonical_class(lattice, group)
    return group.neg(group.add(h_sigma, c))


def gauss_sum_check(lattice: LatticeData, group: FinAbGroup,
                    max_order: int = DEFAULT_ORDER_CAP):
    """Both sides of the Gauss-sum identity for the discriminant quadratic function.

    Computes |H|^(-1/2) * sum_x exp(2 pi i q(x)) with q(x) = (1/2)(d + k, d) mod 1
    (k the characteristic vector -e_v - 2) and the predicted eighth root of
    unity exp(i pi / 4 * (signature - (k,k))).  Floating point by design; this
    is the package's only non-exact surface.
    """
    if group.order > max_order:
        raise OrderCapExceeded(group.order, max_order)
    k_vec = lattice.k_vec
    total = 0j
    for h in group.elements(max_order):
        d = group.lift(h)
        shifted = tuple(x + kx for x, kx in zip(d, k_vec))
        qval = (Fraction(1, 2) * _pairing(lattice, shifted, d)) % 1
        total += cmath.exp(2j * cmath.pi * float(qval))
    computed = total / (group.order ** 0.5)
    k2 = _pairing(lattice, k_vec, k_vec)
    predicted = cmath.exp(1j * cmath.pi / 4 * float(-lattice.size - k2))
    return computed, predicted
