"""Seifert fibered rational homology spheres over the 2-sphere.

Normalized data (b; (alpha_i, omega_i)) with at least three arms; the star
plumbing graph comes from negative continued fractions.  Closed forms for the
Casson-Walker invariant and the canonical-cycle invariant, the eta-invariant
route to the monopole count, and the arm-level shortcut for the torsion.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import ceil, floor, gcd, lcm, prod

from .dedekind import dedekind_symbol, dr_sum
from .errors import InternalInvariantViolated
from .homology import DEFAULT_ORDER_CAP, FinAbGroup, GroupElement
from .plumbing import LatticeData, PlumbingGraph


def hj_expand(alpha: int, omega: int):
    """Negative continued fraction of alpha/omega; all entries are >= 2."""
    if not (0 < omega < alpha):
        raise ValueError("need 0 < omega < alpha")
    if gcd(alpha, omega) != 1:
        raise ValueError("alpha and omega must be coprime")
    a, b = alpha, omega
    out = []
    while b > 0:
        q = -(-a // b)  # ceiling
        out.append(q)
        a, b = b, q * b - a
    # reconstruction check
    value = Fraction(out[-1])
    for c in reversed(out[:-1]):
        value = c - 1 / value
    if value != Fraction(alpha, omega):
        raise InternalInvariantViolated("continued fraction reconstruction failed")
    return out


@dataclass(frozen=True)
class SeifertData:
    """Normalized invariants (b; (alpha_i, omega_i)), orbifold Euler number < 0."""

    b: int
    arms: tuple

    def __init__(self, b, arms):
        arms = tuple((int(a), int(w)) for a, w in arms)
        if len(arms) < 3:
            raise ValueError("need at least three arms")
        for a, w in arms:
            if a < 2:
                raise ValueError(f"arm order {a} must be at least 2")
            if not (0 <= w < a):
                raise ValueError(f"arm rotation {w} must lie in [0, {a})")
            if gcd(a, w) != 1:
                raise ValueError(f"arm ({a},{w}) is not coprime")
        object.__setattr__(self, "b", int(b))
        object.__setattr__(self, "arms", arms)
        if self.e >= 0:
            raise ValueError(f"orbifold Euler number {self.e} must be negative")

    @property
    def nu(self) -> int:
        return len(self.arms)

    @cached_property
    def e(self) -> Fraction:
        return self.b + sum(Fraction(w, a) for a, w in self.arms)

    @property
    def ell(self) -> Fraction:
        return self.e

    @cached_property
    def alpha(self) -> int:
        return lcm(*(a for a, _ in self.arms))

    @cached_property
    def betas(self):
        """Unnormalized rotations: the central term absorbed into the first arm."""
        (a1, w1), rest = self.arms[0], self.arms[1:]
        return (-w1 - self.b * a1,) + tuple(-w for _, w in rest)

    @cached_property
    def kappa(self) -> Fraction:
        return -2 + sum(1 - Fraction(1, a) for a, _ in self.arms)

    @cached_property
    def rho0(self) -> Fraction:
        return (self.kappa / (2 * self.ell)) % 1

    @cached_property
    def n0(self) -> int:
        return floor(self.kappa / (2 * self.ell))

    @cached_property
    def gammas(self):
        """Orbit data of the canonical representative: gamma_i / alpha_i = {n0 w_i / a_i}."""
        return tuple(int(a * (Fraction(self.n0 * w, a) % 1)) for a, w in self.arms)

    @cached_property
    def omega_inverses(self):
        return tuple(pow(w, -1, a) for a, w in self.arms)

    @cached_property
    def order_h(self) -> int:
        value = prod(a for a, _ in self.arms) * abs(self.e)
        if value.denominator != 1:
            raise InternalInvariantViolated("group order must be an integer")
        return int(value)


def star_graph(data: SeifertData) -> PlumbingGraph:
    """Star-shaped plumbing: central vertex b, arm i the chain of -b_ij."""
    vertices = [("c", data.b)]
    edges = []
    for i, (a, w) in enumerate(data.arms):
        prev = "c"
        for j, c in enumerate(hj_expand(a, w)):
            vid = f"a{i}v{j}"
            vertices.append((vid, -c))
            edges.append((prev, vid))
            prev = vid
    return PlumbingGraph(vertices, edges)


def star_vertex_ids(data: SeifertData):
    """(center id, tuple of arm-end ids) in the layout used by star_graph."""
    ends = tuple(f"a{i}v{len(hj_expand(a, w)) - 1}" for i, (a, w) in enumerate(data.arms))
    return "c", ends


def lens_chain(p: int, q: int) -> PlumbingGraph:
    """Linear plumbing of the lens space: the chain of -b_j with p/q = [[b_1,...]]."""
    if not (0 < q < p):
        raise ValueError("need 0 < q < p")
    if gcd(p, q) != 1:
        raise ValueError("p and q must be coprime")
    chain = hj_expand(p, q)
    vertices = [(f"v{j}", -c) for j, c in enumerate(chain)]
    edges = [(f"v{j}", f"v{j+1}") for j in range(len(chain) - 1)]
    return PlumbingGraph(vertices, edges)


def seifert_casson_walker(data: SeifertData, *, betas=None) -> Fraction:
    """Casson-Walker invariant from the Seifert data alone."""
    if betas is None:
        betas = data.betas
    e = data.e
    total = (2 - data.nu + sum(Fraction(1, a * a) for a, _ in data.arms)) / e
    total += e + 3
    total += 12 * sum(dr_sum(b, a) for (a, _), b in zip(data.arms, betas))
    return Fraction(-data.order_h, 24) * total


def seifert_k2nv(data: SeifertData) -> Fraction:
    """Canonical-cycle invariant K^2 + #vertices from the Seifert data alone."""
    e = data.e
    s = 2 - data.nu + sum(Fraction(1, a) for a, _ in data.arms)
    total = s * s / e + e + 5
    total += 12 * sum(dr_sum(b, a) for (a, _), b in zip(data.arms, data.betas))
    return total


# ---------------------------------------------------------------------------
# Eta-invariant route to the monopole count
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class KSReport:
    """Eta-invariant combination and the finite monopole count, when usable."""

    ks: Fraction
    s0_plus: tuple      # multiples of the fiber bundle with small negative degree shift
    s0_minus: tuple
    applicable: bool
    sw0_ks: Fraction | None


def _ks_invariant(data: SeifertData) -> Fraction:
    ell, nu, rho0 = data.ell, data.nu, data.rho0
    total = ell + 1 - 4 * ell * rho0 * (1 - rho0) + 4 * nu * rho0
    for (a, w), g, r in zip(data.arms, data.gammas, data.omega_inverses):
        total -= 4 * dr_sum(w, a)
        total -= 8 * dr_sum(w, a, Fraction(g + rho0 * w, a), -rho0)
    if rho0 == 0:
        tail = -sum(dedekind_symbol(Fraction(r * g, a))
                    for (a, _), g, r in zip(data.arms, data.gammas, data.omega_inverses))
    else:
        tail = (2 + data.kappa) / 2 * (1 - 2 * rho0)
        tail -= sum(Fraction((r * g) % a + rho0, a) % 1
                    for (a, _), g, r in zip(data.arms, data.gammas, data.omega_inverses))
    return total + 4 * tail


def _int_range(lo, hi, include_lo: bool, include_hi: bool):
    """Integers in the rational interval between lo and hi."""
    start = ceil(lo)
    if lo == start and not include_lo:
        start += 1
    stop = floor(hi)
    if hi == stop and not include_hi:
        stop -= 1
    return range(start, stop + 1)


def ks_route(data: SeifertData) -> KSReport:
    """Monopole count through the eta-invariant formula, when the metric is usable.

    Enumerates the bundle multiples j with 0 < |j*ell - kappa/2| <= kappa/2 and
    sorts them by the sign of the shifted degree.  The route applies when
    rho0 is nonzero and every selected component is zero dimensional.
    """
    ell, kappa = data.ell, data.kappa
    s_plus, s_minus = [], []
    plus_dims, minus_dims = [], []
    if kappa > 0:
        # j*ell in [0, kappa/2): negative shift; j*ell in (kappa/2, kappa]: positive
        for j in _int_range(kappa / (2 * ell), Fraction(0), include_lo=False, include_hi=True):
            deg = j * ell - sum((Fraction(j * w, a)) % 1 for a, w in data.arms)
            if deg.denominator != 1:
                raise InternalInvariantViolated("smooth degree must be an integer")
            if deg >= 0:
                s_plus.append(j)
                plus_dims.append(int(deg))
        for j in _int_range(kappa / ell, kappa / (2 * ell), include_lo=True, include_hi=False):
            deg = (kappa - j * ell) - sum(Fraction((a - 1 - j * w) % a, a)
                                          for a, w in data.arms)
            if deg.denominator != 1:
                raise InternalInvariantViolated("smooth degree must be an integer")
            if deg >= 0:
                s_minus.append(j)
                minus_dims.append(int(deg))
    ks = _ks_invariant(data)
    # rho0 = 0 would need the positive-curvature branch, which only spherical
    # bases could certify -- and normalized spherical data never has rho0 = 0
    # (the patterns (2,2,n), (2,3,3), (2,3,4), (2,3,5) all fail integrality).
    # The torsion route is the fallback.
    applicable = (data.rho0 != 0
                  and all(d == 0 for d in plus_dims)
                  and all(d == 0 for d in minus_dims))
    sw0_ks = ks / 8 + len(s_plus) + len(s_minus) if applicable else None
    return KSReport(ks=ks, s0_plus=tuple(s_plus), s0_minus=tuple(s_minus),
                    applicable=applicable, sw0_ks=sw0_ks)


# ---------------------------------------------------------------------------
# Arm-level torsion shortcut
# ---------------------------------------------------------------------------

def seifert_torsion_shortcut(data: SeifertData, lattice: LatticeData,
                             group: FinAbGroup, h_sigma: GroupElement = None, *,
                             max_order: int = DEFAULT_ORDER_CAP) -> Fraction:
    """Torsion at the identity using only the central and arm-end generators.

    Weights (alpha; alpha/alpha_i) drive the same order-counting regularization
    as the generic route; must agree with it on every star graph.
    """
    if h_sigma is None:
        h_sigma = group.identity
    center_id, end_ids = star_vertex_ids(data)
    center = lattice.index_of(center_id)
    ends = [lattice.index_of(i) for i in end_ids]
    field = group.field
    images = group.generator_images
    nu = data.nu
    alphas = [a for a, _ in data.arms]
    total = field.zero()
    for chi in group.characters(max_order):
        if chi.is_trivial:
            continue
        e0 = group.char_exponent(chi, images[center])
        arm_exps = [group.char_exponent(chi, images[v]) for v in ends]
        zero_arms = sum(1 for e in arm_exps if e == 0)
        order = (nu - 2 if e0 == 0 else 0) - zero_arms
        if order > 0:
            continue
        if order < 0:
            raise InternalInvariantViolated("infinite limit in the arm shortcut")
        scalar = Fraction(1)
        if e0 == 0:
            scalar *= Fraction(data.alpha) ** (nu - 2)
            value = field.one()
        else:
            value = field.root_minus_one(e0) ** (nu - 2)
        for a, e in zip(alphas, arm_exps):
            if e == 0:
                scalar /= Fraction(data.alpha, a)
            else:
                value = value * field.inv_root_minus_one(e)
        es = group.char_exponent(chi, h_sigma)
        if es:
            value = value * field.root_of_unity(-es % field.conductor)
        total = total + value * scalar
    return (total * Fraction(1, group.order)).as_rational()
