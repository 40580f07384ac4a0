"""Exact arithmetic kernel: integer matrices, Smith normal form, cyclotomic fields.

Everything here is exact.  Rational numbers are `fractions.Fraction`, integer
matrices keep arbitrary-precision entries, and elements of Q(zeta_N) are stored
as integer coefficient vectors over a common denominator, reduced modulo the
N-th cyclotomic polynomial.  No floating point is used anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .errors import ConductorMismatch, NotRational, SingularMatrix

Rational = Fraction


# ---------------------------------------------------------------------------
# Integer matrices
# ---------------------------------------------------------------------------

class IntMatrix:
    """Dense integer matrix with arbitrary-precision entries (immutable)."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries):
        rows = tuple(tuple(int(x) for x in row) for row in entries)
        if not rows or not rows[0]:
            raise ValueError("matrix must have positive dimensions")
        if any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("ragged rows")
        self.rows = len(rows)
        self.cols = len(rows[0])
        self.entries = rows

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def diagonal(cls, diag, rows=None, cols=None) -> "IntMatrix":
        diag = list(diag)
        rows = len(diag) if rows is None else rows
        cols = len(diag) if cols is None else cols
        return cls([[diag[i] if i == j and i < len(diag) else 0
                     for j in range(cols)] for i in range(rows)])

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def row(self, i):
        return self.entries[i]

    def __mul__(self, other):
        if not isinstance(other, IntMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError("dimension mismatch")
        bt = list(zip(*other.entries))
        return IntMatrix([[sum(a * b for a, b in zip(row, col)) for col in bt]
                          for row in self.entries])

    def __eq__(self, other):
        return (isinstance(other, IntMatrix) and self.entries == other.entries)

    def __hash__(self):
        return hash(self.entries)

    def transpose(self) -> "IntMatrix":
        return IntMatrix(list(zip(*self.entries)))

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def det(self) -> int:
        """Determinant by fraction-free (Bareiss) elimination."""
        if not self.is_square:
            raise ValueError("determinant of a non-square matrix")
        n = self.rows
        m = [list(r) for r in self.entries]
        sign = 1
        prev = 1
        for k in range(n - 1):
            if m[k][k] == 0:
                for i in range(k + 1, n):
                    if m[i][k]:
                        m[k], m[i] = m[i], m[k]
                        sign = -sign
                        break
                else:
                    return 0
            p = m[k][k]
            for i in range(k + 1, n):
                f = m[i][k]
                mi, mk = m[i], m[k]
                for j in range(k + 1, n):
                    mi[j] = (p * mi[j] - f * mk[j]) // prev
                mi[k] = 0
            prev = p
        return sign * m[n - 1][n - 1]

    def mul_vector(self, vec):
        """Matrix times integer/rational column vector, as a tuple."""
        if len(vec) != self.cols:
            raise ValueError("dimension mismatch")
        return tuple(sum(a * x for a, x in zip(row, vec)) for row in self.entries)

    def __repr__(self):
        return f"IntMatrix({[list(r) for r in self.entries]!r})"


@dataclass(frozen=True)
class SmithDecomposition:
    """U*A*V = D with U, V unimodular and D diagonal, d1 | d2 | ... ."""

    U: IntMatrix
    D: IntMatrix
    V: IntMatrix

    @property
    def diagonal(self):
        n = min(self.D.rows, self.D.cols)
        return tuple(self.D[i, i] for i in range(n))


def smith_normal_form(A: IntMatrix) -> SmithDecomposition:
    """Smith normal form over Z, with smallest-|pivot| selection.

    Total on any integer matrix; for singular input the zero diagonal entries
    come last (the divisibility chain d_i | d_{i+1} still holds).
    """
    r, c = A.rows, A.cols
    m = [list(row) for row in A.entries]
    u = [[int(i == j) for j in range(r)] for i in range(r)]
    v = [[int(i == j) for j in range(c)] for i in range(c)]

    def swap_rows(i, j):
        m[i], m[j] = m[j], m[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in m:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):  # row[dst] += q * row[src]
        if q:
            md, ms = m[dst], m[src]
            for j in range(c):
                md[j] += q * ms[j]
            ud, us = u[dst], u[src]
            for j in range(r):
                ud[j] += q * us[j]

    def add_col(dst, src, q):  # col[dst] += q * col[src]
        if q:
            for row in m:
                row[dst] += q * row[src]
            for row in v:
                row[dst] += q * row[src]

    t = 0
    while t < min(r, c):
        best = None
        pi = pj = -1
        for i in range(t, r):
            for j in range(t, c):
                val = m[i][j]
                if val and (best is None or abs(val) < best):
                    best = abs(val)
                    pi, pj = i, j
        if best is None:
            break
        if pi != t:
            swap_rows(t, pi)
        if pj != t:
            swap_cols(t, pj)
        while True:
            dirty = False
            for i in range(t + 1, r):
                if m[i][t]:
                    add_row(i, t, -(m[i][t] // m[t][t]))
                    if m[i][t]:  # remainder beats the pivot; swap it in
                        swap_rows(t, i)
                        dirty = True
            if dirty:
                continue
            for j in range(t + 1, c):
                if m[t][j]:
                    add_col(j, t, -(m[t][j] // m[t][t]))
                    if m[t][j]:
                        swap_cols(t, j)
                        dirty = True
            if dirty:
                continue
            # pivot must divide the whole trailing block
            p = m[t][t]
            bad = None
            for i in range(t + 1, r):
                for j in range(t + 1, c):
                    if m[i][j] % p:
                        bad = j
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            add_col(t, bad, 1)
        t += 1

    for i in range(min(r, c)):
        if m[i][i] < 0:
            m[i] = [-x for x in m[i]]
            u[i] = [-x for x in u[i]]

    return SmithDecomposition(IntMatrix(u), IntMatrix(m), IntMatrix(v))


def invert_rational_matrix(A: IntMatrix):
    """Exact inverse of a nonsingular integer matrix, as Fraction rows.

    Raises SingularMatrix when det A = 0.
    """
    if not A.is_square:
        raise ValueError("inverse of a non-square matrix")
    n = A.rows
    m = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(A.entries)]
    for k in range(n):
        piv = None
        for i in range(k, n):
            if m[i][k]:
                piv = i
                break
        if piv is None:
            raise SingularMatrix("matrix is singular")
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
        inv = 1 / m[k][k]
        m[k] = [x * inv for x in m[k]]
        for i in range(n):
            if i != k and m[i][k]:
                f = m[i][k]
                mi, mk = m[i], m[k]
                m[i] = [a - f * b for a, b in zip(mi, mk)]
    return tuple(tuple(row[n:]) for row in m)


def adjugate_inverse(A: IntMatrix):
    """Inverse via cofactor expansion; an independent O(n!) oracle for tests."""
    if not A.is_square:
        raise ValueError("non-square")
    n = A.rows

    def minor_det(rows, skip_r, skip_c):
        sub = [[row[j] for j in range(n) if j != skip_c]
               for i, row in enumerate(rows) if i != skip_r]
        return _recursive_det(sub)

    d = _recursive_det([list(r) for r in A.entries])
    if d == 0:
        raise SingularMatrix("matrix is singular")
    if n == 1:
        return ((Fraction(1, d),),)
    return tuple(
        tuple(Fraction((-1) ** (i + j) * minor_det(A.entries, j, i), d)
              for j in range(n))
        for i in range(n)
    )


def _recursive_det(rows):
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = 0
    for j, x in enumerate(rows[0]):
        if x:
            sub = [[row[k] for k in range(n) if k != j] for row in rows[1:]]
            total += (-1) ** j * x * _recursive_det(sub)
    return total


# ---------------------------------------------------------------------------
# Cyclotomic polynomials and fields
# ---------------------------------------------------------------------------

def _poly_mul_int(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def _poly_divmod_int(num, den):
    """Exact division of integer polynomials (den monic up to sign)."""
    num = list(num)
    dd = len(den) - 1
    lead = den[-1]
    q = [0] * (len(num) - dd)
    for k in range(len(num) - 1, dd - 1, -1):
        coef = num[k]
        if coef % lead:
            raise ArithmeticError("non-exact polynomial division")
        f = coef // lead
        q[k - dd] = f
        if f:
            for i, d in enumerate(den):
                num[k - dd + i] -= f * d
    if any(num[:dd]):
        raise ArithmeticError("non-exact polynomial division")
    return q


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int):
    """Coefficients of the n-th cyclotomic polynomial, ascending powers.

    Computed by exact division of x^n - 1 by the product of Phi_d over the
    proper divisors d of n.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        return (-1, 1)
    num = [0] * (n + 1)
    num[0] = -1
    num[n] = 1
    for d in range(1, n):
        if n % d == 0:
            num = _poly_divmod_int(num, cyclotomic_polynomial(d))
    return tuple(num)


def _poly_degree(p):
    for i in range(len(p) - 1, -1, -1):
        if p[i]:
            return i
    return -1


def _frac_divmod(num, den):
    num = list(num)
    d_deg = _poly_degree(den)
    lead = den[d_deg]
    q = [Fraction(0)] * max(len(num) - d_deg, 1)
    for k in range(len(num) - 1, d_deg - 1, -1):
        if num[k]:
            f = num[k] / lead
            q[k - d_deg] = f
            for i in range(d_deg + 1):
                num[k - d_deg + i] -= f * den[i]
    r = num[:d_deg] if d_deg > 0 else []
    while r and not r[-1]:
        r.pop()
    while len(q) > 1 and not q[-1]:
        q.pop()
    return q, r


class CyclotomicField:
    """The field Q(zeta_N), modelled as Q[x] modulo the N-th cyclotomic polynomial."""

    def __init__(self, conductor: int):
        if conductor < 1:
            raise ValueError("conductor must be positive")
        self.conductor = conductor
        self.modulus = cyclotomic_polynomial(conductor)
        self.degree = len(self.modulus) - 1
        d = self.degree
        # x^d reduced: Phi is monic, so x^d = -(lower part of Phi)
        base = [-c for c in self.modulus[:d]]
        table = [base]
        for _ in range(d - 2 if d >= 2 else 0):
            table.append(self._shift(table[-1], base))
        self._xpow = table  # x^(d+k) for k = 0 .. d-2
        self._root_vecs = [tuple(int(i == 0) for i in range(d))]
        self._rmo_inverse_cache = {}

    @staticmethod
    def _shift(vec, base):
        top = vec[-1]
        out = [0] + list(vec[:-1])
        if top:
            for i, b in enumerate(base):
                if b:
                    out[i] += top * b
        return out[:len(vec)]

    # -- element constructors ------------------------------------------------

    def zero(self) -> "CycNum":
        return CycNum(self, (0,) * self.degree, 1, _normalized=True)

    def one(self) -> "CycNum":
        return self.rational(1)

    def rational(self, q) -> "CycNum":
        q = Fraction(q)
        vec = [0] * self.degree
        vec[0] = q.numerator
        return CycNum(self, vec, q.denominator)

    def element(self, coeffs) -> "CycNum":
        """Element from rational coefficients in powers of zeta (any length < N)."""
        coeffs = [Fraction(c) for c in coeffs]
        den = 1
        for c in coeffs:
            den = den * c.denominator // gcd(den, c.denominator)
        ints = [int(c * den) for c in coeffs]
        vec = [0] * self.degree
        for i, c in enumerate(ints):
            if c:
                rv = self._root_vec(i % self.conductor)
                for j, r in enumerate(rv):
                    vec[j] += c * r
        return CycNum(self, vec, den)

    def _root_vec(self, a: int):
        a %= self.conductor
        cache = self._root_vecs
        if a < len(cache):
            return cache[a]
        d = self.degree
        base = [-c for c in self.modulus[:d]]
        vec = list(cache[-1])
        while len(cache) <= a:
            vec = self._shift(vec, base)
            cache.append(tuple(vec))
        return cache[a]

    def root_of_unity(self, a: int) -> "CycNum":
        """zeta_N ** a."""
        return CycNum(self, self._root_vec(a), 1, _normalized=True)

    def root_minus_one(self, a: int) -> "CycNum":
        """zeta_N**a - 1."""
        vec = list(self._root_vec(a))
        vec[0] -= 1
        return CycNum(self, vec, 1)

    def inv_root_minus_one(self, a: int) -> "CycNum":
        """(zeta_N**a - 1)**(-1), cached.

        Closed form: for x of multiplicative order k one has
        1/(x - 1) = -(1/k) * sum_{i=0}^{k-2} (k-1-i) x^i,
        since (t^k - 1)/(t - 1) vanishes at x and equals k at t = 1.
        """
        n = self.conductor
        a %= n
        if a == 0:
            raise ZeroDivisionError("zeta^0 - 1 is zero")
        hit = self._rmo_inverse_cache.get(a)
        if hit is None:
            k = n // gcd(a, n)
            vec = [0] * self.degree
            for i in range(k - 1):
                coef = k - 1 - i
                for j, r in enumerate(self._root_vec((a * i) % n)):
                    if r:
                        vec[j] += coef * r
            hit = CycNum(self, [-x for x in vec], k)
            self._rmo_inverse_cache[a] = hit
        return hit

    def _reduce(self, conv):
        d = self.degree
        for k in range(len(conv) - 1, d - 1, -1):
            c = conv[k]
            if c:
                conv[k] = 0
                tbl = self._xpow[k - d]
                for i, t in enumerate(tbl):
                    if t:
                        conv[i] += c * t
        return conv[:d]

    def __eq__(self, other):
        return isinstance(other, CyclotomicField) and other.conductor == self.conductor

    def __hash__(self):
        return hash(("CyclotomicField", self.conductor))

    def __repr__(self):
        return f"CyclotomicField({self.conductor})"


@lru_cache(maxsize=None)
def cyclotomic_field(conductor: int) -> CyclotomicField:
    """Memoized field constructor; one instance per conductor."""
    return CyclotomicField(conductor)


class CycNum:
    """Element of Q(zeta_N): integer coefficient vector over a positive denominator."""

    __slots__ = ("field", "num", "den")

    def __init__(self, field: CyclotomicField, num, den: int = 1, *, _normalized=False):
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if den < 0:
            num = [-x for x in num]
            den = -den
        if not _normalized:
            g = den
            for x in num:
                if x:
                    g = gcd(g, x)
                    if g == 1:
                        break
            if g > 1:
                num = [x // g for x in num]
                den //= g
        self.field = field
        self.num = tuple(num)
        self.den = den

    # -- helpers ---------------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, CycNum):
            if other.field.conductor != self.field.conductor:
                raise ConductorMismatch(
                    f"conductors {self.field.conductor} and {other.field.conductor}; "
                    "embed into the lcm conductor first")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.rational(other)
        return None

    @property
    def is_zero(self) -> bool:
        return not any(self.num)

    def coeffs(self):
        """Coefficients in the power basis 1, zeta, ..., zeta^(phi(N)-1), as Fractions."""
        return tuple(Fraction(x, self.den) for x in self.num)

    # -- arithmetic --------------------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return CycNum(self.field, [a + b for a, b in zip(self.num, o.num)], self.den)
        g = gcd(self.den, o.den)
        da, db = o.den // g, self.den // g
        return CycNum(self.field,
                      [a * da + b * db for a, b in zip(self.num, o.num)],
                      self.den * da)

    __radd__ = __add__

    def __neg__(self):
        return CycNum(self.field, [-x for x in self.num], self.den, _normalized=True)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return CycNum(self.field,
                          [x * q.numerator for x in self.num],
                          self.den * q.denominator)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.num, o.num
        conv = [0] * (2 * len(a) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        conv[i + j] += x * y
        return CycNum(self.field, self.field._reduce(conv), self.den * o.den)

    __rmul__ = __mul__

    def inverse(self) -> "CycNum":
        """Multiplicative inverse, by the extended Euclidean algorithm mod Phi_N."""
        if self.is_zero:
            raise ZeroDivisionError("inverting zero cyclotomic number")
        mod = [Fraction(c) for c in self.field.modulus]
        r0 = [Fraction(x) for x in self.num]
        r1 = mod
        s0 = [Fraction(1)]
        s1: list = []
        while _poly_degree(r1) > 0:
            q, rem = _frac_divmod(r0, r1)
            r0, r1 = r1, rem
            s0, s1 = s1, _frac_sub(s0, _frac_mul(q, s1))
        if _poly_degree(r1) == 0:
            c = r1[0]
            s = s1
        else:  # r1 == 0, gcd is r0; must be a nonzero constant since Phi is irreducible
            if _poly_degree(r0) != 0:
                raise ZeroDivisionError("element is zero modulo the cyclotomic polynomial")
            c = r0[0]
            s = s0
        inv = [x / c for x in s]
        inv += [Fraction(0)] * (self.field.degree - len(inv))
        den = 1
        for x in inv:
            den = den * x.denominator // gcd(den, x.denominator)
        vec = [int(x * den) for x in inv]
        return CycNum(self.field, vec, den) * self.den

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = self.field.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    def galois(self, k: int) -> "CycNum":
        """Image under zeta -> zeta^k (k coprime to the conductor)."""
        n = self.field.conductor
        if gcd(k, n) != 1:
            raise ValueError("k must be coprime to the conductor")
        vec = [0] * self.field.degree
        for i, c in enumerate(self.num):
            if c:
                rv = self.field._root_vec((i * k) % n)
                for j, r in enumerate(rv):
                    vec[j] += c * r
        return CycNum(self.field, vec, self.den)

    def conjugate(self) -> "CycNum":
        return self.galois(self.field.conductor - 1 if self.field.conductor > 1 else 1)

    def as_rational(self) -> Fraction:
        """The value as a Fraction; raises NotRational unless it lies in Q."""
        if any(self.num[1:]):
            raise NotRational(f"nonzero coefficients beyond the constant term: {self.num}")
        return Fraction(self.num[0], self.den)

    # -- comparison -------------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.field.rational(other)
        if not isinstance(other, CycNum):
            return NotImplemented
        return (self.field.conductor == other.field.conductor
                and self.num == other.num and self.den == other.den)

    def __hash__(self):
        return hash((self.field.conductor, self.num, self.den))

    def __repr__(self):
        return f"CycNum(N={self.field.conductor}, {self.num}/{self.den})"


def _frac_mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def _frac_sub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    b = list(b) + [Fraction(0)] * (n - len(b))
    return [x - y for x, y in zip(a, b)]
