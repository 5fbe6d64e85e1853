"""Exact arithmetic in cyclotomic fields Q(zeta_N).

Elements live on the power basis 1, z, z^2, ..., z^(d-1) where z = exp(2*pi*i/N)
and d = phi(N); the minimal polynomial of z is the N-th cyclotomic polynomial.
A value is a tuple of d integer numerators over one positive common
denominator, kept normalized (gcd of numerators and denominator is 1; zero is
the all-zero tuple over denominator 1), so equality and hashing are structural.

The default working level for the rest of the package is N = 36, which hosts
all roots of unity of order dividing 36 (in particular i = z^9, omega = z^12
and the primitive ninth root z^4).  Mixing elements of different levels raises
MixedLevelError; promote() embeds a lower level into a multiple.

>>> F = field(12)
>>> w = F.zeta(4)          # primitive cube root of unity
>>> w**3 == 1
True
>>> (w + w**2).rational()
Fraction(-1, 1)
>>> (F.one / (1 - w)) * (1 - w) == 1
True

Everything is exact; approx() produces a complex float for eyeballing only.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from functools import lru_cache
from math import gcd

__all__ = [
    "CycNum",
    "CyclotomicField",
    "MixedLevelError",
    "cyclotomic_polynomial",
    "field",
    "multiplicative_order",
    "promote",
    "root_of_unity",
    "zeta",
]

DEFAULT_LEVEL = 36


class MixedLevelError(ValueError):
    """Raised when two elements of different cyclotomic levels are combined."""


def _poly_divide_exact(num: list[int], den: list[int]) -> list[int]:
    """Quotient of an exact division of integer polynomials (low-first coeffs)."""
    num = list(num)
    dden = len(den) - 1
    while den[dden] == 0:
        dden -= 1
    lead = den[dden]
    out = [0] * (len(num) - dden)
    for k in range(len(num) - 1 - dden, -1, -1):
        c = num[k + dden]
        if c % lead != 0:
            raise ArithmeticError("polynomial division is not exact")
        q = c // lead
        out[k] = q
        if q:
            for j in range(dden + 1):
                num[k + j] -= q * den[j]
    if any(num):
        raise ArithmeticError("polynomial division left a remainder")
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, low degree first, monic.

    >>> cyclotomic_polynomial(1)
    (-1, 1)
    >>> cyclotomic_polynomial(4)
    (1, 0, 1)
    >>> cyclotomic_polynomial(36)
    (1, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 1)
    """
    if n < 1:
        raise ValueError("n must be positive")
    poly = [-1] + [0] * (n - 1) + [1]  # x^n - 1
    for d in range(1, n):
        if n % d == 0:
            poly = _poly_divide_exact(poly, list(cyclotomic_polynomial(d)))
    return tuple(poly)


def _totient(n: int) -> int:
    count = 0
    for k in range(1, n + 1):
        if gcd(k, n) == 1:
            count += 1
    return count


class CyclotomicField:
    """The field Q(zeta_n) with precomputed reduction data.

    Use the module-level field(n) factory; instances are cached and compared
    by identity.
    """

    def __init__(self, n: int):
        self.n = n
        self.degree = _totient(n)
        phi = cyclotomic_polynomial(n)
        # x^degree = -(low part of Phi); rows give x^k reduced, degree<=k<2*degree-1
        d = self.degree
        rows: list[tuple[int, ...]] = []
        top = [-c for c in phi[:d]]
        rows.append(tuple(top))
        for _ in range(d - 2):
            prev = rows[-1]
            nxt = [0] + list(prev[: d - 1])
            if prev[d - 1]:
                for j in range(d):
                    nxt[j] += prev[d - 1] * top[j]
            rows.append(tuple(nxt))
        self._reduce_rows = rows
        # all N powers of zeta on the power basis (integer coordinates)
        powers: list[tuple[int, ...]] = []
        for k in range(n):
            if k < d:
                vec = [0] * d
                vec[k] = 1
            else:
                vec = self._reduce_monomial(k)
            powers.append(tuple(vec))
        self._zeta_powers = powers
        self._zeta_lookup = {coeffs: k for k, coeffs in enumerate(powers)}
        self.zero = self._build((0,) * d, 1)
        self.one = self._build(tuple([1] + [0] * (d - 1)), 1)

    def _reduce_monomial(self, k: int) -> list[int]:
        vec = [0] * k + [1]
        return self._reduce_into_basis(vec)

    def _reduce_into_basis(self, vec: list[int]) -> list[int]:
        d = self.degree
        for k in range(len(vec) - 1, d - 1, -1):
            c = vec[k]
            if c:
                vec[k] = 0
                row = self._reduce_rows[k - d] if k - d < len(self._reduce_rows) else None
                if row is None:
                    # degree too high for the table: peel one step at a time
                    top = self._reduce_rows[0]
                    for j in range(d):
                        vec[k - d + j] += c * top[j]
                    # the shifted contribution may still exceed the basis; loop continues
                    continue
                for j in range(d):
                    vec[j] += c * row[j]
        return vec[:d]

    def _build(self, num: tuple[int, ...], den: int) -> CycNum:
        x = object.__new__(CycNum)
        x.field = self
        x.num = num
        x.den = den
        return x

    def element(self, coeffs, den: int = 1) -> CycNum:
        """Element with the given power-basis coefficients over a common denominator."""
        vec = list(coeffs)
        if len(vec) > self.degree:
            vec = self._reduce_into_basis(vec)
        elif len(vec) < self.degree:
            vec = vec + [0] * (self.degree - len(vec))
        return _normalize(self, vec, den)

    def from_rational(self, q) -> CycNum:
        q = Fraction(q)
        vec = [0] * self.degree
        vec[0] = q.numerator
        return _normalize(self, vec, q.denominator)

    def zeta(self, k: int = 1) -> CycNum:
        """The root of unity z^k (z the fixed primitive n-th root)."""
        return self._build(self._zeta_powers[k % self.n], 1)

    def log_zeta(self, x: CycNum) -> int | None:
        """k with x == zeta(k), or None if x is not a power of zeta."""
        if x.field is not self or x.den != 1:
            return None
        return self._zeta_lookup.get(x.num)

    def __repr__(self):
        return f"CyclotomicField({self.n})"


@lru_cache(maxsize=None)
def field(n: int) -> CyclotomicField:
    return CyclotomicField(n)


def _normalize(fld: CyclotomicField, vec: list[int], den: int) -> CycNum:
    if den == 0:
        raise ZeroDivisionError("zero denominator")
    if den < 0:
        den = -den
        vec = [-c for c in vec]
    g = den
    for c in vec:
        if c:
            g = gcd(g, c)
            if g == 1:
                break
    if g > 1:
        den //= g
        vec = [c // g for c in vec]
    if not any(vec):
        return fld.zero
    return fld._build(tuple(vec), den)


class CycNum:
    """An exact element of a cyclotomic field.

    Immutable by convention; supports field arithmetic with other elements of
    the same level and with Python ints / Fractions.
    """

    __slots__ = ("field", "num", "den")

    def __init__(self, fld: CyclotomicField, coeffs, den: int = 1):
        x = fld.element(coeffs, den)
        self.field = fld
        self.num = x.num
        self.den = x.den

    # -- coercion -----------------------------------------------------------

    def _coerce(self, other) -> "CycNum | None":
        if isinstance(other, CycNum):
            if other.field is not self.field:
                raise MixedLevelError(
                    f"levels {self.field.n} and {other.field.n} cannot be mixed; "
                    "promote() one side first"
                )
            return other
        if isinstance(other, int):
            return self.field.from_rational(other)
        if isinstance(other, Fraction):
            return self.field.from_rational(other)
        return None

    # -- ring operations ----------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self, o
        vec = [x * b.den + y * a.den for x, y in zip(a.num, b.num)]
        return _normalize(self.field, vec, a.den * b.den)

    __radd__ = __add__

    def __neg__(self):
        return self.field._build(tuple(-c for c in self.num), self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        vec = [x * o.den - y * self.den for x, y in zip(self.num, o.num)]
        return _normalize(self.field, vec, self.den * o.den)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d = self.field.degree
        out = [0] * (2 * d - 1)
        for i, a in enumerate(self.num):
            if a:
                for j, b in enumerate(o.num):
                    if b:
                        out[i + j] += a * b
        vec = self.field._reduce_into_basis(out)
        return _normalize(self.field, vec, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self) -> "CycNum":
        """Multiplicative inverse, by solving (self) * x = 1 exactly."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        d = self.field.degree
        # columns: self * z^i on the power basis, as Fractions
        cols = []
        zi = self.field.one
        for _ in range(d):
            prod = self * zi
            cols.append([Fraction(c, prod.den) for c in prod.num])
            zi = zi * self.field.zeta(1)
        # solve sum_i x_i * cols[i] = e0 by Gaussian elimination
        mat = [[cols[j][i] for j in range(d)] for i in range(d)]
        rhs = [Fraction(1 if i == 0 else 0) for i in range(d)]
        for col in range(d):
            piv = next(r for r in range(col, d) if mat[r][col] != 0)
            mat[col], mat[piv] = mat[piv], mat[col]
            rhs[col], rhs[piv] = rhs[piv], rhs[col]
            inv = 1 / mat[col][col]
            mat[col] = [c * inv for c in mat[col]]
            rhs[col] *= inv
            for r in range(d):
                if r != col and mat[r][col]:
                    f = mat[r][col]
                    mat[r] = [a - f * b for a, b in zip(mat[r], mat[col])]
                    rhs[r] -= f * rhs[col]
        denom = 1
        for q in rhs:
            denom = denom * q.denominator // gcd(denom, q.denominator)
        vec = [int(q * denom) for q in rhs]
        return _normalize(self.field, vec, denom)

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

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        out = self.field.one
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- predicates and views ------------------------------------------------

    def is_zero(self) -> bool:
        return not any(self.num)

    def is_one(self) -> bool:
        return self.den == 1 and self.num == self.field.one.num

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return Fraction(self.num[0], self.den)

    def coeffs(self) -> tuple[Fraction, ...]:
        """Power-basis coordinates as Fractions."""
        return tuple(Fraction(c, self.den) for c in self.num)

    @property
    def level(self) -> int:
        return self.field.n

    def to_obj(self):
        """JSON-ready form: power-basis integer numerators, denominator, level."""
        return {"level": self.field.n, "num": list(self.num), "den": self.den}

    @staticmethod
    def from_obj(obj) -> "CycNum":
        fld = field(int(obj["level"]))
        return fld.element([int(c) for c in obj["num"]], int(obj["den"]))

    def approx(self) -> complex:
        """Float approximation (debugging only; never used in computations)."""
        z = cmath.exp(2j * cmath.pi / self.field.n)
        acc = 0j
        for k, c in enumerate(self.num):
            if c:
                acc += c * z**k
        return acc / self.den

    # -- equality ------------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, CycNum):
            if other.field is not self.field:
                if self.is_rational() and other.is_rational():
                    return self.rational() == other.rational()
                raise MixedLevelError(
                    f"equality across levels {self.field.n} / {other.field.n}"
                )
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.rational() == other
        return NotImplemented

    def __hash__(self):
        if self.is_rational():
            return hash(self.rational())
        return hash((self.field.n, self.num, self.den))

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        if self.is_zero():
            return "0"
        terms = []
        for k, c in enumerate(self.num):
            if not c:
                continue
            if k == 0:
                t = str(c)
            else:
                mon = "z" if k == 1 else f"z^{k}"
                if c == 1:
                    t = mon
                elif c == -1:
                    t = f"-{mon}"
                else:
                    t = f"{c}*{mon}"
            terms.append(t)
        body = " + ".join(terms).replace("+ -", "- ")
        if self.den != 1:
            return f"({body})/{self.den}"
        return body


# -- module-level helpers ----------------------------------------------------


def zeta(n: int = DEFAULT_LEVEL, k: int = 1) -> CycNum:
    """The root of unity zeta_n^k as an element of Q(zeta_n)."""
    return field(n).zeta(k)


def root_of_unity(k: int, m: int, n: int = DEFAULT_LEVEL) -> CycNum:
    """zeta_m^k inside Q(zeta_n); requires m | n.

    >>> root_of_unity(1, 4) == zeta(36, 9)
    True
    """
    if n % m != 0:
        raise ValueError(f"order {m} does not divide the level {n}")
    return field(n).zeta((k % m) * (n // m))


def multiplicative_order(x: CycNum, cap: int | None = None) -> int | None:
    """Order of x in the multiplicative group, or None if not a root of unity.

    The roots of unity in Q(zeta_n) have order dividing lcm(2, n); the search
    cap defaults to that bound.
    """
    if x.is_zero():
        return None
    n = x.field.n
    if cap is None:
        cap = n if n % 2 == 0 else 2 * n
    p = x
    for k in range(1, cap + 1):
        if p.is_one():
            return k
        p = p * x
    return None


def promote(x: CycNum, n: int) -> CycNum:
    """Embed x from its own level m into Q(zeta_n), for m | n."""
    m = x.field.n
    if n % m != 0:
        raise ValueError(f"cannot embed level {m} into level {n}")
    fld = field(n)
    step = n // m
    out = fld.zero
    for k, c in enumerate(x.num):
        if c:
            out = out + fld.zeta(k * step) * c
    return out * Fraction(1, x.den)
