"""Exact arithmetic in cyclotomic fields.

Elements of Q(zeta_n) are stored densely in the power basis
1, z, ..., z^(phi(n)-1) modulo the n-th cyclotomic polynomial, as an
integer numerator vector over a common positive denominator.  Every
constructor reduces to the smallest conductor, so two values are equal
exactly when their stored representations are identical.

Rationals are plain :class:`fractions.Fraction` values; a Cyclotomic of
conductor 1 converts back to one with :meth:`Cyclotomic.to_fraction`.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from math import gcd
from numbers import Rational as _RationalABC
from typing import Iterable, Mapping, Sequence, Union

Number = Union[int, Fraction, "Cyclotomic"]


# ---------------------------------------------------------------------------
# number-theoretic helpers


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def euler_phi(n: int) -> int:
    result = n
    for p in prime_factors(n):
        result -= result // p
    return result


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, lowest degree first."""
    # x^n - 1 divided by Phi_d for every proper divisor d
    num = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            num = _poly_exact_div(num, list(cyclotomic_polynomial(d)))
    return tuple(num)


def _poly_exact_div(a: list[int], b: list[int]) -> list[int]:
    a = list(a)
    out = [0] * (len(a) - len(b) + 1)
    lead = b[-1]
    for i in range(len(out) - 1, -1, -1):
        c, r = divmod(a[i + len(b) - 1], lead)
        if r:
            raise ArithmeticError("inexact polynomial division")
        out[i] = c
        if c:
            for j, bj in enumerate(b):
                a[i + j] -= c * bj
    if any(a[: len(b) - 1]):
        raise ArithmeticError("inexact polynomial division")
    return out


@lru_cache(maxsize=None)
def _power_table(n: int) -> tuple[tuple[int, ...], ...]:
    """Row m holds the reduction of x^m modulo Phi_n, for 0 <= m < n."""
    phi = euler_phi(n)
    poly = cyclotomic_polynomial(n)
    rows = []
    cur = [0] * phi
    cur[0] = 1
    for _ in range(n):
        rows.append(tuple(cur))
        # multiply by x and reduce with the monic relation
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            for j in range(phi):
                cur[j] -= top * poly[j]
    return tuple(rows)


@lru_cache(maxsize=None)
def _descent_data(n: int, m: int):
    """Embedding Q(zeta_m) -> Q(zeta_n) and a left inverse on pivot rows.

    Returns (embed, pivots, inverse) where ``embed[i][j]`` is coefficient i of
    zeta_m^j written in the Q(zeta_n) basis.
    """
    phi_n, phi_m = euler_phi(n), euler_phi(m)
    table = _power_table(n)
    step = n // m
    cols = [table[(j * step) % n] for j in range(phi_m)]
    embed = [[Fraction(cols[j][i]) for j in range(phi_m)] for i in range(phi_n)]
    # choose phi_m independent rows by elimination on a copy
    work = [row[:] for row in embed]
    pivots: list[int] = []
    basis: list[list[Fraction]] = []
    for i, row in enumerate(work):
        r = row[:]
        for prow, pcol in basis:
            if r[pcol]:
                f = r[pcol] / prow[pcol]
                r = [x - f * y for x, y in zip(r, prow)]
        nz = next((c for c, x in enumerate(r) if x), None)
        if nz is not None:
            basis.append((r, nz))
            pivots.append(i)
            if len(pivots) == phi_m:
                break
    sub = [embed[i][:] for i in pivots]
    inverse = _invert_fraction_matrix(sub)
    return embed, tuple(pivots), inverse


def _invert_fraction_matrix(a: list[list[Fraction]]) -> list[list[Fraction]]:
    k = len(a)
    aug = [row[:] + [Fraction(int(i == j)) for j in range(k)] for i, row in enumerate(a)]
    for col in range(k):
        piv = next(r for r in range(col, k) if aug[r][col])
        aug[col], aug[piv] = aug[piv], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for r in range(k):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[k:] for row in aug]


# ---------------------------------------------------------------------------


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, _RationalABC):
        return Fraction(x.numerator, x.denominator)
    raise TypeError(f"not a rational number: {x!r}")


class Cyclotomic:
    """An immutable element of a cyclotomic field Q(zeta_n)."""

    __slots__ = ("_n", "_num", "_den", "_hash")

    def __init__(self, conductor: int, coeffs: Sequence):
        """Build from power-basis coefficients modulo Phi_conductor.

        ``coeffs`` may be shorter than phi(conductor) or longer (any power
        of zeta is accepted); the value is reduced and normalized.
        """
        if conductor < 1:
            raise ValueError("conductor must be positive")
        powers = {j: c for j, c in enumerate(coeffs) if c}
        n, num, den = _reduce_powers(conductor, powers)
        self._set(n, num, den)

    def _set(self, n, num, den):
        self._n = n
        self._num = num
        self._den = den
        self._hash = None

    @classmethod
    def _raw(cls, n: int, num: tuple[int, ...], den: int) -> "Cyclotomic":
        obj = object.__new__(cls)
        n, num, den = _normalize(n, list(num), den)
        obj._set(n, num, den)
        return obj

    # constructors -------------------------------------------------------

    @classmethod
    def rational(cls, q) -> "Cyclotomic":
        q = _as_fraction(q)
        obj = object.__new__(cls)
        obj._set(1, (q.numerator,), q.denominator)
        return obj

    @classmethod
    def zeta(cls, n: int, k: int = 1) -> "Cyclotomic":
        """The root of unity exp(2 pi i k / n)."""
        return cls.from_powers(n, {k % n: 1})

    @classmethod
    def from_powers(cls, n: int, powers: Mapping[int, object]) -> "Cyclotomic":
        """Sum of c * zeta_n^j over the mapping {j: c}."""
        folded: dict[int, object] = {}
        for j, c in powers.items():
            folded[j % n] = folded.get(j % n, 0) + c
        obj = object.__new__(cls)
        obj._set(*_reduce_powers(n, folded))
        return obj

    @classmethod
    def sqrt_rational(cls, d: int) -> "Cyclotomic":
        """A square root of the integer ``d``, built from quadratic Gauss sums."""
        if d == 0:
            return cls.rational(0)
        sign = -1 if d < 0 else 1
        a = abs(d)
        square, free = 1, 1
        for p in prime_factors(a):
            e = 0
            while a % p == 0:
                a //= p
                e += 1
            square *= p ** (e // 2)
            if e % 2:
                free *= p
        root = cls.rational(1)
        for p in prime_factors(free):
            root = root * _sqrt_prime(p)
        if sign < 0:
            root = root * cls.zeta(4)
        return root * square

    # accessors ----------------------------------------------------------

    @property
    def conductor(self) -> int:
        return self._n

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self._den) for c in self._num)

    def is_rational(self) -> bool:
        return self._n == 1

    def is_integer(self) -> bool:
        return self._n == 1 and self._den == 1

    def to_fraction(self) -> Fraction:
        if self._n != 1:
            raise ValueError(f"{self} is not rational")
        return Fraction(self._num[0], self._den)

    def __int__(self) -> int:
        q = self.to_fraction()
        if q.denominator != 1:
            raise ValueError(f"{self} is not an integer")
        return q.numerator

    def __complex__(self) -> complex:
        import cmath

        z = cmath.exp(2j * cmath.pi / self._n)
        return sum(c * z**j for j, c in enumerate(self._num)) / self._den

    def __bool__(self) -> bool:
        return self._num != (0,)

    # comparison ---------------------------------------------------------

    def _key(self):
        return (self._n, self._num, self._den)

    def sort_key(self):
        return self._key()

    def __eq__(self, other) -> bool:
        if isinstance(other, Cyclotomic):
            return self._key() == other._key()
        if isinstance(other, (int, Fraction)):
            return self._n == 1 and Fraction(self._num[0], self._den) == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            if self._n == 1:
                self._hash = hash(Fraction(self._num[0], self._den))
            else:
                self._hash = hash(self._key())
        return self._hash

    # arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> "Cyclotomic":
        if isinstance(other, Cyclotomic):
            return other
        return Cyclotomic.rational(other)

    def __add__(self, other):
        try:
            b = self._coerce(other)
        except TypeError:
            return NotImplemented
        n = _lcm(self._n, b._n)
        x, y = self._lift(n), b._lift(n)
        den = self._den * b._den // gcd(self._den, b._den)
        fa, fb = den // self._den, den // b._den
        return Cyclotomic._raw(n, tuple(fa * p + fb * q for p, q in zip(x, y)), den)

    __radd__ = __add__

    def __neg__(self):
        obj = object.__new__(Cyclotomic)
        obj._set(self._n, tuple(-c for c in self._num), self._den)
        return obj

    def __sub__(self, other):
        try:
            b = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = _as_fraction(other)
            return Cyclotomic._raw(
                self._n, tuple(c * q.numerator for c in self._num), self._den * q.denominator
            )
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        if self._n == 1:
            return other * Fraction(self._num[0], self._den)
        if other._n == 1:
            return self * Fraction(other._num[0], other._den)
        n = _lcm(self._n, other._n)
        x, y = self._lift(n), other._lift(n)
        phi = len(x)
        prod = [0] * (2 * phi - 1)
        for i, a in enumerate(x):
            if a:
                for j, b in enumerate(y):
                    if b:
                        prod[i + j] += a * b
        table = _power_table(n)
        out = prod[:phi]
        for m in range(phi, 2 * phi - 1):
            c = prod[m]
            if c:
                row = table[m % n]
                for j in range(phi):
                    if row[j]:
                        out[j] += c * row[j]
        return Cyclotomic._raw(n, tuple(out), self._den * other._den)

    __rmul__ = __mul__

    def inverse(self) -> "Cyclotomic":
        if not self:
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        if self._n == 1:
            return Cyclotomic.rational(1 / Fraction(self._num[0], self._den))
        # product of the other Galois conjugates divided by the norm
        others = Cyclotomic.rational(1)
        for k in range(2, self._n):
            if gcd(k, self._n) == 1:
                others = others * self.galois(k)
        norm = (self * others).to_fraction()
        return others * (1 / norm)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            q = _as_fraction(other)
            if q == 0:
                raise ZeroDivisionError("division by zero")
            return self * (1 / q)
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inverse() ** (-e)
        result = Cyclotomic.rational(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # Galois action --------------------------------------------------------

    def galois(self, k: int) -> "Cyclotomic":
        """Apply the automorphism zeta_n -> zeta_n^k."""
        n = self._n
        if n == 1:
            return self
        if gcd(k, n) != 1:
            raise ValueError(f"exponent {k} is not coprime to the conductor {n}")
        return Cyclotomic._from_reduced_powers(
            n, {(j * k) % n: c for j, c in enumerate(self._num) if c}, self._den
        )

    def conjugate(self) -> "Cyclotomic":
        return self.galois(-1)

    # helpers ------------------------------------------------------------------

    def _lift(self, n: int) -> list[int]:
        """Numerators of this value written in the Q(zeta_n) power basis."""
        if n == self._n:
            return list(self._num)
        phi = euler_phi(n)
        table = _power_table(n)
        step = n // self._n
        out = [0] * phi
        for j, c in enumerate(self._num):
            if c:
                row = table[(j * step) % n]
                for i in range(phi):
                    if row[i]:
                        out[i] += c * row[i]
        return out

    @classmethod
    def _from_reduced_powers(cls, n, powers, den):
        obj = object.__new__(cls)
        n2, num, den2 = _reduce_powers(n, {j: Fraction(c, den) for j, c in powers.items()})
        obj._set(n2, num, den2)
        return obj

    # text ---------------------------------------------------------------------

    def to_text(self) -> str:
        if self._n == 1:
            return _frac_text(Fraction(self._num[0], self._den))
        body = ",".join(_frac_text(Fraction(c, self._den)) for c in self._num)
        return f"cyc({self._n})[{body}]"

    @classmethod
    def from_text(cls, text: str) -> "Cyclotomic":
        text = text.strip()
        m = re.fullmatch(r"cyc\((\d+)\)\[(.*)\]", text)
        if m:
            n = int(m.group(1))
            parts = [Fraction(p) for p in m.group(2).split(",")] if m.group(2) else []
            if len(parts) != euler_phi(n):
                raise ValueError(f"expected {euler_phi(n)} coefficients for conductor {n}")
            return cls(n, parts)
        return cls.rational(Fraction(text))

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"Cyclotomic({self.to_text()!r})"


def _frac_text(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _reduce_powers(n: int, powers: Mapping[int, object]):
    """Reduce a sum over powers of zeta_n to (conductor, numerators, den)."""
    fracs = {j: _as_fraction(c) for j, c in powers.items() if c}
    if not fracs:
        return 1, (0,), 1
    if n % 4 == 2:
        # zeta_n^j = (-1)^j zeta_m^(j (m+1)/2) with m = n/2
        m = n // 2
        half = (m + 1) // 2
        moved: dict[int, Fraction] = {}
        for j, c in fracs.items():
            key = (j * half) % m
            moved[key] = moved.get(key, 0) + (-c if j % 2 else c)
        return _reduce_powers(m, moved)
    den = 1
    for c in fracs.values():
        den = den * c.denominator // gcd(den, c.denominator)
    phi = euler_phi(n)
    table = _power_table(n)
    num = [0] * phi
    for j, c in fracs.items():
        scaled = c.numerator * (den // c.denominator)
        row = table[j % n]
        for i in range(phi):
            if row[i]:
                num[i] += scaled * row[i]
    return _normalize(n, num, den)


def _normalize(n: int, num: list[int], den: int):
    g = den
    for c in num:
        if c:
            g = gcd(g, c)
            if g == 1:
                break
    if not any(num):
        return 1, (0,), 1
    if g > 1:
        num = [c // g for c in num]
        den //= g
    if n == 1:
        return 1, (num[0],), den
    if not any(num[1:]):
        return 1, (num[0],), den
    if n % 4 == 2:
        return _reduce_powers(n, {j: Fraction(c, den) for j, c in enumerate(num) if c})
    for p in prime_factors(n):
        m = n // p
        if m % 4 == 2:
            m //= 2
        if m == n:
            continue
        sub = _try_descend(n, m, num)
        if sub is not None:
            return _normalize(m, sub, den)
    return n, tuple(num), den


def _try_descend(n: int, m: int, num: list[int]):
    """Coefficients in Q(zeta_m) if the element lies there, else None."""
    embed, pivots, inverse = _descent_data(n, m)
    target = [num[i] for i in pivots]
    coeffs = [sum(row[j] * target[j] for j in range(len(target))) for row in inverse]
    if any(c.denominator != 1 for c in coeffs):
        return None
    coeffs = [int(c) for c in coeffs]
    for i in range(len(num)):
        if sum(embed[i][j] * coeffs[j] for j in range(len(coeffs))) != num[i]:
            return None
    return coeffs


def _sqrt_prime(p: int) -> Cyclotomic:
    if p == 2:
        # zeta_8 + zeta_8^7
        return Cyclotomic.from_powers(8, {1: 1, 7: 1})
    gauss = Cyclotomic.from_powers(p, {(x * x) % p: 2 for x in range(1, (p - 1) // 2 + 1)}) + 1
    # gauss^2 = p for p = 1 mod 4 and -p for p = 3 mod 4
    if p % 4 == 1:
        return gauss
    return gauss * Cyclotomic.zeta(4, 3)


# ---------------------------------------------------------------------------
# module-level operations


def as_cyclotomic(x: Number) -> Cyclotomic:
    return x if isinstance(x, Cyclotomic) else Cyclotomic.rational(x)


def cyc_add(a: Number, b: Number) -> Cyclotomic:
    return as_cyclotomic(a) + b


def cyc_mul(a: Number, b: Number) -> Cyclotomic:
    return as_cyclotomic(a) * b


def cyc_inv(a: Number) -> Cyclotomic:
    return as_cyclotomic(a).inverse()


def galois_conjugate(a: Number, k: int) -> Cyclotomic:
    return as_cyclotomic(a).galois(k)


def cyc_sum(values: Iterable[Number]) -> Cyclotomic:
    total = Cyclotomic.rational(0)
    for v in values:
        total = total + v
    return total


ZERO = Cyclotomic.rational(0)
ONE = Cyclotomic.rational(1)
