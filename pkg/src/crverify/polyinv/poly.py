"""Sparse exact multivariate polynomials and exact square matrices.

A matrix ``g`` acts on forms by substitution ``x_i -> sum_j g[i][j] x_j``,
i.e. ``F(x) -> F(g x)``.  With this convention
``act(g @ h, F) == act(h, act(g, F))``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping, Optional, Sequence

from ..exactnum import ONE, ZERO, Cyclotomic, as_cyclotomic, cyc_sum

Exponent = tuple[int, ...]


class DegenerateInputError(ValueError):
    """Input for which the requested quantity is undefined (e.g. the zero form)."""


class MultiPoly:
    """A polynomial in ``nvars`` variables with Cyclotomic coefficients."""

    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, nvars: int, terms: Optional[Mapping[Exponent, object]] = None):
        self.nvars = nvars
        clean: dict[Exponent, Cyclotomic] = {}
        for e, c in (terms or {}).items():
            e = tuple(e)
            if len(e) != nvars or any(x < 0 for x in e):
                raise ValueError(f"bad exponent vector {e} for {nvars} variables")
            c = as_cyclotomic(c)
            if c:
                prev = clean.get(e)
                s = c if prev is None else prev + c
                if s:
                    clean[e] = s
                else:
                    clean.pop(e, None)
        self.terms = clean
        self._hash = None

    @classmethod
    def _from_clean(cls, nvars: int, terms: dict) -> "MultiPoly":
        obj = object.__new__(cls)
        obj.nvars = nvars
        obj.terms = terms
        obj._hash = None
        return obj

    @classmethod
    def variable(cls, nvars: int, i: int) -> "MultiPoly":
        e = [0] * nvars
        e[i] = 1
        return cls._from_clean(nvars, {tuple(e): ONE})

    @classmethod
    def constant(cls, nvars: int, c) -> "MultiPoly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def monomial(cls, exps: Sequence[int], c=1) -> "MultiPoly":
        return cls(len(exps), {tuple(exps): c})

    @classmethod
    def linear_form(cls, coeffs: Sequence) -> "MultiPoly":
        n = len(coeffs)
        return cls(n, {tuple(int(i == j) for j in range(n)): c for i, c in enumerate(coeffs)})

    # basic queries -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def coefficient(self, e: Sequence[int]) -> Cyclotomic:
        return self.terms.get(tuple(e), ZERO)

    def has_integer_coefficients(self) -> bool:
        return all(c.is_integer() for c in self.terms.values())

    def __eq__(self, other) -> bool:
        if isinstance(other, MultiPoly):
            return self.nvars == other.nvars and self.terms == other.terms
        if not self.terms:
            return other == 0
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    # arithmetic ----------------------------------------------------------

    def _check(self, other: "MultiPoly") -> None:
        if self.nvars != other.nvars:
            raise ValueError("polynomials in different numbers of variables")

    def __add__(self, other) -> "MultiPoly":
        if not isinstance(other, MultiPoly):
            other = MultiPoly.constant(self.nvars, other)
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            prev = out.get(e)
            if prev is None:
                out[e] = c
            else:
                s = prev + c
                if s:
                    out[e] = s
                else:
                    del out[e]
        return MultiPoly._from_clean(self.nvars, out)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly._from_clean(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "MultiPoly":
        if not isinstance(other, MultiPoly):
            other = MultiPoly.constant(self.nvars, other)
        return self + (-other)

    def __rsub__(self, other) -> "MultiPoly":
        return (-self) + other

    def __mul__(self, other) -> "MultiPoly":
        if not isinstance(other, MultiPoly):
            c = as_cyclotomic(other)
            if not c:
                return MultiPoly._from_clean(self.nvars, {})
            return MultiPoly._from_clean(self.nvars, {e: a * c for e, a in self.terms.items()})
        self._check(other)
        out: dict[Exponent, Cyclotomic] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                prev = out.get(e)
                out[e] = c1 * c2 if prev is None else prev + c1 * c2
        return MultiPoly._from_clean(self.nvars, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, other) -> "MultiPoly":
        c = as_cyclotomic(other)
        return self * c.inverse()

    def __pow__(self, k: int) -> "MultiPoly":
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        result = MultiPoly.constant(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def derivative(self, i: int) -> "MultiPoly":
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                f = list(e)
                f[i] -= 1
                out[tuple(f)] = c * e[i]
        return MultiPoly._from_clean(self.nvars, out)

    def gradient(self) -> list["MultiPoly"]:
        return [self.derivative(i) for i in range(self.nvars)]

    def evaluate(self, point: Sequence) -> Cyclotomic:
        if len(point) != self.nvars:
            raise ValueError("point has the wrong number of coordinates")
        pt = [as_cyclotomic(x) for x in point]
        total = ZERO
        for e, c in self.terms.items():
            t = c
            for x, k in zip(pt, e):
                if k:
                    t = t * x ** k
            total = total + t
        return total

    def evaluate_mod_p(self, point: Sequence[int], p: int) -> int:
        total = 0
        for e, c in self.terms.items():
            t = int(c) % p
            for x, k in zip(point, e):
                if k:
                    t = t * pow(x, k, p) % p
            total += t
        return total % p

    def substitute_linear(self, forms: Sequence["MultiPoly"]) -> "MultiPoly":
        """F(L_0, ..., L_{n-1}) for polynomials L_i, all in one common ring."""
        if len(forms) != self.nvars:
            raise ValueError("need one substitution per variable")
        m = forms[0].nvars
        cache: dict[tuple[int, int], MultiPoly] = {}

        def power(i, k):
            key = (i, k)
            if key not in cache:
                cache[key] = forms[i] if k == 1 else power(i, k - 1) * forms[i]
            return cache[key]

        total = MultiPoly._from_clean(m, {})
        for e, c in self.terms.items():
            t = MultiPoly.constant(m, c)
            for i, k in enumerate(e):
                if k:
                    t = t * power(i, k)
            total = total + t
        return total

    # text form -------------------------------------------------------------

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            factors = [c.to_text()]
            for i, k in enumerate(e):
                if k == 1:
                    factors.append(f"x{i + 1}")
                elif k > 1:
                    factors.append(f"x{i + 1}^{k}")
            parts.append("*".join(factors))
        return " + ".join(parts)

    @classmethod
    def from_text(cls, text: str, nvars: int) -> "MultiPoly":
        text = text.strip()
        if text == "0":
            return cls(nvars)
        terms: dict[Exponent, Cyclotomic] = {}
        for part in text.split(" + "):
            factors = part.strip().split("*")
            coef = ONE
            e = [0] * nvars
            for f in factors:
                m = re.fullmatch(r"x(\d+)(?:\^(\d+))?", f)
                if m:
                    i = int(m.group(1)) - 1
                    if not 0 <= i < nvars:
                        raise ValueError(f"variable {f} out of range")
                    e[i] += int(m.group(2) or 1)
                else:
                    coef = coef * Cyclotomic.from_text(f)
            key = tuple(e)
            terms[key] = terms.get(key, ZERO) + coef
        return cls(nvars, terms)

    def __repr__(self) -> str:
        return f"MultiPoly({self.to_text()})"


def elementary_symmetric(nvars: int, k: int) -> MultiPoly:
    terms = {}
    for idx in combinations(range(nvars), k):
        e = [0] * nvars
        for i in idx:
            e[i] = 1
        terms[tuple(e)] = ONE
    return MultiPoly(nvars, terms)


def monomials(nvars: int, d: int) -> list[Exponent]:
    """Exponent vectors of total degree d, in descending lexicographic order."""
    if nvars == 0:
        return [()] if d == 0 else []
    out = []
    for first in range(d, -1, -1):
        for rest in monomials(nvars - 1, d - first):
            out.append((first,) + rest)
    return out


# ---------------------------------------------------------------------------


class ExactMatrix:
    """A square matrix with Cyclotomic entries."""

    __slots__ = ("rows", "_hash")

    def __init__(self, rows: Iterable[Iterable]):
        rs = tuple(tuple(as_cyclotomic(x) for x in r) for r in rows)
        n = len(rs)
        if any(len(r) != n for r in rs):
            raise ValueError("matrix must be square")
        self.rows = rs
        self._hash = None

    @property
    def dim(self) -> int:
        return len(self.rows)

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def diagonal(cls, entries: Sequence) -> "ExactMatrix":
        n = len(entries)
        return cls([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def from_permutation(cls, perm: Sequence[int]) -> "ExactMatrix":
        """The matrix sending x_i to x_{perm[i]} under substitution."""
        n = len(perm)
        return cls([[int(perm[i] == j) for j in range(n)] for i in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other) -> bool:
        return isinstance(other, ExactMatrix) and self.rows == other.rows

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.rows)
        return self._hash

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.dim != other.dim:
            raise ValueError("dimension mismatch")
        cols = list(zip(*other.rows))
        return ExactMatrix([[cyc_sum(a * b for a, b in zip(r, c) if a and b) for c in cols]
                            for r in self.rows])

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(zip(*self.rows))

    def trace(self) -> Cyclotomic:
        return cyc_sum(self.rows[i][i] for i in range(self.dim))

    def is_integral(self) -> bool:
        return all(x.is_integer() for r in self.rows for x in r)

    def to_int_rows(self) -> list[list[int]]:
        return [[int(x) for x in r] for r in self.rows]

    def determinant(self) -> Cyclotomic:
        m = [list(r) for r in self.rows]
        n = len(m)
        det = ONE
        for c in range(n):
            piv = next((i for i in range(c, n) if m[i][c]), None)
            if piv is None:
                return ZERO
            if piv != c:
                m[c], m[piv] = m[piv], m[c]
                det = -det
            det = det * m[c][c]
            inv = m[c][c].inverse()
            for i in range(c + 1, n):
                if m[i][c]:
                    f = m[i][c] * inv
                    m[i] = [a - f * b for a, b in zip(m[i], m[c])]
        return det

    def inverse(self) -> "ExactMatrix":
        n = self.dim
        m = [list(r) + [ONE if i == j else ZERO for j in range(n)] for i, r in enumerate(self.rows)]
        for c in range(n):
            piv = next((i for i in range(c, n) if m[i][c]), None)
            if piv is None:
                raise ZeroDivisionError("singular matrix")
            m[c], m[piv] = m[piv], m[c]
            inv = m[c][c].inverse()
            m[c] = [x * inv for x in m[c]]
            for i in range(n):
                if i != c and m[i][c]:
                    f = m[i][c]
                    m[i] = [a - f * b for a, b in zip(m[i], m[c])]
        return ExactMatrix([r[n:] for r in m])

    def __repr__(self) -> str:
        return "ExactMatrix(" + "; ".join(" ".join(str(x) for x in r) for r in self.rows) + ")"


def act(g: ExactMatrix, F: MultiPoly) -> MultiPoly:
    """The form x -> F(g x)."""
    if g.dim != F.nvars:
        raise ValueError(f"matrix of size {g.dim} cannot act on {F.nvars} variables")
    forms = [MultiPoly(F.nvars, {tuple(int(k == j) for k in range(g.dim)): g.rows[i][j]
                                 for j in range(g.dim) if g.rows[i][j]})
             for i in range(g.dim)]
    return F.substitute_linear(forms)


def is_invariant(F: MultiPoly | Sequence[MultiPoly], gens: Iterable[ExactMatrix]) -> bool:
    """True iff every generator fixes every given form exactly."""
    forms = [F] if isinstance(F, MultiPoly) else list(F)
    gens = list(gens)
    return all(act(g, f) == f for f in forms for g in gens)


# ---------------------------------------------------------------------------
# exact linear algebra on Cyclotomic rows


def exact_rank(rows: Sequence[Sequence]) -> int:
    m = [[as_cyclotomic(x) for x in r] for r in rows]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = m[rank][c].inverse()
        for i in range(rank + 1, len(m)):
            if m[i][c]:
                f = m[i][c] * inv
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
        if rank == len(m):
            break
    return rank


def integer_rank(rows: Sequence[Sequence[int]]) -> int:
    """Exact rank of an integer matrix by fraction-free (Bareiss) elimination."""
    m = [list(map(int, r)) for r in rows]
    if not m:
        return 0
    nrows, ncols = len(m), len(m[0])
    rank = 0
    prev = 1
    for c in range(ncols):
        piv = next((i for i in range(rank, nrows) if m[i][c]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        pr = m[rank]
        pv = pr[c]
        for i in range(rank + 1, nrows):
            row = m[i]
            f = row[c]
            m[i] = [(pv * a - f * b) // prev for a, b in zip(row, pr)]
        prev = pv
        rank += 1
        if rank == nrows:
            break
    return rank


def jacobian_rank_at(forms: Sequence[MultiPoly], point: Sequence) -> int:
    """Exact rank of the Jacobian matrix of the forms at a point."""
    if not forms or any(f.is_zero() for f in forms):
        raise DegenerateInputError("the zero polynomial has no meaningful Jacobian")
    rows = [[df.evaluate(point) for df in f.gradient()] for f in forms]
    return exact_rank(rows)


def rational_point(values: Sequence) -> tuple[Cyclotomic, ...]:
    return tuple(as_cyclotomic(Fraction(v) if isinstance(v, str) else v) for v in values)
