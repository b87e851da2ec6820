"""Character tables computed with the Dixon-Schneider method.

Class-sum matrices are diagonalised simultaneously over a prime field
GF(p) with p = 1 mod exponent(G); the resulting mod-p character values are
lifted to cyclotomic integers through eigenvalue multiplicities.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations, product
from math import comb, gcd
from typing import Iterable, Optional, Sequence

from .exactnum import ONE, Cyclotomic, as_cyclotomic, cyc_sum, prime_factors
from .modp import rref, charpoly_mod_p, is_prime, nullspace_mod_p, primitive_root, roots_mod_p
from .permgrp import ConjClasses, Perm, PermGroup, perm_conj, perm_inv


class CharacterTableError(RuntimeError):
    """A computed table failed an internal consistency check."""


# ---------------------------------------------------------------------------
# class functions


class ClassFunction:
    """Values on the conjugacy classes of one group."""

    __slots__ = ("classes", "values")

    def __init__(self, classes: ConjClasses, values: Iterable):
        vals = tuple(as_cyclotomic(v) for v in values)
        if len(vals) != len(classes):
            raise ValueError(f"expected {len(classes)} values, got {len(vals)}")
        self.classes = classes
        self.values = vals

    def _same(self, other: "ClassFunction") -> None:
        if self.classes is not other.classes:
            raise ValueError("class functions live on different groups")

    @property
    def degree(self) -> Cyclotomic:
        return self.values[0]

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, k: int) -> Cyclotomic:
        return self.values[k]

    def __iter__(self):
        return iter(self.values)

    def __eq__(self, other) -> bool:
        if isinstance(other, ClassFunction):
            return self.classes is other.classes and self.values == other.values
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.values)

    def __add__(self, other: "ClassFunction") -> "ClassFunction":
        self._same(other)
        return ClassFunction(self.classes, [a + b for a, b in zip(self.values, other.values)])

    def __sub__(self, other: "ClassFunction") -> "ClassFunction":
        self._same(other)
        return ClassFunction(self.classes, [a - b for a, b in zip(self.values, other.values)])

    def __mul__(self, other) -> "ClassFunction":
        if isinstance(other, ClassFunction):
            self._same(other)
            return ClassFunction(self.classes, [a * b for a, b in zip(self.values, other.values)])
        c = as_cyclotomic(other)
        return ClassFunction(self.classes, [a * c for a in self.values])

    __rmul__ = __mul__

    def conjugate(self) -> "ClassFunction":
        return ClassFunction(self.classes, [a.conjugate() for a in self.values])

    def galois(self, k: int) -> "ClassFunction":
        return ClassFunction(self.classes, [a.galois(k % a.conductor) for a in self.values])

    def power_map_values(self, k: int) -> "ClassFunction":
        """The class function g -> f(g^k)."""
        pm = self.classes.power_map(k)
        return ClassFunction(self.classes, [self.values[pm[i]] for i in range(len(self))])

    def kernel(self) -> frozenset[int]:
        d = self.values[0]
        return frozenset(i for i, v in enumerate(self.values) if v == d)

    def is_real(self) -> bool:
        return all(v == v.conjugate() for v in self.values)

    def to_text(self) -> list[str]:
        return [v.to_text() for v in self.values]

    def sort_key(self):
        return tuple(v.sort_key() for v in self.values)

    def __repr__(self) -> str:
        return "ClassFunction(" + ", ".join(str(v) for v in self.values) + ")"


def trivial_character(classes: ConjClasses) -> ClassFunction:
    return ClassFunction(classes, [1] * len(classes))


def regular_character(classes: ConjClasses) -> ClassFunction:
    return ClassFunction(classes, [classes.order] + [0] * (len(classes) - 1))


def permutation_character(classes: ConjClasses) -> ClassFunction:
    """Fixed-point counts of the group's own permutation action."""
    return ClassFunction(classes, [sum(1 for i, x in enumerate(r) if i == x) for r in classes.reps])


def coset_character(classes: ConjClasses, H: PermGroup) -> ClassFunction:
    """Permutation character of G on the cosets of H: |C_G(g)| |g^G n H| / |H|."""
    counts = [0] * len(classes)
    for h in H.elements():
        counts[classes.class_of(h)] += 1
    n = classes.order
    vals = []
    for k, size in enumerate(classes.sizes):
        v = Fraction(n // size * counts[k], H.order)
        if v.denominator != 1:
            raise CharacterTableError("coset character is not integral")
        vals.append(int(v))
    return ClassFunction(classes, vals)


def inner_product(chi: ClassFunction, psi: ClassFunction) -> Cyclotomic:
    chi._same(psi)
    total = cyc_sum(size * a * b.conjugate()
                    for size, a, b in zip(chi.classes.sizes, chi.values, psi.values))
    return total / chi.classes.order


def sym_power_character(chi: ClassFunction, d: int) -> ClassFunction:
    """Character of the d-th symmetric power, by the Newton recursion."""
    if d < 0:
        raise ValueError("d must be non-negative")
    cl = chi.classes
    r = len(cl)
    h = [[ONE] * r]
    p = [None] + [chi.power_map_values(k).values for k in range(1, d + 1)]
    for m in range(1, d + 1):
        row = []
        for i in range(r):
            s = cyc_sum(p[k][i] * h[m - k][i] for k in range(1, m + 1))
            row.append(s / m)
        h.append(row)
    return ClassFunction(cl, h[d])


def molien_invariant_dim(chi: ClassFunction, d: int) -> int:
    """Dimension of degree-d invariants of a representation affording chi."""
    val = inner_product(sym_power_character(chi, d), trivial_character(chi.classes))
    if not val.is_integer() or int(val) < 0:
        raise CharacterTableError(f"invariant count {val} is not a non-negative integer")
    return int(val)


def dixon_prime(order: int, exponent: int, bound: int = 10**7) -> int:
    """Smallest prime p = 1 mod exponent with p > 2 sqrt(order)."""
    p = exponent + 1
    while p <= bound:
        if p * p > 4 * order and is_prime(p):
            return p
        p += exponent
    raise CharacterTableError(f"no prime = 1 mod {exponent} below {bound}")


# ---------------------------------------------------------------------------
# character tables


@dataclass
class CharacterTable:
    classes: ConjClasses
    irreducibles: list[ClassFunction]
    prime: int = 0

    @property
    def degrees(self) -> list[int]:
        return [int(chi.degree) for chi in self.irreducibles]

    @property
    def order(self) -> int:
        return self.classes.order

    def __len__(self) -> int:
        return len(self.irreducibles)

    def __getitem__(self, i: int) -> ClassFunction:
        return self.irreducibles[i]

    def trivial(self) -> ClassFunction:
        return trivial_character(self.classes)

    def characters_of_degree(self, d: int) -> list[ClassFunction]:
        return [chi for chi in self.irreducibles if chi.degree == d]

    def verify(self) -> None:
        """Raise unless both orthogonality relations and the degree sum hold exactly."""
        n = self.order
        if sum(d * d for d in self.degrees) != n:
            raise CharacterTableError("sum of squared degrees differs from the group order")
        irr = self.irreducibles
        for i, a in enumerate(irr):
            for j, b in enumerate(irr[i:], start=i):
                ip = inner_product(a, b)
                if ip != (1 if i == j else 0):
                    raise CharacterTableError(f"rows {i},{j} have inner product {ip}")
        r = len(self.classes)
        cols = [[chi.values[k] for chi in irr] for k in range(r)]
        conj_cols = [[v.conjugate() for v in col] for col in cols]
        for k in range(r):
            for l in range(k, r):
                s = cyc_sum(x * y for x, y in zip(cols[k], conj_cols[l]))
                want = n // self.classes.sizes[k] if k == l else 0
                if s != want:
                    raise CharacterTableError(f"columns {k},{l} are not orthogonal")

    def is_galois_stable(self) -> bool:
        e = self.classes.exponent
        rows = set(self.irreducibles)
        for k in range(1, e):
            if gcd(k, e) == 1 and any(chi.galois(k) not in rows for chi in self.irreducibles):
                return False
        return True

    def to_json(self) -> dict:
        cl = self.classes
        primes = prime_factors(cl.order) if cl.order > 1 else []
        return {
            "order": cl.order,
            "classes": [
                {"size": s, "element_order": o} for s, o in zip(cl.sizes, cl.orders)
            ],
            "labels": cl.labels(),
            "power_maps": {str(q): list(cl.power_map(q)) for q in primes},
            "characters": [chi.to_text() for chi in self.irreducibles],
        }


def class_matrices_mod_p(classes: ConjClasses, p: int) -> list[list[list[int]]]:
    """M_j[l][k] = #{x in C_j : x^-1 z_k in C_l} for a fixed z_k in C_k, modulo p."""
    r = len(classes)
    ec = classes.element_class
    mats = [[[0] * r for _ in range(r)] for _ in range(r)]
    pairs = []
    for j, mem in enumerate(classes.members):
        for x in mem:
            pairs.append((j, perm_inv(x)))
    for k, z in enumerate(classes.reps):
        zget = z.__getitem__
        for j, xi in pairs:
            l = ec[tuple(map(zget, xi))]
            mats[j][l][k] += 1
    return [[[v % p for v in row] for row in m] for m in mats]


def dixon_character_table(G: PermGroup | ConjClasses) -> CharacterTable:
    """Irreducible characters of G over cyclotomic integers, verified before return."""
    classes = G if isinstance(G, ConjClasses) else G.conjugacy_classes()
    r = len(classes)
    n = classes.order
    if r == 1:
        tab = CharacterTable(classes, [trivial_character(classes)], 0)
        tab.verify()
        return tab
    e = classes.exponent
    p = dixon_prime(n, e)
    mats = class_matrices_mod_p(classes, p)

    # common eigenvectors, kept as RREF bases of column spaces
    spaces: list[list[list[int]]] = [[[int(i == j) for j in range(r)] for i in range(r)]]
    for j in range(1, r):
        if all(len(s) == 1 for s in spaces):
            break
        A = mats[j]
        new_spaces = []
        for basis in spaces:
            if len(basis) == 1:
                new_spaces.append(basis)
                continue
            _, piv = rref(basis, p)
            # image of each basis vector, restricted coordinates at the pivots
            images = [[sum(A[i][c] * v[c] for c in range(r)) % p for i in range(r)] for v in basis]
            d = len(basis)
            R = [[images[b][piv[a]] for b in range(d)] for a in range(d)]
            cp = charpoly_mod_p(R, p)
            roots = roots_mod_p(cp, p)
            pieces = []
            for lam in roots:
                M = [[(R[a][b] - (lam if a == b else 0)) % p for b in range(d)] for a in range(d)]
                for coeffs in [nullspace_mod_p(M, p)]:
                    if coeffs:
                        vecs = [[sum(c[b] * basis[b][i] for b in range(d)) % p for i in range(r)]
                                for c in coeffs]
                        pieces.append(rref(vecs, p)[0])
            if sum(len(s) for s in pieces) != d:
                raise CharacterTableError(
                    f"class matrix {j} is not diagonalisable on a subspace of dimension {d}")
            new_spaces.extend(pieces)
        spaces = new_spaces
    if any(len(s) != 1 for s in spaces):
        raise CharacterTableError("class matrices did not split the class algebra")

    inv_cls = classes.inverse_classes()
    size_inv = [pow(s, -1, p) for s in classes.sizes]
    g = primitive_root(p)
    chars_mod_p = []
    for (v,) in spaces:
        if v[0] == 0:
            raise CharacterTableError("eigenvector vanishes on the identity class")
        inv0 = pow(v[0], -1, p)
        w = [(x * inv0) % p for x in v]
        s = sum(w[k] * w[inv_cls[k]] * size_inv[k] for k in range(r)) % p
        d2 = (n * pow(s, -1, p)) % p
        deg = next((d for d in range(1, (p + 1) // 2) if (d * d - d2) % p == 0), None)
        if deg is None:
            raise CharacterTableError("no degree solves the norm equation")
        chars_mod_p.append([(deg * w[k] * size_inv[k]) % p for k in range(r)])

    irreducibles = []
    for cm in chars_mod_p:
        vals = []
        for k in range(r):
            o = classes.orders[k]
            if o == 1:
                vals.append(Cyclotomic.rational(cm[k]))
                continue
            z = pow(g, (p - 1) // o, p)
            o_inv = pow(o, -1, p)
            pw = [cm[classes.power_map(jj)[k]] for jj in range(o)]
            mult = {}
            for l in range(o):
                zl = pow(z, (-l) % o, p)
                acc, zz = 0, 1
                for jj in range(o):
                    acc += pw[jj] * zz
                    zz = (zz * zl) % p
                m = (acc * o_inv) % p
                if m:
                    mult[l] = m
            vals.append(Cyclotomic.from_powers(o, mult))
        irreducibles.append(ClassFunction(classes, vals))
    irreducibles.sort(key=lambda chi: (int(chi.degree), chi.sort_key()))
    tab = CharacterTable(classes, irreducibles, p)
    tab.verify()
    return tab


# ---------------------------------------------------------------------------
# restriction and decomposition


@dataclass
class FusionMap:
    """For each class of H, the class of G containing it."""

    sub_classes: ConjClasses
    ambient_classes: ConjClasses
    mapping: tuple[int, ...]
    conjugators: list[Optional[Perm]] = field(default_factory=list)


def find_conjugator(G: PermGroup, x: Perm, y: Perm) -> Optional[Perm]:
    """Some g in G with g^-1 x g = y, by search over the enumerated group."""
    for g in G.elements():
        if perm_conj(x, g) == y:
            return g
    return None


def subgroup_fusion(H: PermGroup, G: PermGroup, with_conjugators: bool = False) -> FusionMap:
    gcl = G.conjugacy_classes()
    hcl = H.conjugacy_classes()
    mapping = []
    conj = []
    for rep in hcl.reps:
        if rep not in G:
            raise ValueError("subgroup element is not in the ambient group")
        k = gcl.class_of(rep)
        mapping.append(k)
        if with_conjugators:
            c = find_conjugator(G, rep, gcl.reps[k])
            if c is None:
                raise CharacterTableError("no conjugating element found")
            conj.append(c)
    return FusionMap(hcl, gcl, tuple(mapping), conj)


def restrict(chi: ClassFunction, fusion: FusionMap) -> ClassFunction:
    if chi.classes is not fusion.ambient_classes:
        raise ValueError("character is not defined on the ambient group of the fusion")
    return ClassFunction(fusion.sub_classes, [chi.values[k] for k in fusion.mapping])


def decompose(f: ClassFunction, table: CharacterTable) -> list[int]:
    out = []
    for i, chi in enumerate(table.irreducibles):
        m = inner_product(f, chi)
        if not m.is_integer():
            raise ValueError(f"inner product with irreducible {i} is {m}, not an integer")
        out.append(int(m))
    return out


def min_faithful_rep_degree(table: CharacterTable) -> int:
    """Smallest degree of a faithful representation, from kernels of irreducibles."""
    r = len(table.classes)
    full = frozenset(range(r))
    target = frozenset({0})
    items = sorted(((int(chi.degree), chi.kernel()) for chi in table.irreducibles),
                   key=lambda t: t[0])
    best = [sum(d for d, _ in items) + 1]

    def dfs(i, kern, total):
        if total >= best[0]:
            return
        if kern == target:
            best[0] = total
            return
        for j in range(i, len(items)):
            d, k = items[j]
            nk = kern & k
            if nk != kern:
                dfs(j + 1, nk, total + d)

    dfs(0, full, 0)
    return max(best[0], 1)


# ---------------------------------------------------------------------------
# matching printed rows against a computed table


@dataclass
class RowMatch:
    """Column bijection and row correspondence between a printed and a computed table."""

    columns: tuple[int, ...]
    rows: dict[str, int]
    column_labels: list[str]


def match_printed_rows(table: CharacterTable, column_orders: Sequence[int],
                       rows: dict[str, Sequence]) -> Optional[RowMatch]:
    """Find a column bijection (respecting element orders) under which every
    printed row equals some computed row exactly.  Returns None if none exists."""
    cl = table.classes
    if len(column_orders) != len(cl):
        return None
    printed = {name: [as_cyclotomic(v) for v in vals] for name, vals in rows.items()}
    by_order: dict[int, list[int]] = {}
    for k, o in enumerate(cl.orders):
        by_order.setdefault(o, []).append(k)
    col_groups: dict[int, list[int]] = {}
    for c, o in enumerate(column_orders):
        col_groups.setdefault(o, []).append(c)
    if sorted((o, len(v)) for o, v in col_groups.items()) != sorted((o, len(v)) for o, v in by_order.items()):
        return None
    orders = sorted(col_groups)
    choices = [list(permutations(by_order[o])) for o in orders]
    labels = cl.labels()
    for combo in product(*choices):
        cols = [0] * len(column_orders)
        for o, perm in zip(orders, combo):
            for c, k in zip(col_groups[o], perm):
                cols[c] = k
        found = {}
        for name, vals in printed.items():
            hit = next((i for i, chi in enumerate(table.irreducibles)
                        if all(chi.values[cols[c]] == v for c, v in enumerate(vals))), None)
            if hit is None:
                break
            found[name] = hit
        else:
            return RowMatch(tuple(cols), found, [labels[k] for k in cols])
    return None


def binomial_sym_dim(n: int, d: int) -> int:
    return comb(n + d - 1, d)
