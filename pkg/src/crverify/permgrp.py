"""Permutation groups with stabilizer chains.

Permutations are tuples of images over ``range(degree)``.  Products are
read left to right: ``perm_mul(p, q)`` applies ``p`` first, then ``q``, so
points are acted on from the right.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass, field
from itertools import product
from math import gcd
from typing import Callable, Iterable, Optional, Sequence

Perm = tuple[int, ...]

#: groups larger than this are refused by full-enumeration routines
ENUMERATION_BUDGET = 60_000


class UnsupportedGroupError(ValueError):
    """Raised for groups this package deliberately does not construct."""


class EnumerationBudgetError(RuntimeError):
    pass


# ---------------------------------------------------------------------------
# permutation helpers


def identity(n: int) -> Perm:
    return tuple(range(n))


def is_identity(p: Perm) -> bool:
    return all(i == x for i, x in enumerate(p))


def check_perm(p: Sequence[int]) -> None:
    if sorted(p) != list(range(len(p))):
        raise ValueError(f"not a permutation: {tuple(p)!r}")


def perm_mul(p: Perm, q: Perm) -> Perm:
    """``p`` followed by ``q``."""
    return tuple(map(q.__getitem__, p))


def perm_inv(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


def perm_conj(x: Perm, g: Perm) -> Perm:
    """g^-1 x g: the element acting as x after relabelling points by g."""
    out = [0] * len(x)
    for i, xi in enumerate(x):
        out[g[i]] = g[xi]
    return tuple(out)


def perm_comm(a: Perm, b: Perm) -> Perm:
    return perm_mul(perm_mul(perm_inv(a), perm_inv(b)), perm_mul(a, b))


def cycles(p: Perm) -> list[tuple[int, ...]]:
    seen = [False] * len(p)
    out = []
    for i in range(len(p)):
        if seen[i]:
            continue
        cyc = [i]
        seen[i] = True
        j = p[i]
        while j != i:
            cyc.append(j)
            seen[j] = True
            j = p[j]
        out.append(tuple(cyc))
    return out


def perm_order(p: Perm) -> int:
    o = 1
    for c in cycles(p):
        o = o * len(c) // gcd(o, len(c))
    return o


def perm_pow(p: Perm, k: int) -> Perm:
    out = [0] * len(p)
    for c in cycles(p):
        L = len(c)
        for i, x in enumerate(c):
            out[x] = c[(i + k) % L]
    return tuple(out)


def from_cycles(n: int, *cycs: Sequence[int]) -> Perm:
    img = list(range(n))
    for c in cycs:
        for i, x in enumerate(c):
            img[x] = c[(i + 1) % len(c)]
    check_perm(img)
    return tuple(img)


def format_perm(p: Perm) -> str:
    cs = [c for c in cycles(p) if len(c) > 1]
    return "".join("(" + ",".join(map(str, c)) + ")" for c in cs) or "()"


# ---------------------------------------------------------------------------
# Schreier-Sims


def _orbit_transversal(point: int, gens: Sequence[Perm], n: int) -> dict[int, Perm]:
    trans = {point: identity(n)}
    queue = [point]
    for b in queue:
        u = trans[b]
        for s in gens:
            c = s[b]
            if c not in trans:
                trans[c] = perm_mul(u, s)
                queue.append(c)
    return trans


@dataclass
class StabilizerChain:
    """Base, per-level strong generators, transversals and their inverses."""

    degree: int
    base: list[int]
    strong: list[list[Perm]]
    transversals: list[dict[int, Perm]]
    inverses: list[dict[int, Perm]] = field(default_factory=list)

    def __post_init__(self):
        if not self.inverses:
            self.inverses = [{b: perm_inv(u) for b, u in t.items()} for t in self.transversals]

    def order(self) -> int:
        o = 1
        for t in self.transversals:
            o *= len(t)
        return o

    def strip(self, g: Perm, start: int = 0) -> tuple[Perm, int]:
        for i in range(start, len(self.base)):
            b = g[self.base[i]]
            inv = self.inverses[i].get(b)
            if inv is None:
                return g, i
            g = perm_mul(g, inv)
        return g, len(self.base)


def schreier_sims(generators: Iterable[Perm], degree: Optional[int] = None,
                  base_prefix: Sequence[int] = ()) -> StabilizerChain:
    """Deterministic Schreier-Sims; base points are the smallest moved points."""
    gens = [tuple(g) for g in generators]
    if degree is None:
        if not gens:
            raise ValueError("degree required for an empty generating set")
        degree = len(gens[0])
    for g in gens:
        if len(g) != degree:
            raise ValueError("generators of different degrees")
        check_perm(g)
    gens = [g for g in gens if not is_identity(g)]
    base = list(base_prefix)
    for g in gens:
        if all(g[b] == b for b in base):
            base.append(next(x for x in range(degree) if g[x] != x))
    k = len(base)
    S = [[g for g in gens if all(g[base[j]] == base[j] for j in range(i))] for i in range(k)]
    T = [_orbit_transversal(base[i], S[i], degree) for i in range(k)]
    Tinv = [{b: perm_inv(u) for b, u in t.items()} for t in T]

    def strip(g, start):
        for l in range(start, len(base)):
            inv = Tinv[l].get(g[base[l]])
            if inv is None:
                return g, l
            g = perm_mul(g, inv)
        return g, len(base)

    i = k - 1
    while i >= 0:
        found = None
        for b, u_b in list(T[i].items()):
            for s in S[i]:
                sg = perm_mul(perm_mul(u_b, s), Tinv[i][s[b]])
                if is_identity(sg):
                    continue
                h, j = strip(sg, i + 1)
                if j < len(base) or not is_identity(h):
                    found = (h, j)
                    break
            if found:
                break
        if found is None:
            i -= 1
            continue
        h, j = found
        if j == len(base):
            base.append(next(x for x in range(degree) if h[x] != x))
            S.append([])
            T.append({})
            Tinv.append({})
        for l in range(i + 1, j + 1):
            S[l].append(h)
            T[l] = _orbit_transversal(base[l], S[l], degree)
            Tinv[l] = {b: perm_inv(u) for b, u in T[l].items()}
        i = j
    return StabilizerChain(degree, base, S, T, Tinv)


# ---------------------------------------------------------------------------


@dataclass
class ConjClasses:
    """Conjugacy classes of an enumerated permutation group."""

    group: "PermGroup"
    reps: list[Perm]
    sizes: list[int]
    orders: list[int]
    members: list[list[Perm]]
    element_class: dict[Perm, int]
    power_maps: dict[int, tuple[int, ...]] = field(default_factory=dict)

    @property
    def order(self) -> int:
        return self.group.order

    @property
    def exponent(self) -> int:
        e = 1
        for o in self.orders:
            e = e * o // gcd(e, o)
        return e

    def __len__(self) -> int:
        return len(self.reps)

    def class_of(self, g: Perm) -> int:
        try:
            return self.element_class[tuple(g)]
        except KeyError:
            raise ValueError(f"{format_perm(g)} is not an element of the group") from None

    def power_map(self, k: int) -> tuple[int, ...]:
        k %= self.exponent
        pm = self.power_maps.get(k)
        if pm is None:
            pm = tuple(self.element_class[perm_pow(r, k)] for r in self.reps)
            self.power_maps[k] = pm
        return pm

    def inverse_classes(self) -> tuple[int, ...]:
        return self.power_map(-1)

    def labels(self) -> list[str]:
        """Labels like ``5a``, ``5b`` in class order."""
        seen: dict[int, int] = {}
        out = []
        for o in self.orders:
            i = seen.get(o, 0)
            seen[o] = i + 1
            out.append(f"{o}{_letters(i)}")
        return out


def _letters(i: int) -> str:
    s = ""
    i += 1
    while i:
        i, r = divmod(i - 1, 26)
        s = chr(97 + r) + s
    return s


class PermGroup:
    """A permutation group given by generators, with a stabilizer chain."""

    def __init__(self, generators: Iterable[Sequence[int]], degree: Optional[int] = None,
                 base_prefix: Sequence[int] = (), name: str = ""):
        gens = [tuple(g) for g in generators]
        if degree is None:
            if not gens:
                raise ValueError("degree required for an empty generating set")
            degree = len(gens[0])
        self.degree = degree
        self.generators = [g for g in gens if not is_identity(g)]
        self.chain = schreier_sims(self.generators, degree, base_prefix)
        self.name = name
        self._elements: Optional[list[Perm]] = None
        self._classes: Optional[ConjClasses] = None
        self._small: Optional[list[Perm]] = None

    def __repr__(self) -> str:
        label = self.name or "PermGroup"
        return f"<{label} degree={self.degree} order={self.order}>"

    @property
    def order(self) -> int:
        return self.chain.order()

    @property
    def identity(self) -> Perm:
        return identity(self.degree)

    def __contains__(self, g) -> bool:
        g = tuple(g)
        if len(g) != self.degree:
            return False
        h, j = self.chain.strip(g)
        return j == len(self.chain.base) and is_identity(h)

    contains = __contains__

    # enumeration ------------------------------------------------------------

    def elements(self) -> list[Perm]:
        if self._elements is None:
            if self.order > ENUMERATION_BUDGET:
                raise EnumerationBudgetError(
                    f"group of order {self.order} exceeds the enumeration budget {ENUMERATION_BUDGET}")
            elems = [self.identity]
            for t in reversed(self.chain.transversals):
                reps = list(t.values())
                elems = [perm_mul(x, u) for x in elems for u in reps]
            self._elements = elems
        return self._elements

    def small_generators(self) -> list[Perm]:
        """A generating subset chosen greedily in the given order."""
        if self._small is None:
            chosen: list[Perm] = []
            sub = PermGroup([], self.degree)
            for g in self.generators:
                if g not in sub:
                    chosen.append(g)
                    sub = PermGroup(chosen, self.degree)
                    if sub.order == self.order:
                        break
            self._small = chosen
        return self._small

    def random_element(self, rng: random.Random) -> Perm:
        g = self.identity
        for t in reversed(self.chain.transversals):
            reps = list(t.values())
            g = perm_mul(g, reps[rng.randrange(len(reps))])
        return g

    def element_orders(self) -> dict[int, int]:
        counts: dict[int, int] = {}
        cc = self.conjugacy_classes()
        for o, s in zip(cc.orders, cc.sizes):
            counts[o] = counts.get(o, 0) + s
        return dict(sorted(counts.items()))

    def exponent(self) -> int:
        return self.conjugacy_classes().exponent

    # orbits and actions --------------------------------------------------------

    def orbit(self, point: int, gens: Optional[Sequence[Perm]] = None) -> list[int]:
        gens = self.generators if gens is None else gens
        seen = {point}
        queue = [point]
        for b in queue:
            for s in gens:
                c = s[b]
                if c not in seen:
                    seen.add(c)
                    queue.append(c)
        return sorted(seen)

    def orbits(self) -> list[list[int]]:
        seen: set[int] = set()
        out = []
        for p in range(self.degree):
            if p not in seen:
                o = self.orbit(p)
                seen.update(o)
                out.append(o)
        return out

    def is_transitive(self) -> bool:
        return self.degree == 0 or len(self.orbit(0)) == self.degree

    def point_stabilizer(self, p: int) -> "PermGroup":
        chain = schreier_sims(self.generators, self.degree, base_prefix=[p])
        gens = chain.strong[1] if len(chain.strong) > 1 else []
        return PermGroup(gens, self.degree)

    def subgroup(self, gens: Iterable[Sequence[int]], name: str = "") -> "PermGroup":
        gens = [tuple(g) for g in gens]
        for g in gens:
            if g not in self:
                raise ValueError(f"{format_perm(g)} is not in the group")
        return PermGroup(gens, self.degree, name=name)

    def is_subgroup_of(self, other: "PermGroup") -> bool:
        return self.degree == other.degree and all(g in other for g in self.generators)

    def derived_subgroup(self) -> "PermGroup":
        """Normal closure of the commutators of the generators."""
        gens = self.generators
        comms = [perm_comm(a, b) for i, a in enumerate(gens) for b in gens[i + 1:]]
        comms = [c for c in comms if not is_identity(c)]
        sub = PermGroup(comms, self.degree)
        changed = True
        while changed:
            changed = False
            for n in list(sub.generators):
                for g in gens:
                    c = perm_conj(n, g)
                    if c not in sub:
                        sub = PermGroup(sub.generators + [c], self.degree)
                        changed = True
        return sub

    def is_abelian(self) -> bool:
        g = self.generators
        return all(perm_mul(a, b) == perm_mul(b, a) for a in g for b in g)

    # blocks ---------------------------------------------------------------

    def _block_partition(self, a: int, b: int) -> list[list[int]]:
        parent = list(range(self.degree))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        parent[find(b)] = find(a)
        queue = [(a, b)]
        for x, y in queue:
            for g in self.generators:
                u, v = find(g[x]), find(g[y])
                if u != v:
                    parent[v] = u
                    queue.append((g[x], g[y]))
        classes: dict[int, list[int]] = {}
        for x in range(self.degree):
            classes.setdefault(find(x), []).append(x)
        return sorted(classes.values())

    def minimal_blocks(self) -> list[list[tuple[int, ...]]]:
        """All minimal nontrivial block systems (Atkinson's method)."""
        if not self.is_transitive():
            raise ValueError("block systems are only defined for transitive groups")
        systems: dict[tuple[int, ...], list[tuple[int, ...]]] = {}
        for b in range(1, self.degree):
            part = self._block_partition(0, b)
            if len(part) == 1:
                continue
            block0 = tuple(next(c for c in part if 0 in c))
            systems[block0] = [tuple(c) for c in part]
        minimal = []
        for blk, part in systems.items():
            s = set(blk)
            if not any(set(o) < s for o in systems if o != blk):
                minimal.append(part)
        return sorted(minimal, key=lambda p: (len(p[0]), p))

    def is_primitive(self) -> bool:
        return not self.minimal_blocks()

    def transitivity_degree(self, max_k: int = 3) -> int:
        if not self.is_transitive():
            return 0
        k = 1
        group: PermGroup = self
        remaining = list(range(self.degree))
        while k < max_k and len(remaining) > 1:
            p = remaining.pop(0)
            group = group.point_stabilizer(p)
            if group.orbit(remaining[0]) != remaining:
                break
            k += 1
        return k

    # conjugacy classes ------------------------------------------------------

    def conjugacy_classes(self) -> ConjClasses:
        if self._classes is None:
            self._classes = _conjugacy_classes(self)
        return self._classes


def _conjugacy_classes(G: PermGroup) -> ConjClasses:
    elems = G.elements()
    gens = G.small_generators()
    ginv = [perm_inv(g) for g in gens]
    assigned: dict[Perm, int] = {}
    raw: list[list[Perm]] = []
    for x in elems:
        if x in assigned:
            continue
        idx = len(raw)
        assigned[x] = idx
        cls = [x]
        for y in cls:
            for g, gi in zip(gens, ginv):
                # g^-1 y g
                z = tuple(map(g.__getitem__, map(y.__getitem__, gi)))
                if z not in assigned:
                    assigned[z] = idx
                    cls.append(z)
        raw.append(cls)
    order = sorted(range(len(raw)), key=lambda i: (len(raw[i]), min(raw[i])))
    members = [sorted(raw[i]) for i in order]
    remap = {old: new for new, old in enumerate(order)}
    element_class = {x: remap[i] for x, i in assigned.items()}
    reps = [m[0] for m in members]
    sizes = [len(m) for m in members]
    orders = [perm_order(r) for r in reps]
    cc = ConjClasses(G, reps, sizes, orders, members, element_class)
    for k in range(cc.exponent + 1):
        cc.power_map(k)
    return cc


# ---------------------------------------------------------------------------
# coset actions


def coset_action(G: PermGroup, H: PermGroup) -> PermGroup:
    """Action of G on the right cosets of H, by right multiplication."""
    if not H.is_subgroup_of(G):
        raise ValueError("H is not a subgroup of G")
    helems = H.elements()
    coset_of: dict[Perm, int] = {}
    reps: list[Perm] = []
    for g in G.elements():
        if g in coset_of:
            continue
        idx = len(reps)
        reps.append(g)
        for h in helems:
            coset_of[perm_mul(h, g)] = idx
    gens = []
    for s in G.generators:
        gens.append(tuple(coset_of[perm_mul(r, s)] for r in reps))
    return PermGroup(gens, len(reps))


# ---------------------------------------------------------------------------
# small finite fields


@dataclass(frozen=True)
class _Field:
    q: int
    p: int
    add: tuple[tuple[int, ...], ...]
    mul: tuple[tuple[int, ...], ...]

    def neg(self, a: int) -> int:
        return next(b for b in range(self.q) if self.add[a][b] == 0)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("zero in a finite field")
        return next(b for b in range(self.q) if self.mul[a][b] == 1)

    def primitive(self) -> int:
        for a in range(2, self.q) if self.q > 2 else [1]:
            x, o = a, 1
            while x != 1:
                x = self.mul[x][a]
                o += 1
            if o == self.q - 1:
                return a
        return 1


def _prime_power(q: int) -> tuple[int, int]:
    for p in range(2, q + 1):
        if q % p == 0:
            k, r = 0, q
            while r % p == 0:
                r //= p
                k += 1
            if r != 1:
                raise ValueError(f"{q} is not a prime power")
            return p, k
    raise ValueError(f"{q} is not a prime power")


def finite_field(q: int) -> _Field:
    """GF(q) for q = p^k with k <= 3, elements encoded as base-p digits."""
    p, k = _prime_power(q)
    if k > 3:
        raise ValueError("only extension degrees up to 3 are supported")
    if k == 1:
        add = tuple(tuple((a + b) % p for b in range(p)) for a in range(p))
        mul = tuple(tuple((a * b) % p for b in range(p)) for a in range(p))
        return _Field(q, p, add, mul)
    # first monic polynomial of degree k over F_p without roots
    for tail in product(range(p), repeat=k):
        poly = list(reversed(tail)) + [1]  # low degree first
        if all(sum(c * pow(x, i, p) for i, c in enumerate(poly)) % p for x in range(p)):
            break

    def digits(a):
        return [(a // p**i) % p for i in range(k)]

    def encode(d):
        return sum(c * p**i for i, c in enumerate(d))

    def mulpoly(a, b):
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(digits(a)):
            for j, y in enumerate(digits(b)):
                prod[i + j] += x * y
        for m in range(2 * k - 2, k - 1, -1):
            c = prod[m]
            if c:
                for i in range(k + 1):
                    prod[m - k + i] -= c * poly[i]
        return encode([c % p for c in prod[:k]])

    add = tuple(tuple(encode([(x + y) % p for x, y in zip(digits(a), digits(b))])
                      for b in range(q)) for a in range(q))
    mul = tuple(tuple(mulpoly(a, b) for b in range(q)) for a in range(q))
    return _Field(q, p, add, mul)


# ---------------------------------------------------------------------------
# constructors


def symmetric(n: int) -> PermGroup:
    if n < 2:
        return PermGroup([], max(n, 1), name=f"S{n}")
    gens = [from_cycles(n, (0, 1)), from_cycles(n, tuple(range(n)))]
    return PermGroup(gens, n, name=f"S{n}")


def alternating(n: int) -> PermGroup:
    if n < 3:
        return PermGroup([], max(n, 1), name=f"A{n}")
    gens = [from_cycles(n, (0, 1, i)) for i in range(2, n)]
    return PermGroup(gens, n, name=f"A{n}")


def cyclic(n: int) -> PermGroup:
    """The regular action of the cyclic group of order n."""
    return PermGroup([from_cycles(n, tuple(range(n)))] if n > 1 else [], n, name=f"C{n}")


def direct_sum(*groups: PermGroup) -> PermGroup:
    """The product group acting on the disjoint union of the point sets."""
    degree = sum(g.degree for g in groups)
    gens = []
    offset = 0
    for g in groups:
        for s in g.generators:
            img = list(range(degree))
            for i, x in enumerate(s):
                img[offset + i] = offset + x
            gens.append(tuple(img))
        offset += g.degree
    return PermGroup(gens, degree)


def diagonal_sum(G: PermGroup, copies: int = 2) -> PermGroup:
    """G acting simultaneously on ``copies`` disjoint copies of its points."""
    n = G.degree
    gens = [tuple(c * n + s[i] for c in range(copies) for i in range(n)) for s in G.generators]
    return PermGroup(gens, n * copies)


PSL2_FIELDS = (4, 5, 7, 8, 9, 11, 13)


def psl2(q: int) -> PermGroup:
    """PSL_2(q) acting on the q+1 points of the projective line over GF(q)."""
    if q not in PSL2_FIELDS:
        raise ValueError(f"unsupported field size q={q}; supported: {PSL2_FIELDS}")
    F = finite_field(q)
    inf = q

    def mobius(a, b, c, d):
        img = []
        for x in range(q + 1):
            if x == inf:
                num, den = a, c
            else:
                num = F.add[F.mul[a][x]][b]
                den = F.add[F.mul[c][x]][d]
            img.append(inf if den == 0 else F.mul[num][F.inv(den)])
        return tuple(img)

    w = F.primitive()
    one, zero = 1, 0
    gens = [
        mobius(one, one, zero, one),
        mobius(w, zero, zero, F.inv(w)),
        mobius(zero, F.neg(one), one, zero),
    ]
    name = f"SL2({q})" if q % 2 == 0 else f"PSL2({q})"
    return PermGroup(gens, q + 1, name=name)


def sl2_8() -> PermGroup:
    return psl2(8)


def _vectors(q: int, dim: int) -> list[tuple[int, ...]]:
    return [v for v in product(range(q), repeat=dim) if any(v)]


def sl3_3_on_26() -> PermGroup:
    """SL_3(3) acting on the 26 nonzero vectors of GF(3)^3."""
    vecs = _vectors(3, 3)
    index = {v: i for i, v in enumerate(vecs)}
    gens = []
    for i in range(3):
        for j in range(3):
            if i != j:
                # x_i -> x_i + x_j
                img = []
                for v in vecs:
                    w = list(v)
                    w[i] = (w[i] + v[j]) % 3
                    img.append(index[tuple(w)])
                gens.append(tuple(img))
    return PermGroup(gens, 26, name="SL3(3):26")


def sl3_3_on_13() -> PermGroup:
    """SL_3(3) acting on the 13 points of P^2(GF(3))."""
    pts = projective_points(3, 3)
    index = {v: i for i, v in enumerate(pts)}
    gens = []
    for i in range(3):
        for j in range(3):
            if i != j:
                img = []
                for v in pts:
                    w = list(v)
                    w[i] = (w[i] + v[j]) % 3
                    img.append(index[_normalize_projective(w, 3)])
                gens.append(tuple(img))
    return PermGroup(gens, 13, name="SL3(3):13")


def _normalize_projective(v, p):
    lead = next(x for x in v if x)
    inv = pow(lead, -1, p)
    return tuple((x * inv) % p for x in v)


def projective_points(p: int, dim: int) -> list[tuple[int, ...]]:
    return sorted({_normalize_projective(v, p) for v in _vectors(p, dim)})


def psp4_3_on_40() -> PermGroup:
    """PSp_4(3) acting on the 40 points of P^3(GF(3)) via symplectic transvections."""
    p = 3
    pts = projective_points(p, 4)
    index = {v: i for i, v in enumerate(pts)}

    def form(x, y):
        return (x[0] * y[2] + x[1] * y[3] - x[2] * y[0] - x[3] * y[1]) % p

    gens = []
    for v in pts:
        img = []
        for x in pts:
            c = form(x, v)
            y = tuple((xi + c * vi) % p for xi, vi in zip(x, v))
            img.append(index[_normalize_projective(y, p)])
        gens.append(tuple(img))
    full = PermGroup(gens, 40)
    return PermGroup(full.small_generators(), 40, name="PSp4(3):40")


def mathieu(n: int) -> PermGroup:
    raise UnsupportedGroupError(f"Mathieu group M{n} is not constructed by this package")


# ---------------------------------------------------------------------------
# subgroups used by the checks


def fano_plane_lines() -> list[frozenset[int]]:
    return [frozenset({i, (i + 1) % 7, (i + 3) % 7}) for i in range(7)]


def a7_psl27_subgroup(A7: Optional[PermGroup] = None) -> PermGroup:
    """The collineation group of the Fano plane on {0..6}, inside A7."""
    A7 = A7 or alternating(7)
    lines = set(fano_plane_lines())
    keep = [g for g in A7.elements()
            if {frozenset(g[x] for x in L) for L in lines} == lines]
    sub = PermGroup(keep, 7)
    return PermGroup(sub.small_generators(), 7, name="PSL2(7)")


def s5_in_a7() -> PermGroup:
    """S5 inside A7: odd permutations of {0..4} are paired with (5 6)."""
    gens = [from_cycles(7, (0, 1), (5, 6)), from_cycles(7, (0, 1, 2, 3, 4))]
    return PermGroup(gens, 7, name="S5<A7")


def find_subgroup_by_pair(G: PermGroup, order_a: int, order_b: int, target: int,
                          seed: int = 0, tries: int = 2000) -> tuple[PermGroup, tuple[Perm, Perm]]:
    """A subgroup of the given order generated by elements of two given orders.

    A seeded random search runs first; if it fails, the first element of order
    ``order_a`` is fixed and every element of order ``order_b`` is tried.
    """
    elems = G.elements()
    cands_a = [g for g in elems if perm_order(g) == order_a]
    cands_b = [g for g in elems if perm_order(g) == order_b]
    if not cands_a or not cands_b:
        raise ValueError("no elements of the requested orders")
    rng = random.Random(seed)
    for _ in range(tries):
        a, b = rng.choice(cands_a), rng.choice(cands_b)
        H = PermGroup([a, b], G.degree)
        if H.order == target:
            return H, (a, b)
    a = cands_a[0]
    for b in cands_b:
        H = PermGroup([a, b], G.degree)
        if H.order == target:
            return H, (a, b)
    raise ValueError(f"no subgroup of order {target} generated by such a pair")


def psl2_11_a5_subgroup(G: Optional[PermGroup] = None, seed: int = 0) -> PermGroup:
    G = G or psl2(11)
    H, _ = find_subgroup_by_pair(G, 2, 5, 60, seed=seed)
    H.name = "A5<PSL2(11)"
    return H


# ---------------------------------------------------------------------------
# group name strings


def _base_group(spec: str) -> PermGroup:
    s = spec.strip()
    m = re.fullmatch(r"([AS])(\d+)", s)
    if m:
        n = int(m.group(2))
        return alternating(n) if m.group(1) == "A" else symmetric(n)
    m = re.fullmatch(r"M(\d+)", s)
    if m:
        return mathieu(int(m.group(1)))
    m = re.fullmatch(r"P?SL2\((\d+)\)", s)
    if m:
        return psl2(int(m.group(1)))
    if s in ("SL3(3):26", "SL3(3)"):
        return sl3_3_on_26()
    if s == "SL3(3):13":
        return sl3_3_on_13()
    if s in ("PSp4(3):40", "PSp4(3)"):
        return psp4_3_on_40()
    raise ValueError(f"unknown group name {spec!r}")


def group_from_spec(spec: str, seed: int = 0) -> PermGroup:
    """Parse strings such as ``A7``, ``PSL2(11)``, ``SL3(3):26``, ``coset:A7/PSL2(7)``."""
    s = spec.strip()
    if s.startswith("coset:"):
        big, _, small = s[len("coset:"):].partition("/")
        G = _base_group(big)
        H = _named_subgroup(big.strip(), small.strip(), G, seed)
        A = coset_action(G, H)
        A.name = s
        return A
    G = _base_group(s)
    G.name = G.name or s
    return G


def _named_subgroup(big: str, small: str, G: PermGroup, seed: int) -> PermGroup:
    if big == "A7" and small == "PSL2(7)":
        return a7_psl27_subgroup(G)
    if big == "A7" and small == "S5":
        return s5_in_a7()
    if big == "A7" and small == "A6":
        return G.point_stabilizer(0)
    if big == "PSL2(11)" and small == "A5":
        return psl2_11_a5_subgroup(G, seed)
    raise ValueError(f"no known embedding of {small} in {big}")

