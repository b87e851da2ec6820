"""Numerical constraints on Fano threefolds with a finite group action.

Genus relations, the singular-point bound from smoothing, basket
inequalities from orbifold Riemann-Roch, Riemann-Hurwitz enumeration,
divisor-degree divisibility and two small Diophantine eliminations.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Optional, Sequence


class NoSuchFanoError(ValueError):
    """No smooth Fano threefold of Picard rank one has the requested genus."""


# ---------------------------------------------------------------------------
# Gorenstein numerics


@dataclass
class FanoNumerics:
    genus: int
    anticanonical_cube: Fraction
    rho: int = 1
    h12: Optional[int] = None

    @classmethod
    def gorenstein(cls, g: int, rho: int = 1, h12: Optional[int] = None) -> "FanoNumerics":
        return cls(g, Fraction(2 * g - 2), rho, h12)


def h0_anticanonical(g: int) -> int:
    """h^0(-K) = g + 2, so that dim |-K| = g + 1."""
    return g + 2


def quadric_count(g: int) -> int:
    """Number of independent quadrics through the anticanonical model."""
    return (g - 2) * (g - 3) // 2


def lefschetz(g: int) -> int:
    """Lefschetz number 2g - 20 of the involution considered for genus g."""
    return 2 * g - 20


#: h^{1,2} of smooth Fano threefolds of Picard rank one and index one, by genus
FANO_H12 = {2: 52, 3: 30, 4: 20, 5: 14, 6: 10, 7: 7, 8: 5, 9: 3, 10: 2, 12: 0}


def fano_h12(g: int) -> int:
    if g not in FANO_H12:
        raise NoSuchFanoError(f"no smooth Fano threefold with rho=1 and genus {g}")
    return FANO_H12[g]


def namikawa_bound(rho: int, h12: int) -> int:
    """Upper bound 20 - rho + h^{1,2} for the number of nodes of a smoothable Fano."""
    return 20 - rho + h12


def product_case_bounds(rhos: Sequence[int] = (7, 8, 9, 10), h12: int = 0) -> list[dict]:
    """Smoothings S x P^1 (S del Pezzo) with -K^3 = 6(11 - rho), h^{1,2}(S x P^1) = 0."""
    out = []
    for rho in rhos:
        k3 = 6 * (11 - rho)
        g = k3 // 2 + 1
        out.append({"rho": rho, "anticanonical_cube": k3, "genus": g,
                    "h12": h12, "bound": namikawa_bound(rho, h12)})
    return out


# ---------------------------------------------------------------------------
# baskets


@dataclass(frozen=True)
class Basket:
    """Orbits of non-Gorenstein points: each orbit is (size, indices of its basket points)."""

    orbits: tuple[tuple[int, tuple[int, ...]], ...]

    @property
    def m(self) -> int:
        return len(self.orbits)

    def weight(self) -> Fraction:
        return sum((n * sum((Fraction(r) - Fraction(1, r) for r in rs), Fraction(0))
                    for n, rs in self.orbits), Fraction(0))

    def single_index(self) -> bool:
        return all(len(rs) == 1 for _, rs in self.orbits)

    def as_dict(self) -> dict:
        return {"m": self.m, "orbits": [{"n": n, "r": list(rs)} for n, rs in self.orbits],
                "weight": str(self.weight())}


def _index_tuples(budget: Fraction, max_r: int, start: int = 2):
    """Nondecreasing tuples of indices r >= start with sum (r - 1/r) < or = budget."""
    yield ()
    for r in range(start, max_r + 1):
        w = Fraction(r) - Fraction(1, r)
        if w > budget:
            break
        for rest in _index_tuples(budget - w, max_r, r):
            yield (r,) + rest


def basket_inequality_cases(min_orbit: int, bound=24, strict: bool = True,
                            entries: Optional[str] = None) -> list[Basket]:
    """All orbit profiles with sum n_i sum_j (r_ij - 1/r_ij) below the bound.

    ``entries`` filters profiles: ``"single"`` keeps those where every point
    carries one basket entry, ``"multi"`` those with some point carrying two
    or more.
    """
    if min_orbit < 1:
        raise ValueError("min_orbit must be positive")
    bound = Fraction(bound)

    def ok(w):
        return w < bound if strict else w <= bound

    max_r = int(bound) + 2
    # orbit types (n, rs)
    types = []
    for n in range(min_orbit, int(bound) + 1):
        for rs in _index_tuples(bound / n, max_r):
            if not rs:
                continue
            w = n * sum((Fraction(r) - Fraction(1, r) for r in rs), Fraction(0))
            if ok(w):
                types.append(((n, rs), w))
    types.sort()
    results = []

    def extend(start, chosen, total):
        if chosen:
            results.append(Basket(tuple(chosen)))
        for i in range(start, len(types)):
            t, w = types[i]
            if ok(total + w):
                extend(i, chosen + [t], total + w)

    extend(0, [], Fraction(0))
    if entries == "single":
        results = [b for b in results if b.single_index()]
    elif entries == "multi":
        results = [b for b in results if not b.single_index()]
    elif entries is not None:
        raise ValueError("entries must be None, 'single' or 'multi'")
    return sorted(results, key=lambda b: (b.m, b.orbits))


def kc2_halfpoints(n: int) -> Fraction:
    """-K . c_2 = 24 - 3n/2 for n cyclic quotient points of index 2."""
    return Fraction(24) - Fraction(3 * n, 2)


#: contribution c_P(-K) of one 1/2(1,1,1) point to Riemann-Roch for -K
HALF_POINT_CORRECTION = Fraction(-1, 8)


def anticanonical_dim_halfpoints(K3, n: int) -> Fraction:
    """dim |-K| = (-K)^3/2 + 2 - n/4 with n half-points."""
    return Fraction(K3) / 2 + 2 - Fraction(n, 4)


def anticanonical_dim_riemann_roch(K3, n: int) -> Fraction:
    """The same quantity assembled term by term: (-K)^3/2 + (-K.c_2)/12 + n c_P."""
    return Fraction(K3) / 2 + kc2_halfpoints(n) / 12 + n * HALF_POINT_CORRECTION


def solve_integrality(n: int, l_max: int = 10) -> dict:
    """For dim |-K| = l, the forced value (-K)^3 = 2l - 4 + n/2, for 0 <= l <= l_max."""
    pairs = []
    for l in range(l_max + 1):
        k3 = 2 * l - 4 + Fraction(n, 2)
        if k3 > 0:
            pairs.append({"l": l, "anticanonical_cube": str(k3)})
    offset = Fraction(2) - Fraction(n, 4)
    return {"n": n, "dim_formula": f"(-K)^3/2 + ({offset})", "pairs": pairs}


def max_components(K3) -> int:
    """Largest m such that m equal components S_i with 2(-K)^2.S_i integral can sum to (-K)^3."""
    twice = Fraction(K3) * 2
    if twice.denominator != 1:
        return 0
    t = twice.numerator
    return max(m for m in range(1, t + 1) if t % m == 0)


# ---------------------------------------------------------------------------
# Riemann-Hurwitz


@dataclass(frozen=True)
class HurwitzSolution:
    group_order: int
    signature: tuple[int, ...]
    quotient_genus: int

    def check(self, two_g_minus_2: int) -> bool:
        rhs = self.group_order * (2 * self.quotient_genus - 2) + self.group_order * sum(
            (1 - Fraction(1, a) for a in self.signature), Fraction(0))
        return rhs == two_g_minus_2

    def as_dict(self) -> dict:
        return {"order": self.group_order, "signature": list(self.signature),
                "quotient_genus": self.quotient_genus}


def hurwitz_enumerate(two_g_minus_2: int, min_order: int, max_branch: int,
                      divisible_by: Optional[int] = None,
                      max_order: Optional[int] = None) -> list[HurwitzSolution]:
    """All (|G|, branch orders, g') with 2g-2 = |G|(2g'-2) + |G| sum(1 - 1/a_i)."""
    T = two_g_minus_2
    if T <= 0 or min_order < 1 or max_branch < 2:
        raise ValueError("need 2g-2 > 0, min_order >= 1 and max_branch >= 2")
    qmax = Fraction(T, min_order)
    out = []

    def sigs(budget: Fraction, start: int):
        yield ()
        for a in range(start, max_branch + 1):
            w = 1 - Fraction(1, a)
            if w > budget:
                break
            for rest in sigs(budget - w, a):
                yield (a,) + rest

    gp = 0
    while 2 * gp - 2 <= qmax:
        base = 2 * gp - 2
        for sig in sigs(qmax - base, 2):
            q = base + sum((1 - Fraction(1, a) for a in sig), Fraction(0))
            if q <= 0:
                continue
            N = Fraction(T) / q
            if N.denominator != 1:
                continue
            N = int(N)
            if N < min_order or (max_order is not None and N > max_order):
                continue
            if divisible_by and N % divisible_by:
                continue
            out.append(HurwitzSolution(N, sig, gp))
        gp += 1
    return sorted(out, key=lambda s: (s.group_order, s.quotient_genus, s.signature))


# ---------------------------------------------------------------------------
# divisor degrees


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def orbit_degree_constraint(group_order: int, two_g_minus_2: int, d_max: Optional[int] = None) -> dict:
    """For every orbit length m | |G|, the degrees d with m d = (2g-2) r, r >= 1.

    d must be a multiple of (2g-2)/gcd(2g-2, m); the gcd of these steps over
    all m divides every admissible degree.
    """
    T = two_g_minus_2
    if group_order < 1 or T < 1:
        raise ValueError("positive inputs required")
    steps = {m: T // gcd(T, m) for m in divisors(group_order)}
    forced = reduce(gcd, steps.values())
    small = []
    if d_max is not None:
        for m, step in steps.items():
            for d in range(step, d_max + 1, step):
                small.append({"m": m, "d": d, "r": m * d // T})
    return {"group_order": group_order, "two_g_minus_2": T, "forced_divisor": forced,
            "min_degree": min(steps.values()), "steps": steps, "solutions_up_to_d_max": small}


# ---------------------------------------------------------------------------
# final Diophantine eliminations


def case_a_expression(k: int, a: int) -> int:
    """-1 - k a^2 + a b + b^2 with b = 2 k a - 1."""
    b = 2 * k * a - 1
    return -1 - k * a * a + a * b + b * b


def case_a_printed_factor(k: int, a: int) -> int:
    return (a + 4 * k) * (k * a - 1)


def case_a_factor(k: int, a: int) -> int:
    return a * (4 * k + 1) * (k * a - 1)


def case_b_expression(k: int, g: int) -> int:
    """-1 - 11(g-1)k^2 + 11 k b + b^2 with b = 2(g-1)k - 1."""
    h = g - 1
    b = 2 * h * k - 1
    return -1 - 11 * h * k * k + 11 * k * b + b * b


def case_b_printed_factor(k: int, g: int) -> int:
    return (11 + 4 * (g - 1)) * ((g - 1) * k - 1)


def case_b_factor(k: int, g: int) -> int:
    return k * (11 + 4 * (g - 1)) * ((g - 1) * k - 1)


def verify_factorizations(points: int = 100, seed: int = 0, lo: int = -1000, hi: int = 1000) -> dict:
    """Evaluate each expansion against its factored forms at random integer points."""
    rng = random.Random(seed)
    pts = [(rng.randint(lo, hi), rng.randint(lo, hi)) for _ in range(points)]
    report = {}
    for name, expr, printed, factor in (
        ("case_A", case_a_expression, case_a_printed_factor, case_a_factor),
        ("case_B", case_b_expression, case_b_printed_factor, case_b_factor),
    ):
        bad_printed = [(x, y) for x, y in pts if expr(x, y) != printed(x, y)]
        bad_factor = [(x, y) for x, y in pts if expr(x, y) != factor(x, y)]
        report[name] = {
            "points": points,
            "factored_form_holds": not bad_factor,
            "printed_form_holds": not bad_printed,
            "printed_form_failures": len(bad_printed),
            "example": {"point": list(pts[0]), "expression": expr(*pts[0]),
                        "printed": printed(*pts[0]), "factored": factor(*pts[0])},
        }
    return report


def diophantine_case_A(k_max: int = 200, a_max: int = 200) -> list[tuple[int, int, int, int]]:
    """Positive (k, alpha, beta, g) with g - 1 = 11k, beta = 2 k alpha - 1 and the
    quadratic relation satisfied; found by scanning k, alpha."""
    sols = []
    for k in range(1, k_max + 1):
        for a in range(1, a_max + 1):
            if case_a_expression(k, a) == 0:
                b = 2 * k * a - 1
                if b > 0:
                    sols.append((k, a, b, 11 * k + 1))
    return sols


def diophantine_case_B(g_max: int, k_max: int = 200) -> list[tuple[int, int, int, int]]:
    """Positive (k, alpha=11k, beta, g) with 3 <= g <= g_max satisfying the relation."""
    if g_max < 3:
        raise ValueError("g_max must be at least 3")
    sols = []
    for g in range(3, g_max + 1):
        for k in range(1, k_max + 1):
            if case_b_expression(k, g) == 0:
                b = 2 * (g - 1) * k - 1
                sols.append((k, 11 * k, b, g))
    return sols


def brute_force_original_system(limit: int = 200) -> dict:
    """Scan 1 <= k, alpha, beta, g <= limit for the two-equation system itself.

    The relations are 11 = (2g-2) alpha - 11 beta and
    -22 = (2g-2) alpha^2 - 22 alpha beta - 22 beta^2.
    """
    hits = []
    for g in range(2, limit + 1):
        t = 2 * g - 2
        for a in range(1, limit + 1):
            num = t * a - 11
            if num <= 0 or num % 11:
                continue
            b = num // 11
            if not 1 <= b <= limit:
                continue
            if t * a * a - 22 * a * b - 22 * b * b == -22:
                hits.append((a, b, g))
    return {"limit": limit, "solutions": hits}


# ---------------------------------------------------------------------------
# joint filter on orbit sizes


@dataclass
class TransitiveCandidate:
    group: str
    degree: int
    stabilizer_order: int
    min_faithful_degree: int


def transitive_candidates(window: tuple[int, int] = (9, 15), max_faithful: int = 3) -> list[TransitiveCandidate]:
    """Transitive actions (from the constructible rows) with degree in the window
    whose point stabilizer has a faithful representation of degree <= max_faithful."""
    from .chartab import dixon_character_table, min_faithful_rep_degree
    from .permgrp import group_from_spec, psl2, sl3_3_on_13, sl2_8

    rows = [
        ("SL2(8)", lambda: sl2_8()),
        ("PSL2(11)", lambda: group_from_spec("coset:PSL2(11)/A5")),
        ("PSL2(11)", lambda: psl2(11)),
        ("SL3(3)", lambda: sl3_3_on_13()),
        ("PSL2(13)", lambda: psl2(13)),
        ("A7", lambda: group_from_spec("coset:A7/PSL2(7)")),
    ]
    out = []
    for name, build in rows:
        G = build()
        if not window[0] <= G.degree <= window[1]:
            continue
        H = G.point_stabilizer(0)
        deg = min_faithful_rep_degree(dixon_character_table(H))
        if deg <= max_faithful:
            out.append(TransitiveCandidate(name, G.degree, H.order, deg))
    return out
