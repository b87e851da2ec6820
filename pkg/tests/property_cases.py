"""Seeded randomized cross-checks shared by the property and acceptance tests.

Every function runs ``cases`` independent random instances and returns a list
of failure descriptions (empty when everything agrees).
"""

from __future__ import annotations

import random
from fractions import Fraction
from math import gcd, lcm

from crverify import chartab, permgrp
from crverify.exactnum import ONE, ZERO, Cyclotomic
from crverify.polyinv import (
    ExactMatrix,
    MultiPoly,
    act,
    group_closure,
    invariant_space_dim_direct,
    monomials,
)
from crverify.polyinv.matgroup import reynolds

CONDUCTORS = (1, 3, 4, 5, 7, 8, 9, 12, 15)


def random_cyclotomic(rng: random.Random, n: int | None = None) -> Cyclotomic:
    n = n or rng.choice(CONDUCTORS)
    powers = {}
    for _ in range(rng.randint(1, 4)):
        j = rng.randrange(n)
        powers[j] = powers.get(j, 0) + Fraction(rng.randint(-5, 5), rng.randint(1, 3))
    return Cyclotomic.from_powers(n, powers)


def ring_axiom_failures(cases: int = 1000, seed: int = 0) -> list[str]:
    rng = random.Random(seed)
    bad = []
    for i in range(cases):
        a, b, c = (random_cyclotomic(rng) for _ in range(3))
        checks = {
            "add-assoc": (a + b) + c == a + (b + c),
            "add-comm": a + b == b + a,
            "mul-assoc": (a * b) * c == a * (b * c),
            "mul-comm": a * b == b * a,
            "distrib": a * (b + c) == a * b + a * c,
            "neg": a - a == ZERO,
            "one": a * ONE == a,
            "text": Cyclotomic.from_text(a.to_text()) == a,
        }
        if a:
            checks["inverse"] = a * a.inverse() == ONE
        n = lcm(a.conductor, b.conductor)
        k = rng.choice([k for k in range(1, 4 * n + 1) if gcd(k, n) == 1])
        checks["galois-hom"] = (a * b).galois(k) == a.galois(k) * b.galois(k)
        z = complex(a * b) - complex(a) * complex(b)
        checks["complex-embedding"] = abs(z) < 1e-6 * (1 + abs(complex(a)) * abs(complex(b)))
        bad += [f"case {i}: {name} ({a}, {b}, {c})" for name, ok in checks.items() if not ok]
    return bad


def random_form(rng: random.Random, nvars: int, d: int, terms: int = 4) -> MultiPoly:
    mons = monomials(nvars, d)
    return MultiPoly(nvars, {rng.choice(mons): rng.randint(-3, 3) for _ in range(terms)})


def random_int_matrix(rng: random.Random, n: int) -> ExactMatrix:
    return ExactMatrix([[rng.randint(-2, 2) for _ in range(n)] for _ in range(n)])


def action_composition_failures(cases: int = 1000, seed: int = 1) -> list[str]:
    """act(g h, F) = act(h, act(g, F)) and the permutation analogue."""
    rng = random.Random(seed)
    bad = []
    for i in range(cases):
        n = rng.choice((2, 3))
        g, h = random_int_matrix(rng, n), random_int_matrix(rng, n)
        F = random_form(rng, n, rng.choice((1, 2, 3)))
        if act(g @ h, F) != act(h, act(g, F)):
            bad.append(f"case {i}: matrix action")
        p = tuple(rng.sample(range(6), 6))
        q = tuple(rng.sample(range(6), 6))
        pt = rng.randrange(6)
        if permgrp.perm_mul(p, q)[pt] != q[p[pt]]:
            bad.append(f"case {i}: permutation action")
    return bad


def random_signed_permutation(rng: random.Random, n: int) -> tuple[int, ...]:
    """A signed permutation of e_0..e_{n-1}, on points i (= e_i) and i+n (= -e_i)."""
    perm = rng.sample(range(n), n)
    signs = [rng.choice((0, n)) for _ in range(n)]
    img = [0] * (2 * n)
    for i in range(n):
        img[i] = perm[i] + signs[i]
        img[i + n] = perm[i] + n - signs[i]
    return tuple(img)


def signed_matrix(p: tuple[int, ...], n: int) -> ExactMatrix:
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        j = p[i]
        rows[j % n][i] = 1 if j < n else -1
    return ExactMatrix(rows)


def reynolds_invariance_failures(cases: int = 1000, seed: int = 2) -> list[str]:
    rng = random.Random(seed)
    bad = []
    for i in range(cases):
        n = rng.choice((2, 3))
        gens = [signed_matrix(random_signed_permutation(rng, n), n) for _ in range(2)]
        G = group_closure(gens)
        F = random_form(rng, n, rng.choice((1, 2)), terms=3)
        R = reynolds(F, G)
        if any(act(g, R) != R for g in gens):
            bad.append(f"case {i}: average not invariant")
        if reynolds(R, G) != R:
            bad.append(f"case {i}: averaging is not idempotent")
    return bad


def orthogonality_failures(tables, cases: int = 1000, seed: int = 3) -> list[str]:
    """Random row and column orthogonality instances drawn from the given tables."""
    rng = random.Random(seed)
    bad = []
    for i in range(cases):
        T = rng.choice(tables)
        a, b = rng.randrange(len(T)), rng.randrange(len(T))
        ip = chartab.inner_product(T[a], T[b])
        if ip != (1 if a == b else 0):
            bad.append(f"case {i}: <chi_{a}, chi_{b}> = {ip}")
        cl = T.classes
        k, l = rng.randrange(len(cl.reps)), rng.randrange(len(cl.reps))
        s = sum((chi[k] * chi[l].conjugate() for chi in T.irreducibles), ZERO)
        want = T.order // cl.sizes[k] if k == l else 0
        if s != want:
            bad.append(f"case {i}: column sum ({k}, {l}) = {s}")
    return bad


def molien_direct_failures(cases: int = 1000, seed: int = 4) -> list[str]:
    """Invariant dimensions of random signed-permutation groups by both routes."""
    rng = random.Random(seed)
    bad = []
    for i in range(cases):
        n = rng.choice((2, 3))
        perms = [random_signed_permutation(rng, n) for _ in range(rng.choice((1, 2)))]
        P = permgrp.PermGroup(perms, 2 * n)
        cc = P.conjugacy_classes()
        chi = chartab.ClassFunction(
            cc, [sum(1 for j in range(n) if g[j] == j) - sum(1 for j in range(n) if g[j] == j + n)
                 for g in cc.reps])
        M = group_closure([signed_matrix(p, n) for p in perms])
        d = rng.choice((1, 2, 3, 4))
        a, b = chartab.molien_invariant_dim(chi, d), invariant_space_dim_direct(M, d)
        if a != b or M.order != P.order:
            bad.append(f"case {i}: n={n} d={d} molien={a} direct={b}")
    return bad
