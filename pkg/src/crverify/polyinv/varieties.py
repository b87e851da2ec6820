"""Explicit invariant hypersurfaces and their symmetry generators."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable

from ..exactnum import Cyclotomic
from ..permgrp import alternating, from_cycles, symmetric
from .poly import ExactMatrix, MultiPoly, elementary_symmetric


def klein_exponents(first: int = 1, p: int = 11, n: int = 5) -> tuple[int, ...]:
    """Weights a_i with 2 a_i + a_{i+1} = 0 mod p, read cyclically."""
    a = [first % p]
    for _ in range(n - 1):
        a.append((-2 * a[-1]) % p)
    if (2 * a[-1] + a[0]) % p:
        raise ValueError("weights do not close up cyclically")
    return tuple(a)


def klein_cubic(nvars: int = 5, offset: int = 0) -> MultiPoly:
    """sum_i x_i^2 x_{i+1} on the variables offset .. offset+4 (cyclically)."""
    terms = {}
    for i in range(5):
        e = [0] * nvars
        e[offset + i] += 2
        e[offset + (i + 1) % 5] += 1
        terms[tuple(e)] = 1
    return MultiPoly(nvars, terms)


def cyclic_shift_matrix(n: int = 5, offset: int = 0, size: int | None = None) -> ExactMatrix:
    """x_i -> x_{i+1} on a block of n variables starting at ``offset``."""
    size = size or n + offset
    perm = list(range(size))
    for i in range(n):
        perm[offset + i] = offset + (i + 1) % n
    return ExactMatrix.from_permutation(perm)


def klein_55_generators(extra_fixed: int = 0) -> tuple[ExactMatrix, ExactMatrix]:
    """The 5-cycle and diag(zeta_11^a_i); ``extra_fixed`` leading variables are fixed."""
    a = klein_exponents()
    sigma = cyclic_shift_matrix(5, extra_fixed)
    diag = [1] * extra_fixed + [Cyclotomic.zeta(11, k) for k in a]
    return sigma, ExactMatrix.diagonal(diag)


def palatini_quartic() -> MultiPoly:
    """x0^4 + x0 * (Klein cubic in x1..x5) + sum of x_i^2 x_{i+2} x_{i+4} (indices 1..5 cyclic)."""
    n = 6
    F = MultiPoly.monomial([4, 0, 0, 0, 0, 0])
    F = F + MultiPoly.variable(n, 0) * klein_cubic(n, offset=1)
    terms = {}
    for i in range(5):
        e = [0] * n
        e[1 + i] += 2
        e[1 + (i + 2) % 5] += 1
        e[1 + (i + 4) % 5] += 1
        terms[tuple(e)] = 1
    return F + MultiPoly(n, terms)


def permutation_matrices(group) -> list[ExactMatrix]:
    return [ExactMatrix.from_permutation(g) for g in group.generators]


@dataclass
class Variety:
    name: str
    nvars: int
    forms: list[MultiPoly]
    symmetry: Callable[[], list[ExactMatrix]]
    description: str

    def __post_init__(self):
        for f in self.forms:
            if f.nvars != self.nvars or not f.is_homogeneous():
                raise ValueError(f"{self.name}: forms must be homogeneous in {self.nvars} variables")


def _s6():
    return permutation_matrices(symmetric(6))


def _a7():
    return permutation_matrices(alternating(7))


VARIETIES: dict[str, Variety] = {
    "klein_cubic": Variety("klein_cubic", 5, [klein_cubic()],
                           lambda: list(klein_55_generators()),
                           "cubic threefold x1^2 x2 + ... + x5^2 x1 in P^4"),
    "segre_cubic": Variety("segre_cubic", 6, [elementary_symmetric(6, 1), elementary_symmetric(6, 3)],
                           _s6, "sigma_1 = sigma_3 = 0 in P^5"),
    "burkhardt": Variety("burkhardt", 6, [elementary_symmetric(6, 1), elementary_symmetric(6, 4)],
                         _s6, "sigma_1 = sigma_4 = 0 in P^5"),
    "x6prime": Variety("x6prime", 7, [elementary_symmetric(7, k) for k in (1, 2, 3)],
                       _a7, "sigma_1 = sigma_2 = sigma_3 = 0 in P^6"),
    "palatini": Variety("palatini", 6, [palatini_quartic()],
                        lambda: list(klein_55_generators(extra_fixed=1)),
                        "quartic in P^5 with the order-55 symmetry fixing x0"),
}


def get_variety(name: str) -> Variety:
    try:
        return VARIETIES[name]
    except KeyError:
        raise KeyError(f"unknown variety {name!r}; known: {sorted(VARIETIES)}") from None


def segre_node_orbit() -> list[tuple[int, ...]]:
    """The S6-orbit of (1:1:1:-1:-1:-1), normalised so the first coordinate is 1."""
    out = set()
    for plus in combinations(range(6), 3):
        v = tuple(1 if i in plus else -1 for i in range(6))
        if v[0] < 0:
            v = tuple(-x for x in v)
        out.add(v)
    return sorted(out)
