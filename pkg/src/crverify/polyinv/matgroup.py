"""Finite matrix groups enumerated by closure, and invariant dimensions.

Integral groups (all generator entries in Z) are enumerated with numpy int64
arrays keyed by their raw bytes; anything else falls back to ExactMatrix
objects hashed by their exact entries.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

import numpy as np

from ..exactnum import ONE, Cyclotomic, cyc_sum
from .poly import ExactMatrix, MultiPoly, act, exact_rank, integer_rank, monomials

DEFAULT_BUDGET = 60_000


class ClosureBudgetError(RuntimeError):
    pass


class EnumerationMissingError(RuntimeError):
    pass


@dataclass
class MatrixGroup:
    generators: list[ExactMatrix]
    dim: int
    int_elements: Optional[np.ndarray] = None  # (N, dim, dim) for integral groups
    exact_elements: Optional[list[ExactMatrix]] = None
    _keys: Optional[dict] = field(default=None, repr=False)

    @property
    def order(self) -> int:
        if self.int_elements is not None:
            return len(self.int_elements)
        if self.exact_elements is not None:
            return len(self.exact_elements)
        raise EnumerationMissingError("group has not been enumerated")

    @property
    def is_integral(self) -> bool:
        return self.int_elements is not None

    def elements(self) -> list[ExactMatrix]:
        if self.exact_elements is None:
            if self.int_elements is None:
                raise EnumerationMissingError("group has not been enumerated")
            self.exact_elements = [ExactMatrix(m.tolist()) for m in self.int_elements]
        return self.exact_elements

    def key_index(self) -> dict:
        if self._keys is None:
            if self.int_elements is not None:
                self._keys = {m.tobytes(): i for i, m in enumerate(self.int_elements)}
            else:
                self._keys = {m: i for i, m in enumerate(self.elements())}
        return self._keys

    def contains(self, g) -> bool:
        if self.int_elements is not None:
            arr = np.asarray(g.to_int_rows() if isinstance(g, ExactMatrix) else g, dtype=np.int64)
            return arr.tobytes() in self.key_index()
        return g in self.key_index()

    def traces(self) -> list:
        if self.int_elements is not None:
            return np.trace(self.int_elements, axis1=1, axis2=2).tolist()
        return [m.trace() for m in self.elements()]


def _int_gens(gens: Sequence[ExactMatrix]) -> Optional[np.ndarray]:
    if gens and all(g.is_integral() for g in gens):
        return np.array([g.to_int_rows() for g in gens], dtype=np.int64)
    return None


def group_closure(gens: Sequence[ExactMatrix], budget: int = DEFAULT_BUDGET,
                  dim: Optional[int] = None, time_budget: Optional[float] = None) -> MatrixGroup:
    """Enumerate the group generated by ``gens`` (breadth first)."""
    gens = list(gens)
    if not gens and dim is None:
        raise ValueError("dimension required for an empty generating set")
    n = gens[0].dim if gens else dim
    if any(g.dim != n for g in gens):
        raise ValueError("generators of different sizes")
    start = time.monotonic()
    ig = _int_gens(gens)
    if ig is not None or not gens:
        ig = ig if ig is not None else np.zeros((0, n, n), dtype=np.int64)
        ident = np.eye(n, dtype=np.int64)
        seen = {ident.tobytes()}
        found = [ident[None]]
        frontier = ident[None]
        while len(frontier):
            new = []
            for g in ig:
                prods = frontier @ g
                for m in prods:
                    k = m.tobytes()
                    if k not in seen:
                        seen.add(k)
                        new.append(m)
            if len(seen) > budget:
                raise ClosureBudgetError(f"closure exceeded {budget} elements")
            if time_budget is not None and time.monotonic() - start > time_budget:
                raise ClosureBudgetError(f"closure exceeded {time_budget} s")
            frontier = np.array(new, dtype=np.int64).reshape(-1, n, n)
            if len(frontier):
                found.append(frontier)
        elems = np.concatenate(found)
        return MatrixGroup(gens, n, int_elements=elems)
    ident = ExactMatrix.identity(n)
    seen_set = {ident}
    out = [ident]
    frontier = [ident]
    while frontier:
        new = []
        for x in frontier:
            for g in gens:
                y = x @ g
                if y not in seen_set:
                    seen_set.add(y)
                    new.append(y)
                    out.append(y)
        if len(out) > budget:
            raise ClosureBudgetError(f"closure exceeded {budget} elements")
        frontier = new
    return MatrixGroup(gens, n, exact_elements=out)


def commutator(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    return a.inverse() @ b.inverse() @ a @ b


def derived_subgroup(G: MatrixGroup, budget: int = DEFAULT_BUDGET) -> MatrixGroup:
    """Normal closure of the commutators of the generators."""
    gens = G.generators
    inv = [g.inverse() for g in gens]
    comms = []
    for i, a in enumerate(gens):
        for b in gens[i + 1:]:
            c = commutator(a, b)
            if c != ExactMatrix.identity(G.dim) and c not in comms:
                comms.append(c)
    H = group_closure(comms, budget, dim=G.dim)
    changed = True
    while changed:
        changed = False
        for h in list(H.generators):
            for g, gi in zip(gens, inv):
                c = gi @ h @ g
                if not H.contains(c):
                    H = group_closure(H.generators + [c], budget, dim=G.dim)
                    changed = True
    return H


# ---------------------------------------------------------------------------
# Weyl group of E6 in root coordinates

E6_CARTAN = (
    (2, 0, -1, 0, 0, 0),
    (0, 2, 0, -1, 0, 0),
    (-1, 0, 2, -1, 0, 0),
    (0, -1, -1, 2, -1, 0),
    (0, 0, 0, -1, 2, -1),
    (0, 0, 0, 0, -1, 2),
)


def simple_reflections(cartan: Sequence[Sequence[int]]) -> list[ExactMatrix]:
    """s_i v = v - (A v)_i e_i on root coordinates (columns are images of simple roots)."""
    n = len(cartan)
    gens = []
    for i in range(n):
        rows = [[int(r == c) for c in range(n)] for r in range(n)]
        for c in range(n):
            rows[i][c] -= cartan[i][c]
        gens.append(ExactMatrix(rows))
    return gens


def weyl_e6(budget: int = DEFAULT_BUDGET) -> MatrixGroup:
    return group_closure(simple_reflections(E6_CARTAN), budget)


def root_system(gens: Sequence[ExactMatrix]) -> list[tuple[int, ...]]:
    """Orbit of the simple roots (unit vectors) under the generators, sorted."""
    mats = [np.array(g.to_int_rows(), dtype=np.int64) for g in gens]
    n = len(mats[0])
    roots = {tuple(int(i == j) for j in range(n)) for i in range(n)}
    queue = list(roots)
    for r in queue:
        v = np.array(r)
        for m in mats:
            w = tuple((m @ v).tolist())
            if w not in roots:
                roots.add(w)
                queue.append(w)
    return sorted(roots)


def root_permutations(G: MatrixGroup, gens: Sequence[ExactMatrix]) -> tuple[list, list[tuple[int, ...]]]:
    """Permutations of the roots induced by ``gens`` (acting on column vectors)."""
    roots = root_system(G.generators)
    index = {r: i for i, r in enumerate(roots)}
    R = np.array(roots, dtype=np.int64).T
    perms = []
    for g in gens:
        img = np.array(g.to_int_rows(), dtype=np.int64) @ R
        perms.append(tuple(index[tuple(c)] for c in img.T.tolist()))
    return perms, roots


def matrix_from_root_permutation(perm: Sequence[int], roots: Sequence[Sequence[int]]) -> np.ndarray:
    """Recover the matrix: column j is the image of the j-th simple root."""
    n = len(roots[0])
    index = {tuple(r): i for i, r in enumerate(roots)}
    cols = [roots[perm[index[tuple(int(i == j) for i in range(n))]]] for j in range(n)]
    return np.array(cols, dtype=np.int64).T


# ---------------------------------------------------------------------------
# invariant dimensions


def _sym_matrices(elems: np.ndarray, e: int) -> tuple[np.ndarray, list]:
    """For every element g, the matrix of x^a -> (g x)^a on degree-e monomials.

    Returns an array (N, M, M) of floats holding exact integers, rows and
    columns indexed by ``monomials(n, e)``.
    """
    N, n, _ = elems.shape
    mons = monomials(n, e)
    if e == 0:
        return np.ones((N, 1, 1)), mons
    col_index = {m: i for i, m in enumerate(mons)}
    # rows: a monomial as a sorted index sequence
    seqs = [sum(([i] * k for i, k in enumerate(m)), []) for m in mons]
    g = elems.astype(np.float64)
    out = np.zeros((N, len(mons), len(mons)))
    # aggregation from index sequences j_1..j_e to monomials
    all_seqs = np.indices((n,) * e).reshape(e, -1).T
    agg = np.zeros((len(all_seqs), len(mons)))
    for k, s in enumerate(all_seqs):
        agg[k, col_index[tuple(np.bincount(s, minlength=n).tolist())]] = 1
    for r, seq in enumerate(seqs):
        t = g[:, seq[0], :]
        for i in seq[1:]:
            t = (t[:, :, None] * g[:, i, None, :]).reshape(N, -1)
        out[:, r, :] = t @ agg
    return out, mons


def reynolds_sum_integral(G: MatrixGroup, d: int, chunk: int = 4096) -> tuple[np.ndarray, list]:
    """Sum over G of the degree-d substitution matrices, as exact int64."""
    if G.int_elements is None:
        raise EnumerationMissingError("integral enumeration required")
    elems = G.int_elements
    N, n, _ = elems.shape
    mons = monomials(n, d)
    col_index = {m: i for i, m in enumerate(mons)}
    d1, d2 = d // 2, d - d // 2
    mons1, mons2 = monomials(n, d1), monomials(n, d2)
    m1, m2 = len(mons1), len(mons2)
    bound = N * (n * max(1, int(np.abs(elems).max()))) ** d
    if bound >= 2**53:
        raise OverflowError("float accumulation would not be exact for this group and degree")
    acc = np.zeros((m1 * m1, m2 * m2))
    for s in range(0, N, chunk):
        part = elems[s:s + chunk]
        X, _ = _sym_matrices(part, d1)
        Y, _ = _sym_matrices(part, d2)
        acc += X.reshape(len(part), -1).T @ Y.reshape(len(part), -1)
    acc = np.rint(acc).astype(np.int64).reshape(m1, m1, m2, m2)
    idx1 = {m: i for i, m in enumerate(mons1)}
    idx2 = {m: i for i, m in enumerate(mons2)}
    # split each monomial a into the leading d1 indices and the rest
    S = np.zeros((len(mons), len(mons)), dtype=np.int64)
    pair_cols = np.array([[col_index[tuple(a + b for a, b in zip(u, v))] for v in mons2] for u in mons1])
    for r, m in enumerate(mons):
        seq = sum(([i] * k for i, k in enumerate(m)), [])
        left = tuple(np.bincount(seq[:d1], minlength=n).tolist()) if d1 else (0,) * n
        right = tuple(np.bincount(seq[d1:], minlength=n).tolist())
        block = acc[idx1[left], :, idx2[right], :]
        np.add.at(S[r], pair_cols.ravel(), block.ravel())
    return S, mons


def invariant_space_dim_direct(G: MatrixGroup, d: int, verify: bool = True) -> int:
    """Rank of the averaging projector on degree-d forms."""
    if G.int_elements is not None:
        S, mons = reynolds_sum_integral(G, d)
        N = G.order
        r = integer_rank(S.tolist())
        if verify:
            if not np.array_equal(S @ S, N * S):
                raise ArithmeticError("group average is not idempotent")
            if int(np.trace(S)) != N * r:
                raise ArithmeticError("trace of the projector differs from its rank")
        return r
    rows = []
    for m in monomials(G.dim, d):
        R = reynolds(MultiPoly.monomial(m), G)
        rows.append([R.coefficient(b) for b in monomials(G.dim, d)])
    return exact_rank(rows)


def reynolds(F: MultiPoly, G: MatrixGroup) -> MultiPoly:
    """Average of act(g, F) over the enumerated group."""
    total = MultiPoly(F.nvars)
    elems = G.elements()
    for g in elems:
        total = total + act(g, F)
    return total / len(elems)


def invariance_nullity(F_deg: int, gens: Sequence[ExactMatrix]) -> int:
    """Dimension of degree-d forms fixed by every generator (kernel of stacked act - I)."""
    n = gens[0].dim
    mons = monomials(n, F_deg)
    rows = []
    for g in gens:
        images = [act(g, MultiPoly.monomial(m)) for m in mons]
        # column c is image of monomial c minus monomial c
        for r, b in enumerate(mons):
            rows.append([images[c].coefficient(b) - (1 if c == r else 0) for c in range(len(mons))])
    return len(mons) - exact_rank(rows)


def matrix_character_values(G: MatrixGroup) -> list:
    return G.traces()
