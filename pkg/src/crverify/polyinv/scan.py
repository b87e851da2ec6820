"""Exhaustive singular-point search over projective space mod p.

Linear forms are eliminated first by parametrising their common zero set;
the remaining forms are evaluated with numpy on strata of normalised points
(first nonzero coordinate equal to 1).  A point is singular when the
Jacobian of all forms has rank below the number of forms.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from itertools import combinations
from typing import Sequence

import numpy as np

from ..modp import is_prime, nullspace_mod_p
from .poly import DegenerateInputError, MultiPoly

CHUNK = 1 << 18


class _Compiled:
    """Integer polynomial prepared for vectorised evaluation mod p."""

    def __init__(self, F: MultiPoly, p: int):
        if not F.has_integer_coefficients():
            raise ValueError("finite-field scans need integer coefficients")
        items = sorted(F.terms.items())
        self.exps = np.array([e for e, _ in items], dtype=np.int64).reshape(len(items), F.nvars)
        self.coefs = np.array([int(c) % p for _, c in items], dtype=np.int64)
        self.p = p
        self.maxdeg = int(self.exps.max()) if len(items) else 0

    def __call__(self, X: np.ndarray, powers: list[np.ndarray]) -> np.ndarray:
        p = self.p
        out = np.zeros(len(X), dtype=np.int64)
        for e, c in zip(self.exps, self.coefs):
            t = np.full(len(X), c, dtype=np.int64)
            for i, k in enumerate(e):
                if k:
                    t = (t * powers[k][:, i]) % p
            out = (out + t) % p
        return out


def _powers(X: np.ndarray, maxdeg: int, p: int) -> list[np.ndarray]:
    pw = [np.ones_like(X), X % p]
    for _ in range(2, maxdeg + 1):
        pw.append((pw[-1] * X) % p)
    return pw


def _det_mod_p(M: np.ndarray, p: int) -> np.ndarray:
    """Determinants of a stack of c x c matrices (c <= 3), modulo p."""
    c = M.shape[-1]
    if c == 1:
        return M[:, 0, 0] % p
    if c == 2:
        return (M[:, 0, 0] * M[:, 1, 1] - M[:, 0, 1] * M[:, 1, 0]) % p
    if c == 3:
        a = M
        t1 = a[:, 0, 0] * ((a[:, 1, 1] * a[:, 2, 2] - a[:, 1, 2] * a[:, 2, 1]) % p)
        t2 = a[:, 0, 1] * ((a[:, 1, 0] * a[:, 2, 2] - a[:, 1, 2] * a[:, 2, 0]) % p)
        t3 = a[:, 0, 2] * ((a[:, 1, 0] * a[:, 2, 1] - a[:, 1, 1] * a[:, 2, 0]) % p)
        return (t1 - t2 + t3) % p
    raise ValueError("vectorised minors are implemented up to size 3")


def _rank_deficient(J: np.ndarray, p: int) -> np.ndarray:
    """For a stack of c x n Jacobians, whether the rank is below c."""
    m, c, n = J.shape
    bad = np.ones(m, dtype=bool)
    for cols in combinations(range(n), c):
        bad &= _det_mod_p(J[:, :, cols], p) == 0
        if not bad.any():
            break
    return bad


def _normalise(X: np.ndarray, p: int) -> np.ndarray:
    out = X.copy()
    for r in range(len(out)):
        nz = np.nonzero(out[r])[0]
        lead = int(out[r, nz[0]])
        out[r] = (out[r] * pow(lead, -1, p)) % p
    return out


def _strata(k: int, p: int):
    """Chunks of normalised points of P^{k-1}(F_p) in lexicographic order."""
    for s in range(k):
        free = k - 1 - s
        head = np.zeros(s + 1, dtype=np.int64)
        head[s] = 1
        if free == 0:
            yield head[None, :]
            continue
        # split on leading free coordinates until chunks are small enough
        lead = 0
        while lead < free and p ** (free - lead) > CHUNK:
            lead += 1
        tail = np.indices((p,) * (free - lead), dtype=np.int64).reshape(free - lead, -1).T
        for prefix in np.ndindex(*((p,) * lead)):
            block = np.empty((len(tail), k), dtype=np.int64)
            block[:, :s + 1] = head
            block[:, s + 1:s + 1 + lead] = prefix
            block[:, s + 1 + lead:] = tail
            yield block


def singular_points_mod_p(forms: Sequence[MultiPoly], p: int, workers: int = 1) -> list[tuple[int, ...]]:
    """All points of the common zero set in P^{n-1}(F_p) where the Jacobian
    of the forms has rank below the number of forms."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if not forms or any(F.is_zero() for F in forms):
        raise DegenerateInputError("zero form in a singular-point scan")
    n = forms[0].nvars
    linear = [F for F in forms if F.degree() == 1]
    other = [F for F in forms if F.degree() != 1]
    lin_rows = [[int(F.coefficient(tuple(int(i == j) for i in range(n)))) % p for j in range(n)]
                for F in linear]
    basis = nullspace_mod_p(lin_rows, p) if lin_rows else [
        [int(i == j) for i in range(n)] for j in range(n)]
    if not basis:
        return []
    N = np.array(basis, dtype=np.int64)  # k x n, point x = y N
    k = len(basis)
    evals = [_Compiled(F, p) for F in other]
    grads = [[_Compiled(F.derivative(i), p) if not F.derivative(i).is_zero() else None
              for i in range(n)] for F in forms]
    maxdeg = max([e.maxdeg for e in evals] + [1])
    c = len(forms)

    def scan(Y: np.ndarray) -> np.ndarray:
        X = (Y @ N) % p
        pw = _powers(X, maxdeg, p)
        mask = np.ones(len(X), dtype=bool)
        for e in evals:
            mask &= e(X, pw) == 0
        X = X[mask]
        if not len(X):
            return X
        pw = _powers(X, maxdeg, p)
        J = np.zeros((len(X), c, n), dtype=np.int64)
        for a, row in enumerate(grads):
            for i, g in enumerate(row):
                if g is not None:
                    J[:, a, i] = g(X, pw)
        if c > n:
            return X
        return X[_rank_deficient(J, p)]

    chunks = list(_strata(k, p))
    if workers > 1:
        with ThreadPoolExecutor(workers) as ex:
            results = list(ex.map(scan, chunks))
    else:
        results = [scan(Y) for Y in chunks]
    found = [r for r in results if len(r)]
    if not found:
        return []
    pts = _normalise(np.concatenate(found), p)
    return sorted(tuple(int(v) for v in row) for row in pts)


def reduce_point(point: Sequence[int], p: int) -> tuple[int, ...]:
    """Reduce an integral projective point mod p and normalise it."""
    v = [int(x) % p for x in point]
    lead = next(x for x in v if x)
    inv = pow(lead, -1, p)
    return tuple((x * inv) % p for x in v)
