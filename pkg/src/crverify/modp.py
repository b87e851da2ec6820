"""Small dense linear algebra over prime fields, on Python integers."""

from __future__ import annotations

from math import isqrt

from .exactnum import prime_factors

def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in range(2, isqrt(n) + 1):
        if n % q == 0:
            return False
    return True


def primitive_root(p: int) -> int:
    fs = prime_factors(p - 1)
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in fs):
            return g
    return 1


def rref(rows: list[list[int]], p: int) -> tuple[list[list[int]], list[int]]:
    """Row-reduced echelon form modulo p; returns (nonzero rows, pivot columns)."""
    m = [r[:] for r in rows]
    pivots = []
    ri = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        piv = next((i for i in range(ri, len(m)) if m[i][c] % p), None)
        if piv is None:
            continue
        m[ri], m[piv] = m[piv], m[ri]
        inv = pow(m[ri][c], -1, p)
        m[ri] = [(x * inv) % p for x in m[ri]]
        for i in range(len(m)):
            if i != ri and m[i][c] % p:
                f = m[i][c]
                m[i] = [(a - f * b) % p for a, b in zip(m[i], m[ri])]
        pivots.append(c)
        ri += 1
        if ri == len(m):
            break
    return m[:ri], pivots


def nullspace_mod_p(mat: list[list[int]], p: int) -> list[list[int]]:
    """Basis of {v : mat v = 0} modulo p, as a list of vectors."""
    if not mat:
        return []
    n = len(mat[0])
    red, piv = rref(mat, p)
    free = [c for c in range(n) if c not in piv]
    basis = []
    for f in free:
        v = [0] * n
        v[f] = 1
        for row, c in zip(red, piv):
            v[c] = (-row[f]) % p
        basis.append(v)
    return basis


def charpoly_mod_p(a: list[list[int]], p: int) -> list[int]:
    """Characteristic polynomial (lowest degree first) via Hessenberg reduction."""
    n = len(a)
    h = [[x % p for x in row] for row in a]
    for k in range(n - 2):
        piv = next((i for i in range(k + 1, n) if h[i][k]), None)
        if piv is None:
            continue
        if piv != k + 1:
            h[piv], h[k + 1] = h[k + 1], h[piv]
            for row in h:
                row[piv], row[k + 1] = row[k + 1], row[piv]
        inv = pow(h[k + 1][k], -1, p)
        for i in range(k + 2, n):
            u = (h[i][k] * inv) % p
            if u:
                h[i] = [(x - u * y) % p for x, y in zip(h[i], h[k + 1])]
                for row in h:
                    row[k + 1] = (row[k + 1] + u * row[i]) % p
    polys: list[list[int]] = [[1]]
    for m in range(n):
        # (x - h[m][m]) * polys[m]
        prev = polys[m]
        new = [0] * (len(prev) + 1)
        for i, c in enumerate(prev):
            new[i + 1] = (new[i + 1] + c) % p
            new[i] = (new[i] - h[m][m] * c) % p
        prod_sub = 1
        for i in range(m - 1, -1, -1):
            prod_sub = (prod_sub * h[i + 1][i]) % p
            if not prod_sub:
                break
            coef = (h[i][m] * prod_sub) % p
            if coef:
                for j, c in enumerate(polys[i]):
                    new[j] = (new[j] - coef * c) % p
        polys.append(new)
    return polys[n]


def roots_mod_p(poly: list[int], p: int) -> list[int]:
    out = []
    for x in range(p):
        v = 0
        for c in reversed(poly):
            v = (v * x + c) % p
        if v == 0:
            out.append(x)
    return out
