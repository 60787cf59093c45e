"""Ordinary chain complexes over F_p, written from scratch on lists of ints.

Used as an independent reference for the N = 2 case: nothing here touches the
package's Matrix type or its elimination routine.
"""
from __future__ import annotations

from typing import Dict, List

Mat = List[List[int]]


def rank_mod(rows: Mat, p: int) -> int:
    m = [[v % p for v in r] for r in rows]
    if not m or not m[0]:
        return 0
    n_rows, n_cols = len(m), len(m[0])
    rank = 0
    for c in range(n_cols):
        piv = next((r for r in range(rank, n_rows) if m[r][c]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = pow(m[rank][c], p - 2, p)
        m[rank] = [(v * inv) % p for v in m[rank]]
        for r in range(n_rows):
            if r != rank and m[r][c]:
                f = m[r][c]
                m[r] = [(a - f * b) % p for a, b in zip(m[r], m[rank])]
        rank += 1
        if rank == n_rows:
            break
    return rank


def matmul(a: Mat, b: Mat, p: int, inner: int) -> Mat:
    if not a or not b:
        cols = len(b[0]) if b else 0
        return [[0] * cols for _ in range(len(a))]
    return [[sum(a[i][k] * b[k][j] for k in range(inner)) % p for j in range(len(b[0]))]
            for i in range(len(a))]


class ChainComplex:
    """Cohomological: d[i] maps degree i to degree i + 1 (list of rows)."""

    def __init__(self, p: int, dims: Dict[int, int], d: Dict[int, Mat]):
        self.p = p
        self.dims = {i: n for i, n in dims.items() if n}
        self.d = d

    def dim(self, i):
        return self.dims.get(i, 0)

    def diff(self, i) -> Mat:
        m = self.d.get(i)
        if m is None:
            return [[0] * self.dim(i) for _ in range(self.dim(i + 1))]
        return m

    def squares_to_zero(self) -> bool:
        for i in self.dims:
            prod = matmul(self.diff(i + 1), self.diff(i), self.p, self.dim(i + 1))
            if any(any(v % self.p for v in r) for r in prod):
                return False
        return True

    def betti(self, i) -> int:
        return (self.dim(i) - rank_mod(self.diff(i), self.p)
                - rank_mod(self.diff(i - 1), self.p))

    def degrees(self):
        return sorted(self.dims)


def shift(X: ChainComplex) -> ChainComplex:
    """X[1]: degree i holds X^(i+1), differential -d."""
    p = X.p
    dims = {i - 1: n for i, n in X.dims.items()}
    d = {i - 1: [[(-v) % p for v in r] for r in m] for i, m in X.d.items()}
    return ChainComplex(p, dims, d)


def cone(X: ChainComplex, Y: ChainComplex, f: Dict[int, Mat]) -> ChainComplex:
    """Cone^i = X^(i+1) + Y^i with d = [[-d_X, 0], [f, d_Y]]."""
    p = X.p
    degs = sorted({i - 1 for i in X.dims} | set(Y.dims))
    dims = {i: X.dim(i + 1) + Y.dim(i) for i in degs}
    d = {}
    for i in degs:
        a, b = X.dim(i + 1), Y.dim(i)
        a2, b2 = X.dim(i + 2), Y.dim(i + 1)
        rows = [[0] * (a + b) for _ in range(a2 + b2)]
        dx = X.diff(i + 1)
        for r in range(a2):
            for c in range(a):
                rows[r][c] = (-dx[r][c]) % p
        fi = f.get(i + 1)
        for r in range(b2):
            for c in range(a):
                rows[a2 + r][c] = fi[r][c] % p if fi else 0
        dy = Y.diff(i)
        for r in range(b2):
            for c in range(b):
                rows[a2 + r][a + c] = dy[r][c] % p
        d[i] = rows
    return ChainComplex(p, dims, d)


def is_quasi_iso(X: ChainComplex, Y: ChainComplex, f: Dict[int, Mat]) -> bool:
    C = cone(X, Y, f)
    return all(C.betti(i) == 0 for i in C.degrees())
