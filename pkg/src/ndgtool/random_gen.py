"""Seeded random instances.

All randomness flows through ``numpy.random.default_rng(seed)`` (PCG64), so a
(seed, parameters) pair reproduces an instance on any platform.

Complexes are built as direct sums of staircase blocks (full length N are
contractible, shorter ones carry homology) and then conjugated by random
degreewise-invertible matrices; they satisfy d^N = 0 by construction and their
homology is known from the block list.
"""
from __future__ import annotations

from typing import List, Optional, Tuple

import numpy as np

from .linalg import Matrix, inverse, kernel, rank
from .ncx.core import GradedMap, GradedSpace, NComplex, direct_sum, staircase
from .ncx.tensor import hom_complex, vector_to_map
from .scalars import CyclotomicField, Field


def random_scalar(F: Field, rng: np.random.Generator):
    if isinstance(F, CyclotomicField):
        return F([int(v) for v in rng.integers(-2, 3, size=F.deg)])
    return int(rng.integers(0, F.p))


def random_matrix(F: Field, rows: int, cols: int, rng: np.random.Generator) -> Matrix:
    if isinstance(F, CyclotomicField):
        out = F.zeros((rows, cols))
        for i in range(rows):
            for j in range(cols):
                out[i, j] = random_scalar(F, rng)
        return Matrix(F, out)
    return Matrix(F, rng.integers(0, F.p, size=(rows, cols)).astype(F.dtype))


def random_invertible(F: Field, n: int, rng: np.random.Generator) -> Matrix:
    while True:
        M = random_matrix(F, n, n, rng)
        if rank(M) == n:
            return M


def random_blocks(N: int, rng: np.random.Generator, max_blocks: int = 3,
                  span: Optional[int] = None, acyclic: bool = False,
                  lo: int = 0) -> List[Tuple[int, int]]:
    """Random (start, length) pairs with starts in [lo, lo + span)."""
    span = span if span is not None else N
    k = int(rng.integers(1, max_blocks + 1))
    out = []
    for _ in range(k):
        start = lo + int(rng.integers(0, span))
        length = N if acyclic else int(rng.integers(1, N + 1))
        out.append((start, length))
    return out


def scramble(X: NComplex, rng: np.random.Generator) -> Tuple[NComplex, GradedMap]:
    """Conjugate X by random invertible g; returns (gXg^-1, g: X -> new)."""
    F = X.field
    g = {m: random_invertible(F, n, rng) for m, n in X.dims.items()}
    ginv = {m: inverse(M) for m, M in g.items()}
    d = {i: g[i + 1] @ m @ ginv[i] for i, m in X.d.items()}
    Y = NComplex(F, X.space, d)
    return Y, GradedMap(X, Y, 0, g)


def block_complex(F: Field, blocks: List[Tuple[int, int]]) -> NComplex:
    if not blocks:
        return NComplex(F, {}, {})
    return direct_sum(F, [staircase(F, s, l) for s, l in blocks])


def random_complex(F: Field, rng: np.random.Generator, max_blocks: int = 3,
                   span: Optional[int] = None, acyclic: bool = False, lo: int = 0,
                   scrambled: bool = True):
    """(X, blocks) with X a scrambled direct sum of staircases."""
    blocks = random_blocks(F.N, rng, max_blocks, span, acyclic, lo)
    X = block_complex(F, blocks)
    if scrambled:
        X, _ = scramble(X, rng)
    return X, blocks


def random_graded_space(rng: np.random.Generator, lo: int = -1, hi: int = 2,
                        max_dim: int = 2) -> GradedSpace:
    dims = {i: int(rng.integers(0, max_dim + 1)) for i in range(lo, hi + 1)}
    if not any(dims.values()):
        dims[lo] = 1
    return GradedSpace(dims)


def random_chain_map(X: NComplex, Y: NComplex, rng: np.random.Generator,
                     degree: int = 0) -> GradedMap:
    """Random element of the cycle space Z^degree_(1) of Hom(X, Y)."""
    F = X.field
    H = hom_complex(X, Y)
    K = kernel(H.diff(degree))
    if K.cols == 0:
        return vector_to_map(Matrix.zeros(F, H.dim(degree), 1), X, Y, degree)
    coeffs = random_matrix(F, K.cols, 1, rng)
    return vector_to_map(K @ coeffs, X, Y, degree)


def random_hom_element(X: NComplex, Y: NComplex, degree: int,
                       rng: np.random.Generator) -> GradedMap:
    F = X.field
    H = hom_complex(X, Y)
    return vector_to_map(random_matrix(F, H.dim(degree), 1, rng), X, Y, degree)
