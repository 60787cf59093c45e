"""Splitting an acyclic N-complex into contractible staircase blocks."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Dict, List, Tuple

from ..errors import NotAcyclic
from ..linalg import Matrix, inverse, kernel, solve_linear
from .core import GradedMap, NComplex, direct_sum, is_acyclic, staircase


@dataclass
class Contraction:
    basis_change: GradedMap          # g : X -> Y, degree 0, invertible
    normal_form: NComplex            # Y, a direct sum of length-N staircases
    blocks: List[Tuple[int, int]]    # (start degree, length), sorted

    def multiset(self) -> Counter:
        return Counter(self.blocks)


def contract_acyclic(X: NComplex) -> Contraction:
    """Find g with g d_X = d_Y g, d_Y a sum of length-N identity staircases.

    Peel blocks off from the lowest degree upwards. At the lowest degree n0 of
    the remaining subcomplex W every power of d is injective (W is acyclic and
    nothing sits below n0), so a basis x_a of W^n0 spans blocks d^j x_a. A
    functional c on W^(n0+N-1) with c(d^(N-1) x_a) = delta_a gives a chain
    retraction onto those blocks; its kernel is the next W.
    """
    F, N = X.field, X.N
    if not is_acyclic(X):
        raise NotAcyclic("complex has nonzero amplitude homology")
    # current subcomplex, as column bases inside X
    W: Dict[int, Matrix] = {m: Matrix.identity(F, n) for m, n in X.dims.items()}
    found: List[Tuple[int, Matrix]] = []   # (n0, columns x_a in X^n0)
    while any(B.cols for B in W.values()):
        n0 = min(m for m, B in W.items() if B.cols)
        gens = W[n0]
        top = X.d_power(n0, N - 1) @ gens
        # coordinates of the top vectors inside W^(n0+N-1)
        Wtop = W.get(n0 + N - 1)
        if Wtop is None or Wtop.cols == 0:
            raise NotAcyclic(f"d^(N-1) vanishes on the lowest degree {n0}")
        top_w = solve_linear(Wtop, top)
        # c: functional rows with c @ top_w = I
        c_t = solve_linear(top_w.T, Matrix.identity(F, gens.cols))
        if c_t is None:
            raise NotAcyclic(f"d^(N-1) is not injective at degree {n0}")
        c = c_t.T
        found.append((n0, gens))
        new_W = {}
        for m, B in W.items():
            j = m - n0
            if B.cols == 0:
                new_W[m] = B
                continue
            if not 0 <= j < N:
                new_W[m] = B
                continue
            # rho(y) = c(d^(N-1-j) y) in W-coordinates of degree n0+N-1
            dy = X.d_power(m, N - 1 - j) @ B
            coeff = c @ solve_linear(Wtop, dy)
            new_W[m] = B @ kernel(coeff)
        W = new_W

    # assemble the new basis: block (n0, a) contributes d^j x_a at degree n0+j
    blocks = []
    cols: Dict[int, List[Matrix]] = {m: [] for m in X.dims}
    for n0, gens in sorted(found, key=lambda t: t[0]):
        for a in range(gens.cols):
            x = gens.col(a)
            blocks.append((n0, N))
            for j in range(N):
                cols[n0 + j].append(X.d_power(n0, j) @ x)
    g_inv = {m: Matrix.hstack(F, v, rows=X.dim(m)) for m, v in cols.items()}
    g = {m: inverse(M) for m, M in g_inv.items()}
    Y = direct_sum(F, [staircase(F, s, N) for s, _ in blocks])
    # direct_sum stacks blocks per degree in list order, matching cols above
    gmap = GradedMap(X, Y, 0, g)
    if not gmap.is_chain_map():
        raise AssertionError("basis change does not conjugate d_X to the staircase form")
    return Contraction(gmap, Y, sorted(blocks))
