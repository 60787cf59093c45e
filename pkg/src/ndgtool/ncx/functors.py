"""Shift, induction/forgetful functors, suspensions and the canonical sequences.

Component conventions, all stacked in ascending index order:

* ``(Q_r M)^n``: components i = 1..N holding M^(r+n-N+i); d moves component
  i+1 to component i (the upper shift J), component 1 goes to zero.
* ``(Sigma X)^m``: components j = 1..N-1 holding X^(m+j).
* ``(Sigma^-1 X)^m``: components j = 1..N-1 holding X^(m-N+j).
"""
from __future__ import annotations

from typing import Dict, List, Tuple

from ..linalg import Matrix
from .core import GradedMap, GradedSpace, NComplex


def theta_shift(X: NComplex, n: int) -> NComplex:
    """(theta^n X)^m = X^(m+n), differential scaled by q^-n."""
    F = X.field
    c = F.root_power(-n)
    return NComplex(F, X.space.shifted(n), {i - n: m.scale(c) for i, m in X.d.items()})


def theta_map(f: GradedMap, n: int, source=None, target=None) -> GradedMap:
    source = source if source is not None else theta_shift(f.source, n)
    target = target if target is not None else theta_shift(f.target, n)
    return GradedMap(source, target, f.degree, {i - n: m for i, m in f.components.items()},
                     field=f.field)


def u_functor(r: int, X) -> GradedSpace:
    """(U_r X)^n = X^(n+r), forgetting the differential."""
    space = X.space if isinstance(X, NComplex) else X
    return space.shifted(r)


# ---------------------------------------------------------------- layouts

def q_layout(N: int, r: int, M, n: int) -> List[Tuple[int, int, int, int]]:
    """[(i, source degree, offset, size)] for the components of (Q_r M)^n."""
    out, off = [], 0
    for i in range(1, N + 1):
        j = r + n - N + i
        size = M.dim(j)
        out.append((i, j, off, size))
        off += size
    return out


def suspend_layout(N: int, X, m: int, inverse: bool = False):
    """[(j, source degree, offset, size)] for (Sigma X)^m, or Sigma^-1 when ``inverse``."""
    out, off = [], 0
    for j in range(1, N):
        k = m - N + j if inverse else m + j
        size = X.dim(k)
        out.append((j, k, off, size))
        off += size
    return out


def _q_degrees(N: int, r: int, M) -> List[int]:
    sup = M.support
    if not sup:
        return []
    return list(range(sup[0] - r, sup[-1] - r + N))


def _susp_degrees(N: int, X, inverse: bool) -> List[int]:
    sup = X.support
    if not sup:
        return []
    if inverse:
        return list(range(sup[0] + 1, sup[-1] + N))
    return list(range(sup[0] - N + 1, sup[-1]))


# ---------------------------------------------------------------- Q_r

def q_functor(r: int, M, field=None) -> NComplex:
    """Q_r on a graded space (an N-complex argument is read through its space)."""
    if isinstance(M, NComplex):
        field = M.field
        M = M.space
    F = field
    N = F.N
    degrees = _q_degrees(N, r, M)
    dims = {n: sum(b[3] for b in q_layout(N, r, M, n)) for n in degrees}
    d = {}
    for n in degrees:
        src = q_layout(N, r, M, n)
        tgt = q_layout(N, r, M, n + 1)
        if not dims.get(n) or not dims.get(n + 1):
            continue
        out = F.zeros((dims[n + 1], dims[n]))
        for i in range(1, N):
            _, _, t_off, size = tgt[i - 1]
            _, _, s_off, _ = src[i]
            for k in range(size):
                out[t_off + k, s_off + k] = F.one
        d[n] = Matrix(F, out)
    return NComplex(F, dims, d)


def q_functor_map(r: int, f: GradedMap, source: NComplex = None,
                  target: NComplex = None) -> GradedMap:
    """Q_r(f) for a degree-0 graded map f: block diagonal with f^(r+n-N+i)."""
    F = f.field
    N = F.N
    source = source if source is not None else q_functor(r, f.source, F)
    target = target if target is not None else q_functor(r, f.target, F)
    comps = {}
    for n in source.support:
        blocks = {}
        for i, j, _, _ in q_layout(N, r, f.source, n):
            blocks[(i - 1, i - 1)] = f.comp(j)
        comps[n] = Matrix.block(F, [b[3] for b in q_layout(N, r, f.target, n)],
                                [b[3] for b in q_layout(N, r, f.source, n)], blocks)
    return GradedMap(source, target, 0, comps)


# ---------------------------------------------------------------- suspensions

def _suspension(X: NComplex, inverse: bool) -> NComplex:
    F, N = X.field, X.N
    degrees = _susp_degrees(N, X, inverse)
    lay = {m: suspend_layout(N, X, m, inverse) for m in degrees + [degrees[-1] + 1]} \
        if degrees else {}
    dims = {m: sum(b[3] for b in lay[m]) for m in degrees}
    d = {}
    for m in degrees:
        if not dims.get(m) or not dims.get(m + 1):
            continue
        src, tgt = lay[m], lay[m + 1]
        blocks = {}
        for j in range(1, N - 1):
            # component j+1 at degree m is component j at degree m+1
            blocks[(j - 1, j)] = Matrix.identity(F, src[j][3])
        top = src[N - 2][1] + 1  # the degree reached by the last row
        for j in range(1, N):
            _, k, _, _ = src[j - 1]
            blocks[(N - 2, j - 1)] = -X.d_power(k, top - k)
        d[m] = Matrix.block(F, [b[3] for b in tgt], [b[3] for b in src], blocks)
    return NComplex(F, dims, d)


def suspend(X: NComplex) -> NComplex:
    """Sigma X: (Sigma X)^m = X^(m+1) + ... + X^(m+N-1)."""
    return _suspension(X, inverse=False)


def desuspend(X: NComplex) -> NComplex:
    """Sigma^-1 X: (Sigma^-1 X)^m = X^(m-N+1) + ... + X^(m-1)."""
    return _suspension(X, inverse=True)


def suspend_map(f: GradedMap, inverse: bool = False, source=None, target=None) -> GradedMap:
    """Sigma(f) (or Sigma^-1(f)) for a degree-0 chain map: blockwise f."""
    F, N = f.field, f.field.N
    op = desuspend if inverse else suspend
    source = source if source is not None else op(f.source)
    target = target if target is not None else op(f.target)
    comps = {}
    for m in source.support:
        sl = suspend_layout(N, f.source, m, inverse)
        tl = suspend_layout(N, f.target, m, inverse)
        blocks = {(j - 1, j - 1): f.comp(k) for j, k, _, _ in sl}
        comps[m] = Matrix.block(F, [b[3] for b in tl], [b[3] for b in sl], blocks)
    return GradedMap(source, target, 0, comps)


# ---------------------------------------------------------------- canonical maps

def canonical_maps(X: NComplex) -> Dict[str, object]:
    """The two split short exact sequences

        0 -> Sigma^-1 X --eps--> Q_0 U_0 X --pi--> X -> 0
        0 -> X --eta--> Q_(N-1) U_0 X --delta--> Sigma X -> 0

    Returns the four maps plus the middle and end complexes.
    """
    F, N = X.field, X.N
    P0 = q_functor(0, X.space, F)
    P1 = q_functor(N - 1, X.space, F)
    S = suspend(X)
    Sm = desuspend(X)

    pi, eta, eps, delta = {}, {}, {}, {}
    for m in P0.support:
        lay = q_layout(N, 0, X.space, m)
        # component i holds X^(m-N+i); pi applies d^(N-i)
        pi[m] = Matrix.hstack(F, [X.d_power(j, N - i) for i, j, _, _ in lay], rows=X.dim(m))
        sl = suspend_layout(N, X, m, inverse=True)
        blocks = {(j - 1, j - 1): Matrix.identity(F, size) for j, _, _, size in sl}
        for j, k, _, _ in sl:
            blocks[(N - 1, j - 1)] = -X.d_power(k, m - k)
        eps[m] = Matrix.block(F, [b[3] for b in lay], [b[3] for b in sl], blocks)
    for m in X.support:
        lay = q_layout(N, N - 1, X.space, m)
        # component i holds X^(m+i-1); eta stacks d^(i-1)
        eta[m] = Matrix.vstack(F, [X.d_power(m, i - 1) for i, _, _, _ in lay], cols=X.dim(m))
    for m in P1.support:
        lay = q_layout(N, N - 1, X.space, m)
        sl = suspend_layout(N, X, m)
        blocks = {}
        for j, k, _, size in sl:
            blocks[(j - 1, j - 1)] = -X.diff(lay[j - 1][1])
            blocks[(j - 1, j)] = Matrix.identity(F, size)
        delta[m] = Matrix.block(F, [b[3] for b in sl], [b[3] for b in lay], blocks)
    return {
        "Q0": P0, "QN1": P1, "susp": S, "desusp": Sm,
        "pi": GradedMap(P0, X, 0, pi),
        "eps": GradedMap(Sm, P0, 0, eps),
        "eta": GradedMap(X, P1, 0, eta),
        "delta": GradedMap(P1, S, 0, delta),
    }


# ---------------------------------------------------------------- adjunction data

def adjunction_maps(r: int, Y: GradedSpace, X: NComplex) -> Dict[str, GradedMap]:
    """Units and counits of Q_-r -| U_r and U_r -| Q_(N-1-r).

    * xi:   Y -> U_r Q_-r Y           (last component)
    * pi:   Q_-r U_r X -> X           (d^(N-1), ..., d, 1)
    * eta:  X -> Q_(N-1-r) U_r X      (1, d, ..., d^(N-1))^T
    * zeta: U_r Q_(N-1-r) Y -> Y      (first component)
    """
    F, N = X.field, X.N
    UX = u_functor(r, X)
    QY_left = q_functor(-r, Y, F)
    QUX_left = q_functor(-r, UX, F)
    QY_right = q_functor(N - 1 - r, Y, F)
    QUX_right = q_functor(N - 1 - r, UX, F)

    xi = {}
    UQY = u_functor(r, QY_left)
    for n in Y.support:
        lay = q_layout(N, -r, Y, n + r)
        xi[n] = Matrix.vstack(F, [Matrix.identity(F, size) if i == N else
                                  Matrix.zeros(F, size, Y.dim(n)) for i, _, _, size in lay])
    pi = {}
    for n in QUX_left.support:
        lay = q_layout(N, -r, UX, n)
        pi[n] = Matrix.hstack(F, [X.d_power(j + r, N - i) for i, j, _, _ in lay], rows=X.dim(n))
    eta = {}
    for n in X.support:
        lay = q_layout(N, N - 1 - r, UX, n)
        eta[n] = Matrix.vstack(F, [X.d_power(n, i - 1) for i, _, _, _ in lay], cols=X.dim(n))
    zeta = {}
    UQY_right = u_functor(r, QY_right)
    for n in UQY_right.support:
        lay = q_layout(N, N - 1 - r, Y, n + r)
        zeta[n] = Matrix.hstack(F, [Matrix.identity(F, size) if i == 1 else
                                    Matrix.zeros(F, Y.dim(n), size) for i, _, _, size in lay],
                                rows=Y.dim(n))
    return {
        "xi": GradedMap(Y, UQY, 0, xi, field=F),
        "pi": GradedMap(QUX_left, X, 0, pi),
        "eta": GradedMap(X, QUX_right, 0, eta),
        "zeta": GradedMap(UQY_right, Y, 0, zeta, field=F),
        "Q_left_Y": QY_left, "Q_left_UX": QUX_left,
        "Q_right_Y": QY_right, "Q_right_UX": QUX_right,
    }
