"""Null-homotopies, homotopy-category hom dimensions and quasi-isomorphisms."""
from __future__ import annotations

from typing import Optional

from ..errors import NotChainMap
from ..linalg import Matrix, kernel, rank, solve_linear, span_dim
from .core import GradedMap, NComplex, cycles, boundaries, homology
from .functors import suspend, theta_shift
from .tensor import hom_blocks, hom_complex, map_to_vector, vector_to_map


def nullhomotopy_operator(X: NComplex, Y: NComplex) -> Matrix:
    """Matrix of S -> sum_l d^(N-l-1) S d^l from Hom^(1-N)(X, Y) to Hom^0(X, Y).

    Assembled directly from d-powers; this does not go through hom_complex.
    """
    F, N = X.field, X.N
    src = hom_blocks(X, Y, 1 - N)
    tgt = {l: (off, rows, cols) for l, off, rows, cols in hom_blocks(X, Y, 0)}
    n_out = sum(rows * cols for rows, cols in ((t[1], t[2]) for t in tgt.values()))
    n_in = sum(b[2] * b[3] for b in src)
    out = F.zeros((n_out, n_in))
    for l, s_off, s_rows, s_cols in src:
        for j in range(N):
            i = l - j
            if i not in tgt:
                continue
            t_off, t_rows, t_cols = tgt[i]
            # S_l : X^l -> Y^(l+1-N); precompose d_X^j at i, postcompose d_Y^(N-1-j)
            left = Y.d_power(l + 1 - N, N - 1 - j)
            right = X.d_power(i, j)
            blk = left.kron(right.T)
            sl = (slice(t_off, t_off + t_rows * t_cols), slice(s_off, s_off + s_rows * s_cols))
            out[sl] = F.reduce(out[sl] + blk.data)
    return Matrix(F, out)


def chain_condition_operator(X: NComplex, Y: NComplex) -> Matrix:
    """Matrix of f -> (d_Y f_i - f_(i+1) d_X)_i on degree-0 maps, blockwise."""
    F = X.field
    src = hom_blocks(X, Y, 0)
    src_idx = {l: (off, rows, cols) for l, off, rows, cols in src}
    rows_out = []
    n_in = sum(b[2] * b[3] for b in src)
    for i in X.support:
        r, c = Y.dim(i + 1), X.dim(i)
        if not r or not c:
            continue
        row = F.zeros((r * c, n_in))
        if i in src_idx:
            off, rr, cc = src_idx[i]
            row[:, off:off + rr * cc] = Y.diff(i).kron(Matrix.identity(F, cc)).data
        if i + 1 in src_idx:
            off, rr, cc = src_idx[i + 1]
            blk = Matrix.identity(F, rr).kron(X.diff(i).T)
            row[:, off:off + rr * cc] = F.reduce(row[:, off:off + rr * cc] - blk.data)
        rows_out.append(Matrix(F, row))
    if not rows_out:
        return Matrix.zeros(F, 0, n_in)
    return Matrix.vstack(F, rows_out)


def require_chain_map(f: GradedMap, what: str = "map") -> None:
    if f.degree != 0 or not f.is_chain_map():
        raise NotChainMap(f"{what} is not a degree-0 chain map")


def null_homotopy(f: GradedMap, X: Optional[NComplex] = None,
                  Y: Optional[NComplex] = None) -> Optional[GradedMap]:
    """Some S of degree 1-N with sum_l d^(N-l-1) S d^l = f, or None."""
    X = X if X is not None else f.source
    Y = Y if Y is not None else f.target
    require_chain_map(f)
    op = nullhomotopy_operator(X, Y)
    target = map_to_vector(f, X, Y)
    if op.cols == 0:
        return vector_to_map(Matrix.zeros(X.field, 0, 1), X, Y, 1 - X.N) \
            if target.is_zero() else None
    sol = solve_linear(op, target)
    if sol is None:
        return None
    return vector_to_map(sol, X, Y, 1 - X.N)


def apply_homotopy(S: GradedMap) -> GradedMap:
    """sum_l d^(N-l-1) S d^l as a degree-0 map."""
    X, Y, N = S.source, S.target, S.source.N
    comps = {}
    for i in X.support:
        acc = Matrix.zeros(X.field, Y.dim(i), X.dim(i))
        for l in range(N):
            acc = acc + Y.d_power(i + l + 1 - N, N - 1 - l) @ S.comp(i + l) @ X.d_power(i, l)
        comps[i] = acc
    return GradedMap(X, Y, 0, comps)


def is_null_homotopic(f: GradedMap) -> bool:
    return null_homotopy(f) is not None


def khom_dim(X: NComplex, Y: NComplex, n: int, flavor: str = "susp0") -> int:
    """dim Hom_K(theta^-n X, Y) (susp0) or Hom_K(theta^-n X, Sigma Y) (susp1),
    read off the amplitude homology of the hom complex.

    susp0 is H^n_(1). susp1 is H^(n+1)_(N-1): with (Sigma X)^m built from
    X^(m+1..m+N-1), the suspension raises the hom degree by one.
    """
    if flavor not in ("susp0", "susp1"):
        raise ValueError(f"unknown flavor {flavor!r}")
    H = hom_complex(X, Y)
    if flavor == "susp0":
        return homology(H, n, 1).h_dim
    return homology(H, n + 1, X.N - 1).h_dim


def khom_dim_direct(X: NComplex, Y: NComplex, n: int, flavor: str = "susp0") -> int:
    """Same quantity as chain maps modulo null-homotopic ones, solved directly."""
    if flavor not in ("susp0", "susp1"):
        raise ValueError(f"unknown flavor {flavor!r}")
    src = theta_shift(X, -n)
    tgt = Y if flavor == "susp0" else suspend(Y)
    chains = kernel(chain_condition_operator(src, tgt)).cols
    nulls = rank(nullhomotopy_operator(src, tgt))
    return chains - nulls


# ---------------------------------------------------------------- homology maps

def induced_rank(f: GradedMap, i: int, r: int) -> int:
    """Rank of H^i_(r)(f) for a degree-0 chain map f."""
    X, Y = f.source, f.target
    Zx = cycles(X, i, r)
    By = boundaries(Y, i, X.N - r)
    img = f.comp(i) @ Zx
    return span_dim(img, By) - span_dim(By)


def is_quasi_iso(f: GradedMap, all_r: bool = False) -> bool:
    """H^i_(r)(f) bijective for r in {1, N-1} (every r when ``all_r``)."""
    require_chain_map(f)
    X, Y, N = f.source, f.target, f.source.N
    rs = sorted({1, N - 1}) if not all_r else list(range(1, N))
    degrees = sorted(set(X.support) | set(Y.support))
    for r in rs:
        for i in degrees:
            hx = homology(X, i, r).h_dim
            hy = homology(Y, i, r).h_dim
            if hx != hy or induced_rank(f, i, r) != hx:
                return False
    return True
