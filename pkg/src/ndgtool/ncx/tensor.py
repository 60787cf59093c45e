"""q-twisted tensor and Hom complexes, braiding and associator.

Basis conventions (fixed so serialized matrices are reproducible):

* tensor degree i: blocks U1^a1 (x) ... (x) Uk^ak with a1 + ... + ak = i,
  ordered lexicographically by (a1, ..., ak); inside a block the index is the
  kron index (first factor major).
* Hom degree i: blocks Hom(U^l, V^(l+i)) ordered by l; inside a block the map
  is flattened row-major (target index major, source index minor).
"""
from __future__ import annotations

from functools import reduce
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..linalg import Matrix
from ..scalars import Field
from .core import GradedMap, NComplex


# ---------------------------------------------------------------- layouts

def tensor_blocks(dims_list: Sequence[dict], i: int) -> List[Tuple[tuple, int, int]]:
    """[(degree tuple, offset, size)] for total degree i, in basis order."""
    supports = [sorted(k for k, v in dims.items() if v) for dims in dims_list]
    out = []
    off = 0
    if not supports:
        return out
    for head in product(*supports[:-1]):
        last = i - sum(head)
        n_last = dims_list[-1].get(last, 0)
        if not n_last:
            continue
        size = n_last
        for dims, a in zip(dims_list, head):
            size *= dims[a]
        out.append((head + (last,), off, size))
        off += size
    return out


def tensor_degrees(dims_list: Sequence[dict]) -> List[int]:
    supports = [[k for k, v in dims.items() if v] for dims in dims_list]
    if any(not s for s in supports):
        return []
    lo = sum(min(s) for s in supports)
    hi = sum(max(s) for s in supports)
    return list(range(lo, hi + 1))


def _kron_all(F: Field, mats: Sequence[Matrix]) -> Matrix:
    return reduce(lambda a, b: a.kron(b), mats)


def tensor_many(factors: Sequence[NComplex], root=None) -> NComplex:
    """U1 (x) ... (x) Uk with d(u1...uk) = sum_j q^(a1+...+a_(j-1)) u1...d(uj)...uk."""
    F = factors[0].field
    q = F.q if root is None else root
    dims_list = [U.dims for U in factors]
    degrees = tensor_degrees(dims_list)
    layouts = {i: tensor_blocks(dims_list, i) for i in degrees}
    dims = {i: sum(b[2] for b in layouts[i]) for i in degrees}
    d = {}
    for i in degrees:
        if not dims.get(i + 1):
            continue
        tgt = {t: (off, size) for t, off, size in layouts[i + 1]}
        out = F.zeros((dims[i + 1], dims[i]))
        for tup, off, size in layouts[i]:
            for j, U in enumerate(factors):
                new = tup[:j] + (tup[j] + 1,) + tup[j + 1:]
                if new not in tgt:
                    continue
                mats = [Matrix.identity(F, Uk.dim(a)) for Uk, a in zip(factors, tup)]
                mats[j] = U.diff(tup[j])
                block = _kron_all(F, mats)
                coeff = F.pow(q, sum(tup[:j]))
                t_off, t_size = tgt[new]
                out[t_off:t_off + t_size, off:off + size] = F.scale(block.data, coeff)
        d[i] = Matrix(F, out)
    return NComplex(F, dims, d)


def tensor_complex(U: NComplex, V: NComplex, root=None) -> NComplex:
    """U (x)^q V; ``root`` overrides the twisting root (used for the braiding target)."""
    return tensor_many([U, V], root)


# ---------------------------------------------------------------- hom

def hom_blocks(U, V, i: int) -> List[Tuple[int, int, int, int]]:
    """[(l, offset, rows, cols)] for Hom^i(U, V): blocks Hom(U^l, V^(l+i))."""
    out = []
    off = 0
    for l in U.support:
        rows, cols = V.dim(l + i), U.dim(l)
        if rows and cols:
            out.append((l, off, rows, cols))
            off += rows * cols
    return out


def hom_degrees(U, V) -> List[int]:
    if not U.support or not V.support:
        return []
    return list(range(V.support[0] - U.support[-1], V.support[-1] - U.support[0] + 1))


def hom_complex(U: NComplex, V: NComplex) -> NComplex:
    """Hom^q(U, V) with d(f) = d_V f - q^r f d_U for f of degree r."""
    F = U.field
    degrees = hom_degrees(U, V)
    layouts = {i: hom_blocks(U, V, i) for i in degrees}
    dims = {i: sum(b[2] * b[3] for b in layouts[i]) for i in degrees}
    d = {}
    for i in degrees:
        if not dims.get(i) or not dims.get(i + 1):
            continue
        tgt = {l: (off, rows, cols) for l, off, rows, cols in layouts[i + 1]}
        src = {l: (off, rows, cols) for l, off, rows, cols in layouts[i]}
        out = F.zeros((dims[i + 1], dims[i]))
        minus_qi = F.neg(F.root_power(i))
        for l, (t_off, t_rows, t_cols) in tgt.items():
            # d_V composed after f_l
            if l in src:
                s_off, s_rows, s_cols = src[l]
                blk = V.diff(l + i).kron(Matrix.identity(F, s_cols))
                out[t_off:t_off + t_rows * t_cols, s_off:s_off + s_rows * s_cols] = blk.data
            # f_(l+1) composed after d_U
            if l + 1 in src:
                s_off, s_rows, s_cols = src[l + 1]
                blk = Matrix.identity(F, s_rows).kron(U.diff(l).T).scale(minus_qi)
                sl = (slice(t_off, t_off + t_rows * t_cols), slice(s_off, s_off + s_rows * s_cols))
                out[sl] = F.reduce(out[sl] + blk.data)
        d[i] = Matrix(F, out)
    return NComplex(F, dims, d)


def map_to_vector(f: GradedMap, U, V) -> Matrix:
    """Coordinates of a degree-r map in the basis of Hom^r(U, V)."""
    F = U.field
    blocks = hom_blocks(U, V, f.degree)
    parts = [f.comp(l).data.reshape(rows * cols, 1) for l, _, rows, cols in blocks]
    if not parts:
        return Matrix.zeros(F, 0, 1)
    return Matrix(F, np.vstack(parts))


def vector_to_map(vec: Matrix, U, V, degree: int) -> GradedMap:
    F = U.field
    comps = {}
    for l, off, rows, cols in hom_blocks(U, V, degree):
        comps[l] = Matrix(F, vec.data[off:off + rows * cols, 0].reshape(rows, cols).copy())
    return GradedMap(U, V, degree, comps, field=F)


# ---------------------------------------------------------------- canonical isos

def braiding_iso(U: NComplex, V: NComplex, root=None) -> GradedMap:
    """U (x)^q V -> V (x)^(q^-1) U, u (x) v -> q^(-rs) v (x) u.

    The exponent sign is the one that commutes with the two differentials.
    Passing ``root`` replaces q, so ``braiding_iso(V, U, root=q^-1)`` is the
    inverse of ``braiding_iso(U, V)``.
    """
    F = U.field
    q = F.q if root is None else root
    src = tensor_complex(U, V, root=q)
    tgt = tensor_complex(V, U, root=F.inv(q))
    comps = {}
    for i in src.support:
        out = F.zeros((tgt.dim(i), src.dim(i)))
        t_off = {t: off for t, off, _ in tensor_blocks([V.dims, U.dims], i)}
        for (r, s), off, _ in tensor_blocks([U.dims, V.dims], i):
            nu, nv = U.dim(r), V.dim(s)
            c = F.pow(q, -r * s)
            to = t_off[(s, r)]
            for a in range(nu):
                for b in range(nv):
                    out[to + b * nu + a, off + a * nv + b] = c
        comps[i] = Matrix(F, out)
    return GradedMap(src, tgt, 0, comps)


def _nested_index(dims_list, brackets, degs, idx):
    """Position of a basis tensor in a bracketed two-level tensor complex.

    ``brackets`` splits the factor list into consecutive groups, e.g. (2, 1)
    for (U V) W.
    """
    groups, k = [], 0
    for n in brackets:
        groups.append(list(range(k, k + n)))
        k += n
    inner_dims, inner_pos, inner_deg = [], [], []
    for g in groups:
        gd = [dims_list[j] for j in g]
        deg = sum(degs[j] for j in g)
        blk = {t: off for t, off, _ in tensor_blocks(gd, deg)}
        pos = 0
        for j in g:
            pos = pos * dims_list[j][degs[j]] + idx[j]
        inner_pos.append(blk[tuple(degs[j] for j in g)] + pos)
        inner_deg.append(deg)
        inner_dims.append(sum(s for _, _, s in tensor_blocks(gd, deg)))
    # outer layout over group degrees
    group_dims = []
    for g in groups:
        gd = [dims_list[j] for j in g]
        group_dims.append({t: sum(s for _, _, s in tensor_blocks(gd, t))
                           for t in tensor_degrees(gd)})
    total = sum(degs)
    outer = {t: off for t, off, _ in tensor_blocks(group_dims, total)}
    pos = 0
    for p, n in zip(inner_pos, inner_dims):
        pos = pos * n + p
    return outer[tuple(inner_deg)] + pos


def associator(U: NComplex, V: NComplex, W: NComplex) -> GradedMap:
    """(U (x) V) (x) W -> U (x) (V (x) W), the re-bracketing permutation."""
    F = U.field
    left = tensor_complex(tensor_complex(U, V), W)
    right = tensor_complex(U, tensor_complex(V, W))
    dims_list = [U.dims, V.dims, W.dims]
    comps = {}
    for i in left.support:
        out = F.zeros((right.dim(i), left.dim(i)))
        for degs, _, _ in tensor_blocks(dims_list, i):
            ranges = [range(D[a]) for D, a in zip(dims_list, degs)]
            for idx in product(*ranges):
                src = _nested_index(dims_list, (2, 1), degs, idx)
                dst = _nested_index(dims_list, (1, 2), degs, idx)
                out[dst, src] = F.one
        comps[i] = Matrix(F, out)
    return GradedMap(left, right, 0, comps)


def tensor_maps(f: GradedMap, g: GradedMap, root=None) -> GradedMap:
    """f (x) g for degree-0 maps: the blockwise kron product."""
    if f.degree or g.degree:
        raise ValueError("tensor_maps only handles degree-0 maps")
    F = f.field
    U, V = f.source, g.source
    U2, V2 = f.target, g.target
    src = tensor_complex(U, V, root)
    tgt = tensor_complex(U2, V2, root)
    comps = {}
    for i in src.support:
        out = F.zeros((tgt.dim(i), src.dim(i)))
        t_off = {t: off for t, off, _ in tensor_blocks([U2.dims, V2.dims], i)}
        for (a, b), off, size in tensor_blocks([U.dims, V.dims], i):
            if (a, b) not in t_off:
                continue
            blk = f.comp(a).kron(g.comp(b))
            to = t_off[(a, b)]
            out[to:to + blk.rows, off:off + size] = blk.data
        comps[i] = Matrix(F, out)
    return GradedMap(src, tgt, 0, comps)
