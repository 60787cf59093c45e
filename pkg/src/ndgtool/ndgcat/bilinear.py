"""Graded bilinear maps L (x) R -> O stored as per-degree structure-constant blocks.

``blocks[(s, t)]`` has shape O^(s+t) x (L^s * R^t); column ``a * dim R^t + b``
is the image of (basis a of L^s) (x) (basis b of R^t).
"""
from __future__ import annotations

from typing import Dict, Optional, Tuple

from ..errors import AssocViolation, LeibnizViolation
from ..linalg import Matrix
from ..ncx.core import GradedMap, NComplex
from ..ncx.tensor import tensor_blocks, tensor_complex

Blocks = Dict[Tuple[int, int], Matrix]


def block(blocks: Blocks, L, R, O, s: int, t: int) -> Matrix:
    m = blocks.get((s, t))
    if m is None:
        F = (L.field if hasattr(L, "field") else O.field)
        return Matrix.zeros(F, O.dim(s + t), L.dim(s) * R.dim(t))
    return m


def clean_blocks(blocks: Blocks, L, R, O) -> Blocks:
    """Drop empty blocks and check shapes."""
    out = {}
    for (s, t), m in blocks.items():
        shape = (O.dim(s + t), L.dim(s) * R.dim(t))
        if m.shape != shape:
            raise ValueError(f"block {(s, t)} has shape {m.shape}, expected {shape}")
        if 0 not in shape:
            out[(int(s), int(t))] = m
    return out


def as_graded_map(blocks: Blocks, L: NComplex, R: NComplex, O: NComplex,
                  root=None, source: Optional[NComplex] = None) -> GradedMap:
    """The degree-0 map L (x)^q R -> O defined by the blocks."""
    F = L.field
    src = source if source is not None else tensor_complex(L, R, root)
    comps = {}
    for i in src.support:
        parts = []
        for (s, t), off, size in tensor_blocks([L.dims, R.dims], i):
            parts.append(block(blocks, L, R, O, s, t))
        comps[i] = Matrix.hstack(F, parts, rows=O.dim(i))
    return GradedMap(src, O, 0, comps)


def apply(blocks: Blocks, L, R, O, s: int, x: Matrix, t: int, y: Matrix) -> Matrix:
    """Image of x (x) y for homogeneous columns x in L^s, y in R^t."""
    return block(blocks, L, R, O, s, t) @ x.kron(y)


def leibniz_check(blocks: Blocks, L: NComplex, R: NComplex, O: NComplex,
                  what: str, root=None) -> None:
    """d(ab) = d(a) b + q^s a d(b), i.e. the blocks form a chain map from L (x)^q R."""
    mu = as_graded_map(blocks, L, R, O, root)
    defect = mu.hom_differential()
    for i, m in sorted(defect.components.items()):
        if m.is_zero():
            continue
        col = int(next(j for j in range(m.cols) if not m.col(j).is_zero()))
        for (s, t), off, size in tensor_blocks([L.dims, R.dims], i):
            if off <= col < off + size:
                a, b = divmod(col - off, R.dim(t))
                raise LeibnizViolation(f"{what}: d(ab) != d(a)b + q^s a d(b)",
                                       witness={"degrees": (s, t), "basis": (a, b)})
    return None


def identity_blocks(X: NComplex) -> Blocks:
    """Blocks of the k-bilinear map X (x) k_0 -> X (used for trivial actions)."""
    return {(s, 0): Matrix.identity(X.field, n) for s, n in X.dims.items()}


def first_nonzero(m: Matrix) -> Optional[int]:
    for j in range(m.cols):
        if not m.col(j).is_zero():
            return j
    return None


def triple_witness(L, M, R, s, t, u, col):
    a, rest = divmod(col, M.dim(t) * R.dim(u))
    b, c = divmod(rest, R.dim(u))
    return {"degrees": (s, t, u), "basis": (a, b, c)}


def assoc_check(left_first: Blocks, then_left: Blocks, right_first: Blocks,
                then_right: Blocks, A, B, C, AB, BC, OUT, what: str) -> None:
    """(ab)c = a(bc) on all homogeneous basis triples.

    left_first: A (x) B -> AB, then_left: AB (x) C -> OUT;
    right_first: B (x) C -> BC, then_right: A (x) BC -> OUT.
    """
    F = A.field
    for s in A.support:
        for t in B.support:
            for u in C.support:
                if not OUT.dim(s + t + u):
                    continue
                lhs = block(then_left, AB, C, OUT, s + t, u) @ \
                    block(left_first, A, B, AB, s, t).kron(Matrix.identity(F, C.dim(u)))
                rhs = block(then_right, A, BC, OUT, s, t + u) @ \
                    Matrix.identity(F, A.dim(s)).kron(block(right_first, B, C, BC, t, u))
                diff = lhs - rhs
                if not diff.is_zero():
                    col = first_nonzero(diff)
                    raise AssocViolation(f"{what}: (ab)c != a(bc)",
                                         witness=triple_witness(A, B, C, s, t, u, col))
