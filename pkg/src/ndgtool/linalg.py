"""Dense exact linear algebra over a :class:`~ndgtool.scalars.Field`.

Matrices act on column vectors; ``A @ B`` is "B then A". Elimination always
picks the first nonzero entry as pivot, so returned bases are reproducible.
"""
from __future__ import annotations

from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import FieldMismatch, NotContained, ShapeError
from .scalars import Field


class Matrix:
    __slots__ = ("field", "data")

    def __init__(self, field: Field, data):
        self.field = field
        if not isinstance(data, np.ndarray) or data.dtype != field.dtype or data.ndim != 2:
            data = _coerce(field, data)
        self.data = data

    # construction
    @classmethod
    def zeros(cls, F: Field, rows: int, cols: int) -> "Matrix":
        return cls(F, F.zeros((rows, cols)))

    @classmethod
    def identity(cls, F: Field, n: int) -> "Matrix":
        return cls(F, F.eye(n))

    @classmethod
    def from_rows(cls, F: Field, rows, cols: Optional[int] = None) -> "Matrix":
        rows = list(rows)
        if not rows:
            return cls.zeros(F, 0, cols or 0)
        return cls(F, F.asarray(rows))

    @classmethod
    def column(cls, F: Field, entries) -> "Matrix":
        entries = list(entries)
        return cls(F, F.asarray([[x] for x in entries]) if entries else F.zeros((0, 1)))

    @classmethod
    def hstack(cls, F: Field, mats: Sequence["Matrix"], rows: Optional[int] = None) -> "Matrix":
        mats = list(mats)
        if not mats:
            return cls.zeros(F, rows or 0, 0)
        return cls(F, np.hstack([m.data for m in mats]))

    @classmethod
    def vstack(cls, F: Field, mats: Sequence["Matrix"], cols: Optional[int] = None) -> "Matrix":
        mats = list(mats)
        if not mats:
            return cls.zeros(F, 0, cols or 0)
        return cls(F, np.vstack([m.data for m in mats]))

    @classmethod
    def block(cls, F: Field, row_sizes, col_sizes, blocks: dict) -> "Matrix":
        """Assemble from ``{(bi, bj): Matrix}``; missing blocks are zero."""
        out = F.zeros((sum(row_sizes), sum(col_sizes)))
        r0 = np.concatenate([[0], np.cumsum(row_sizes)]).astype(int)
        c0 = np.concatenate([[0], np.cumsum(col_sizes)]).astype(int)
        for (bi, bj), m in blocks.items():
            if m.shape != (row_sizes[bi], col_sizes[bj]):
                raise ShapeError(f"block {(bi, bj)} has shape {m.shape}, "
                                 f"expected {(row_sizes[bi], col_sizes[bj])}")
            out[r0[bi]:r0[bi + 1], c0[bj]:c0[bj + 1]] = m.data
        return cls(F, out)

    # shape
    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    @property
    def shape(self):
        return self.data.shape

    @property
    def T(self) -> "Matrix":
        return Matrix(self.field, self.data.T.copy())

    def __getitem__(self, idx):
        out = self.data[idx]
        if isinstance(out, np.ndarray) and out.ndim == 2:
            return Matrix(self.field, out.copy())
        return out

    def col(self, j: int) -> "Matrix":
        return Matrix(self.field, self.data[:, j:j + 1].copy())

    def columns(self):
        return [self.col(j) for j in range(self.cols)]

    def entries(self):
        return [list(row) for row in self.data]

    # arithmetic
    def _check(self, other: "Matrix"):
        if not self.field.compatible(other.field):
            raise FieldMismatch(f"{self.field!r} vs {other.field!r}")

    def __matmul__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        if self.cols != other.rows:
            raise ShapeError(f"cannot compose {self.shape} after {other.shape}")
        F = self.field
        if self.cols == 0:
            return Matrix.zeros(F, self.rows, other.cols)
        return Matrix(F, F.reduce(self.data @ other.data))

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        if self.shape != other.shape:
            raise ShapeError(f"cannot add {self.shape} and {other.shape}")
        return Matrix(self.field, self.field.reduce(self.data + other.data))

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        if self.shape != other.shape:
            raise ShapeError(f"cannot subtract {self.shape} and {other.shape}")
        return Matrix(self.field, self.field.reduce(self.data - other.data))

    def __neg__(self) -> "Matrix":
        return Matrix(self.field, self.field.reduce(-self.data))

    def scale(self, c) -> "Matrix":
        return Matrix(self.field, self.field.scale(self.data, c))

    def kron(self, other: "Matrix") -> "Matrix":
        self._check(other)
        F = self.field
        if 0 in self.shape or 0 in other.shape:
            return Matrix.zeros(F, self.rows * other.rows, self.cols * other.cols)
        return Matrix(F, F.reduce(np.kron(self.data, other.data)))

    def is_zero(self) -> bool:
        return self.data.size == 0 or not self.field.nonzero_mask(self.data).any()

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.field.compatible(other.field) and self.shape == other.shape
                and (self - other).is_zero())

    def __hash__(self):
        return hash((self.shape, tuple(str(x) for x in self.data.flat)))

    def __repr__(self):
        F = self.field
        body = "; ".join(" ".join(str(F.format(x)) for x in row) for row in self.data)
        return f"Matrix({self.rows}x{self.cols}: [{body}])"

    # elimination-based queries
    def rank(self) -> int:
        return len(rref(self)[1])

    def kernel(self) -> "Matrix":
        return kernel(self)

    def image(self) -> "Matrix":
        return image(self)


def _coerce(F: Field, data) -> np.ndarray:
    arr = np.asarray(data, dtype=object)
    if arr.ndim != 2:
        raise ShapeError(f"matrix data must be 2-dimensional, got shape {arr.shape}")
    out = F.zeros(arr.shape)
    for idx, x in np.ndenumerate(arr):
        out[idx] = F(x)
    return out


# ---------------------------------------------------------------- elimination

def rref(A: Matrix):
    """Reduced row echelon form and pivot columns, first-nonzero pivoting."""
    F = A.field
    M = A.data.copy()
    rows, cols = M.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(F.nonzero_mask(M[r:, c]))
        if nz.size == 0:
            continue
        k = r + int(nz[0])
        if k != r:
            M[[r, k]] = M[[k, r]]
        M[r] = F.scale(M[r], F.inv(M[r, c]))
        colv = M[:, c].copy()
        colv[r] = F.zero
        mask = F.nonzero_mask(colv)
        if mask.any():
            M[mask] = F.reduce(M[mask] - np.outer(colv[mask], M[r]))
        pivots.append(c)
        r += 1
    return Matrix(F, M), pivots


def rank(A: Matrix) -> int:
    return len(rref(A)[1])


def kernel(A: Matrix) -> Matrix:
    """Basis of ker A as columns; one basis vector per free column."""
    F = A.field
    R, pivots = rref(A)
    free = [c for c in range(A.cols) if c not in set(pivots)]
    K = F.zeros((A.cols, len(free)))
    for j, fc in enumerate(free):
        K[fc, j] = F.one
        for i, pc in enumerate(pivots):
            K[pc, j] = F.neg(R.data[i, fc])
    return Matrix(F, K)


def image(A: Matrix) -> Matrix:
    """Basis of the column space: the pivot columns of A itself."""
    _, pivots = rref(A)
    return Matrix(A.field, A.data[:, pivots].copy())


def solve_linear(A: Matrix, b: Matrix) -> Optional[Matrix]:
    """Some X with A X = b (b may have several columns), or None.

    Free variables are set to zero.
    """
    if not A.field.compatible(b.field):
        raise FieldMismatch(f"{A.field!r} vs {b.field!r}")
    if A.rows != b.rows:
        raise ShapeError(f"A has {A.rows} rows but b has {b.rows}")
    F = A.field
    n, k = A.cols, b.cols
    aug = Matrix(F, np.hstack([A.data, b.data]) if A.cols or b.cols else F.zeros((A.rows, 0)))
    R, pivots = rref(aug)
    if any(p >= n for p in pivots):
        return None
    X = F.zeros((n, k))
    for i, pc in enumerate(pivots):
        X[pc, :] = R.data[i, n:]
    return Matrix(F, X)


def inverse(A: Matrix) -> Matrix:
    if A.rows != A.cols:
        raise ShapeError(f"cannot invert a {A.shape} matrix")
    X = solve_linear(A, Matrix.identity(A.field, A.rows))
    if X is None or A.rank() != A.rows:
        raise ZeroDivisionError("matrix is singular")
    return X


def column_space_contains(V: Matrix, W: Matrix) -> bool:
    """Whether every column of W lies in the span of the columns of V."""
    if W.cols == 0:
        return True
    if V.cols == 0:
        return W.is_zero()
    return rank(Matrix.hstack(V.field, [V, W])) == rank(V)


def span_dim(*mats: Matrix) -> int:
    mats = [m for m in mats if m.cols]
    if not mats:
        return 0
    return rank(Matrix.hstack(mats[0].field, mats))


def subquotient_dim(Z: Matrix, B: Matrix) -> int:
    """dim span(Z) - dim span(B), after checking span(B) is inside span(Z)."""
    if Z.rows != B.rows and Z.cols and B.cols:
        raise ShapeError("Z and B live in different ambient spaces")
    if not column_space_contains(Z, B):
        raise NotContained("span(B) is not contained in span(Z)")
    return span_dim(Z) - span_dim(B)


def complement(V: Matrix, n: Optional[int] = None) -> Matrix:
    """Standard basis vectors completing the columns of V to a basis of k^n."""
    F = V.field
    n = V.rows if n is None else n
    aug = Matrix(F, np.hstack([V.data, F.eye(n)]))
    _, pivots = rref(aug)
    picks = [p - V.cols for p in pivots if p >= V.cols]
    return Matrix(F, F.eye(n)[:, picks].copy())


def matrix_of(F: Field, func, n_in: int, n_out: int) -> Matrix:
    """Matrix of a linear map given as a function on column vectors."""
    cols = []
    for j in range(n_in):
        e = F.zeros((n_in, 1))
        e[j, 0] = F.one
        cols.append(func(Matrix(F, e)))
    if not cols:
        return Matrix.zeros(F, n_out, 0)
    return Matrix.hstack(F, cols)


def direct_sum(F: Field, mats: Iterable[Matrix]) -> Matrix:
    mats = list(mats)
    return Matrix.block(F, [m.rows for m in mats], [m.cols for m in mats],
                        {(i, i): m for i, m in enumerate(mats)})
