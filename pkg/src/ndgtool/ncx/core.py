"""Graded spaces, N-complexes, graded maps and amplitude homology."""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Dict, List, Optional

from ..errors import NotContained, NotNDifferential, ShapeError
from ..linalg import Matrix, image, kernel, rank, span_dim, subquotient_dim
from ..scalars import Field


class GradedSpace:
    """Finitely supported family degree -> dimension."""

    __slots__ = ("dims",)

    def __init__(self, dims=None):
        dims = dict(dims or {})
        for i, n in dims.items():
            if n < 0:
                raise ShapeError(f"negative dimension {n} at degree {i}")
        self.dims = {int(i): int(n) for i, n in sorted(dims.items()) if n}

    def dim(self, i: int) -> int:
        return self.dims.get(i, 0)

    @property
    def support(self) -> List[int]:
        return list(self.dims)

    def total_dim(self) -> int:
        return sum(self.dims.values())

    def shifted(self, n: int) -> "GradedSpace":
        """Space with (shifted)^m = self^(m+n)."""
        return GradedSpace({i - n: v for i, v in self.dims.items()})

    def __eq__(self, other):
        return isinstance(other, GradedSpace) and self.dims == other.dims

    def __hash__(self):
        return hash(tuple(self.dims.items()))

    def __repr__(self):
        return f"GradedSpace({self.dims})"


class NComplex:
    """Bounded N-complex: a graded space with d of degree +1 and d^N = 0.

    ``d[i]`` maps degree i to degree i + 1; missing entries are zero maps.
    Construct through :func:`validate_ncomplex` unless the data is known good.
    """

    def __init__(self, field: Field, space, d: Optional[dict] = None):
        self.field = field
        self.N = field.N
        self.space = space if isinstance(space, GradedSpace) else GradedSpace(space)
        self.d: Dict[int, Matrix] = {}
        for i, m in (d or {}).items():
            i = int(i)
            shape = (self.dim(i + 1), self.dim(i))
            if m.shape != shape:
                raise ShapeError(f"d at degree {i} has shape {m.shape}, expected {shape}")
            if 0 not in shape:
                self.d[i] = m
        self._pow = {}

    # graded space passthrough
    def dim(self, i: int) -> int:
        return self.space.dim(i)

    @property
    def dims(self):
        return self.space.dims

    @property
    def support(self):
        return self.space.support

    def degree_range(self):
        s = self.support
        return (s[0], s[-1]) if s else (0, -1)

    def diff(self, i: int) -> Matrix:
        m = self.d.get(i)
        if m is None:
            return Matrix.zeros(self.field, self.dim(i + 1), self.dim(i))
        return m

    def d_power(self, i: int, t: int) -> Matrix:
        """d^(i+t-1) ... d^i as a matrix X^i -> X^(i+t)."""
        key = (i, t)
        if key not in self._pow:
            if t == 0:
                out = Matrix.identity(self.field, self.dim(i))
            else:
                out = self.diff(i + t - 1) @ self.d_power(i, t - 1)
            self._pow[key] = out
        return self._pow[key]

    def identity(self) -> "GradedMap":
        return GradedMap(self, self, 0, {i: Matrix.identity(self.field, n)
                                         for i, n in self.dims.items()})

    def zero_map(self, other, degree: int = 0) -> "GradedMap":
        return GradedMap(self, other, degree, {})

    def same_data(self, other: "NComplex") -> bool:
        if self.dims != other.dims:
            return False
        return all(self.diff(i) == other.diff(i) for i in self.support)

    def __repr__(self):
        return f"NComplex(N={self.N}, dims={self.dims})"


def validate_ncomplex(field: Field, space, d: dict) -> NComplex:
    """Build an N-complex, checking shapes and that every length-N composite vanishes."""
    X = NComplex(field, space, d)
    check_nilpotent(X)
    return X


def check_nilpotent(X: NComplex) -> None:
    sup = X.support
    if not sup:
        return
    for i in range(sup[0], sup[-1] + 1):
        if X.dim(i) and not X.d_power(i, X.N).is_zero():
            raise NotNDifferential(i)


def d_power(X: NComplex, i: int, t: int) -> Matrix:
    if not 0 <= t <= X.N:
        raise ValueError(f"power {t} outside 0..{X.N}")
    return X.d_power(i, t)


def zero_complex(field: Field) -> NComplex:
    return NComplex(field, {}, {})


def point(field: Field, degree: int = 0, dim: int = 1) -> NComplex:
    """k^dim concentrated in one degree."""
    return NComplex(field, {degree: dim}, {})


def staircase(field: Field, start: int, length: int) -> NComplex:
    """k -> k -> ... -> k (identity maps), ``length`` copies starting at ``start``.

    Length N gives the contractible block; shorter lengths are the
    indecomposable non-contractible complexes.
    """
    if not 1 <= length <= field.N:
        raise ValueError(f"block length {length} outside 1..{field.N}")
    one = Matrix.identity(field, 1)
    return NComplex(field, {start + j: 1 for j in range(length)},
                    {start + j: one for j in range(length - 1)})


def direct_sum(field: Field, parts: List[NComplex]) -> NComplex:
    """Direct sum; at each degree the summands are stacked in list order."""
    dims = {}
    for P in parts:
        for i, n in P.dims.items():
            dims[i] = dims.get(i, 0) + n
    d = {}
    for i in sorted(dims):
        if dims.get(i + 1):
            d[i] = Matrix.block(field, [P.dim(i + 1) for P in parts],
                                [P.dim(i) for P in parts],
                                {(k, k): P.diff(i) for k, P in enumerate(parts)})
    return NComplex(field, dims, d)


# ---------------------------------------------------------------- graded maps

class GradedMap:
    """Degree-r family of matrices source^i -> target^(i+r)."""

    def __init__(self, source, target, degree: int, components: Optional[dict] = None,
                 field: Optional[Field] = None):
        self.source = source
        self.target = target
        self.degree = int(degree)
        self.field = field or getattr(source, "field", None) or getattr(target, "field", None)
        if self.field is None and components:
            self.field = next(iter(components.values())).field
        self.components: Dict[int, Matrix] = {}
        for i, m in (components or {}).items():
            i = int(i)
            shape = (target.dim(i + degree), source.dim(i))
            if m.shape != shape:
                raise ShapeError(f"component {i} has shape {m.shape}, expected {shape}")
            if 0 not in shape:
                self.components[i] = m

    def comp(self, i: int) -> Matrix:
        m = self.components.get(i)
        if m is None:
            return Matrix.zeros(self.field, self.target.dim(i + self.degree), self.source.dim(i))
        return m

    def __matmul__(self, other: "GradedMap") -> "GradedMap":
        """self after other."""
        comps = {}
        for i in other.source.support:
            comps[i] = self.comp(i + other.degree) @ other.comp(i)
        return GradedMap(other.source, self.target, self.degree + other.degree, comps,
                         field=self.field)

    def _combine(self, other, op):
        if self.degree != other.degree:
            raise ShapeError("maps of different degree")
        keys = set(self.components) | set(other.components)
        return GradedMap(self.source, self.target, self.degree,
                         {i: op(self.comp(i), other.comp(i)) for i in keys}, field=self.field)

    def __add__(self, other):
        return self._combine(other, lambda a, b: a + b)

    def __sub__(self, other):
        return self._combine(other, lambda a, b: a - b)

    def scale(self, c) -> "GradedMap":
        return GradedMap(self.source, self.target, self.degree,
                         {i: m.scale(c) for i, m in self.components.items()}, field=self.field)

    def is_zero(self) -> bool:
        return all(m.is_zero() for m in self.components.values())

    def __eq__(self, other):
        if not isinstance(other, GradedMap) or self.degree != other.degree:
            return False
        return (self - other).is_zero()

    __hash__ = None

    def hom_differential(self) -> "GradedMap":
        """d_target f - q^r f d_source, a map of degree r + 1."""
        F, r = self.field, self.degree
        qr = F.root_power(r)
        comps = {}
        for i in self.source.support:
            a = self.target.diff(i + r) @ self.comp(i)
            b = (self.comp(i + 1) @ self.source.diff(i)).scale(qr)
            comps[i] = a - b
        return GradedMap(self.source, self.target, r + 1, comps)

    def is_chain_map(self) -> bool:
        """Degree-0 map commuting with the differentials."""
        return self.degree == 0 and self.hom_differential().is_zero()

    def is_cycle(self) -> bool:
        """d f = 0 in the hom complex (a chain map up to the q^r twist)."""
        return self.hom_differential().is_zero()

    def is_iso(self) -> bool:
        sup = set(self.source.support) | {i - self.degree for i in self.target.support}
        for i in sup:
            m = self.comp(i)
            if m.rows != m.cols or rank(m) != m.rows:
                return False
        return True

    def inverse(self) -> "GradedMap":
        from ..linalg import inverse
        return GradedMap(self.target, self.source, -self.degree,
                         {i + self.degree: inverse(m) for i, m in self.components.items()},
                         field=self.field)

    def __repr__(self):
        return f"GradedMap(degree={self.degree}, {len(self.components)} components)"


# ---------------------------------------------------------------- homology

@dataclass
class HomologySlice:
    i: int
    r: int
    z_dim: int
    b_dim: int
    h_dim: int
    z_basis: Matrix = dc_field(repr=False)
    b_basis: Matrix = dc_field(repr=False)


def cycles(X: NComplex, i: int, r: int) -> Matrix:
    """Basis of Z^i_(r) = ker d^r at degree i."""
    return kernel(X.d_power(i, r))


def boundaries(X: NComplex, i: int, r: int) -> Matrix:
    """Basis of B^i_(r) = im d^r into degree i."""
    return image(X.d_power(i - r, r))


def homology(X: NComplex, i: int, r: int) -> HomologySlice:
    """H^i_(r) = Z^i_(r) / B^i_(N-r)."""
    N = X.N
    if not 1 <= r <= N - 1:
        raise ValueError(f"amplitude {r} outside 1..{N - 1}")
    Z = cycles(X, i, r)
    B = boundaries(X, i, N - r)
    try:
        h = subquotient_dim(Z, B)
    except NotContained as exc:
        raise NotContained(f"boundaries escape cycles at degree {i}, r={r}: {exc}") from exc
    return HomologySlice(i, r, Z.cols, span_dim(B), h, Z, B)


def homology_table(X: NComplex, window=None) -> Dict[tuple, int]:
    """{(i, r): h_dim} over a degree window (default: the support)."""
    if window is None:
        lo, hi = X.degree_range()
    else:
        lo, hi = window
    return {(i, r): homology(X, i, r).h_dim
            for i in range(lo, hi + 1) for r in range(1, X.N)}


def is_acyclic(X: NComplex, all_r: bool = False) -> bool:
    """r = 1 suffices; ``all_r`` also checks every amplitude as a cross-check."""
    rs = range(1, X.N) if all_r else [1]
    verdicts = [all(homology(X, i, r).h_dim == 0 for i in X.support) for r in rs]
    if all_r and len(set(verdicts)) > 1:
        raise AssertionError("amplitude homologies disagree on acyclicity")
    return all(verdicts)
