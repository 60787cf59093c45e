"""Cokernels, cones, connecting maps and the long homology sequence."""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Dict, List, Optional, Tuple

from ..errors import NotATriangle, NotChainMap
from ..linalg import Matrix, complement, inverse, kernel, solve_linear, span_dim, \
    column_space_contains, image
from .core import GradedMap, NComplex, boundaries, cycles, direct_sum, homology
from .functors import canonical_maps, suspend
from .homotopy import null_homotopy, require_chain_map


def cokernel(f: GradedMap) -> Tuple[NComplex, GradedMap, GradedMap]:
    """Cokernel of a chain map (injective or not).

    The complement of im f is spanned by standard basis vectors chosen by
    first-pivot elimination. Returns (C, projection, section); the section
    is a degreewise linear right inverse of the projection, not a chain map.
    """
    F = f.field
    T = f.target
    proj, sect, dims = {}, {}, {}
    for m in T.support:
        A = image(f.comp(m))
        C = complement(A, T.dim(m))
        full = inverse(Matrix.hstack(F, [A, C], rows=T.dim(m)))
        proj[m] = full[A.cols:, :]
        sect[m] = C
        dims[m] = C.cols
    d = {}
    for m in T.support:
        if dims.get(m) and dims.get(m + 1):
            d[m] = proj[m + 1] @ T.diff(m) @ sect[m]
    Z = NComplex(F, dims, d)
    return Z, GradedMap(T, Z, 0, proj), GradedMap(Z, T, 0, sect)


@dataclass
class Triangle:
    X: NComplex
    Y: NComplex
    Z: NComplex
    F: GradedMap
    G: GradedMap
    H: GradedMap
    SX: NComplex = dc_field(repr=False, default=None)

    def validate(self) -> "Triangle":
        for name in ("F", "G", "H"):
            m = getattr(self, name)
            if m.degree != 0 or not m.is_chain_map():
                raise NotATriangle(f"{name} is not a chain map")
        if null_homotopy(self.G @ self.F) is None:
            raise NotATriangle("G F is not null-homotopic")
        return self


def cone(f: GradedMap) -> Triangle:
    """Triangle X -> Y -> Z -> Sigma X with Z the pushout of f along eta_X."""
    require_chain_map(f, "cone argument")
    X, Y = f.source, f.target
    F = X.field
    can = canonical_maps(X)
    P, eta, delta = can["QN1"], can["eta"], can["delta"]
    PY = direct_sum(F, [P, Y])
    phi = {}
    for m in X.support:
        phi[m] = Matrix.vstack(F, [eta.comp(m), -f.comp(m)], cols=X.dim(m))
    phi_map = GradedMap(X, PY, 0, phi)
    Z, proj, sect = cokernel(phi_map)
    incl_y = {m: Matrix.vstack(F, [Matrix.zeros(F, P.dim(m), Y.dim(m)),
                                   Matrix.identity(F, Y.dim(m))]) for m in Y.support}
    G = proj @ GradedMap(Y, PY, 0, incl_y)
    to_sx = {}
    SX = can["susp"]
    for m in PY.support:
        to_sx[m] = Matrix.hstack(F, [delta.comp(m), Matrix.zeros(F, SX.dim(m), Y.dim(m))],
                                 rows=SX.dim(m))
    H = GradedMap(PY, SX, 0, to_sx) @ sect
    return Triangle(X, Y, Z, f, G, H, SX).validate()


# ---------------------------------------------------------------- connecting maps

def split_data(mono: GradedMap, epi: GradedMap):
    """Degreewise retraction of ``mono`` and section of ``epi``."""
    F = mono.field
    retr, sect = {}, {}
    for m in mono.target.support:
        A = mono.comp(m)
        if A.cols:
            sol = solve_linear(A.T, Matrix.identity(F, A.cols))
            retr[m] = sol.T
        B = epi.comp(m)
        if B.rows:
            sect[m] = solve_linear(B, Matrix.identity(F, B.rows))
    return (GradedMap(mono.target, mono.source, 0, retr),
            GradedMap(epi.target, epi.source, 0, sect))


def connecting_matrix(mono: GradedMap, epi: GradedMap, i: int, r: int,
                      split=None) -> Matrix:
    """H^i_(r)(C) -> H^(i+r)_(N-r)(A) for 0 -> A -> B -> C -> 0, on cycle coordinates.

    Convention: retraction . d^r . section.
    """
    retr, sect = split or split_data(mono, epi)
    B = mono.target
    return retr.comp(i + r) @ B.d_power(i, r) @ sect.comp(i)


# ---------------------------------------------------------------- exactness

def _image_lift(f: Matrix, Z_src: Matrix, B_tgt: Matrix) -> Matrix:
    """Columns spanning f(Z_src) + B_tgt."""
    F = f.field
    return Matrix.hstack(F, [f @ Z_src, B_tgt], rows=f.rows)


def _kernel_lift(g: Matrix, Z_mid: Matrix, B_tgt: Matrix) -> Matrix:
    """Columns spanning {z in span Z_mid : g z in span B_tgt}."""
    F = g.field
    gz = g @ Z_mid
    K = kernel(Matrix.hstack(F, [gz, B_tgt], rows=g.rows))
    return Z_mid @ K[:Z_mid.cols, :]


@dataclass
class ExactnessEntry:
    position: str
    i: int
    r: int
    h_dim: int
    image_dim: int
    kernel_dim: int
    exact: bool


def exactness_at(f: Matrix, g: Matrix, src, mid, tgt) -> Tuple[int, int, bool]:
    """Exactness of H(src) -f-> H(mid) -g-> H(tgt); each of src/mid/tgt is (Z, B).

    Returns (image dim, kernel dim, exact) with dims measured inside H(mid).
    """
    Zs, _ = src
    Zm, Bm = mid
    _, Bt = tgt
    im = _image_lift(f, Zs, Bm)
    ker = _kernel_lift(g, Zm, Bt)
    b = span_dim(Bm)
    im_dim = span_dim(im) - b
    ker_dim = span_dim(ker) - b
    exact = im_dim == ker_dim and column_space_contains(ker, im)
    return im_dim, ker_dim, exact


def hexagon_report(T: Triangle, window: Optional[Tuple[int, int]] = None) -> List[ExactnessEntry]:
    """Exactness of the long sequence

        H^i_(r) X -> H^i_(r) Y -> H^i_(r) Z -> H^(i+r)_(N-r) X -> ...

    at every X, Y and Z position with i in the window and 1 <= r <= N-1.
    """
    T.validate()
    X, Y, Z = T.X, T.Y, T.Z
    N = X.N
    if window is None:
        degs = X.support + Y.support + Z.support
        window = (min(degs) - N, max(degs) + N) if degs else (0, -1)
    can = canonical_maps(X)
    split = split_data(can["eta"], can["delta"])

    cache: Dict[tuple, Tuple[Matrix, Matrix]] = {}

    def zb(C, key, i, r):
        k = (key, i, r)
        if k not in cache:
            cache[k] = (cycles(C, i, r), boundaries(C, i, N - r))
        return cache[k]

    def conn(i, r):
        # H^i_(r) Z -> H^i_(r) Sigma X -> H^(i+r)_(N-r) X
        return connecting_matrix(can["eta"], can["delta"], i, r, split) @ T.H.comp(i)

    out = []
    for i in range(window[0], window[1] + 1):
        for r in range(1, N):
            zx, zy, zz = zb(X, "X", i, r), zb(Y, "Y", i, r), zb(Z, "Z", i, r)
            # at Y
            im, ker, ok = exactness_at(T.F.comp(i), T.G.comp(i), zx, zy, zz)
            out.append(ExactnessEntry("Y", i, r, homology(Y, i, r).h_dim, im, ker, ok))
            # at Z
            zx_next = zb(X, "X", i + r, N - r)
            im, ker, ok = exactness_at(T.G.comp(i), conn(i, r), zy, zz, zx_next)
            out.append(ExactnessEntry("Z", i, r, homology(Z, i, r).h_dim, im, ker, ok))
            # at X, entered from H^(i-N+r)_(N-r) Z
            j, s = i - N + r, N - r
            zz_prev = zb(Z, "Z", j, s)
            im, ker, ok = exactness_at(conn(j, s), T.F.comp(i), zz_prev, zx, zy)
            out.append(ExactnessEntry("X", i, r, homology(X, i, r).h_dim, im, ker, ok))
    return out
