"""Finite N_qDG categories given by hom complexes and composition tables."""
from __future__ import annotations

from typing import Dict, List, Optional, Sequence, Tuple

from ..errors import NotNDifferential, UnitViolation, UnknownObject
from ..linalg import Matrix, inverse
from ..ncx.core import NComplex, check_nilpotent, point
from ..scalars import Field
from .bilinear import Blocks, assoc_check, block, clean_blocks, first_nonzero, leibniz_check


class NdgCategory:
    """Objects, hom complexes hom[(A, B)] (morphisms A -> B), units, composition.

    ``compose[(A, B, C)]`` holds blocks for hom(B, C) (x) hom(A, B) -> hom(A, C),
    i.e. (f, g) -> f g with g applied first. Missing hom pairs are zero.
    """

    def __init__(self, field: Field, objects: Sequence[str], hom: Dict[tuple, NComplex],
                 unit: Dict[str, Matrix], compose: Dict[tuple, Blocks]):
        self.field = field
        self.N = field.N
        self.objects = list(objects)
        self._zero = NComplex(field, {}, {})
        self.hom = {k: v for k, v in hom.items()}
        self.unit = dict(unit)
        self.compose = {}
        for (A, B, C), blocks in compose.items():
            self.compose[(A, B, C)] = clean_blocks(blocks, self.Hom(B, C), self.Hom(A, B),
                                                   self.Hom(A, C))

    def check_object(self, A):
        if A not in self.objects:
            raise UnknownObject(f"unknown object {A!r}")

    def Hom(self, A, B) -> NComplex:
        return self.hom.get((A, B), self._zero)

    def comp_blocks(self, A, B, C) -> Blocks:
        return self.compose.get((A, B, C), {})

    def comp_block(self, A, B, C, r: int, s: int) -> Matrix:
        return block(self.comp_blocks(A, B, C), self.Hom(B, C), self.Hom(A, B),
                     self.Hom(A, C), r, s)

    def compose_elements(self, A, B, C, f: Matrix, r: int, g: Matrix, s: int) -> Matrix:
        """f g for f in hom(B, C)^r and g in hom(A, B)^s, as a column."""
        return self.comp_block(A, B, C, r, s) @ f.kron(g)

    def hom_dims(self) -> Dict[tuple, int]:
        return {k: v.space.total_dim() for k, v in self.hom.items()}

    def __repr__(self):
        return f"NdgCategory(objects={self.objects}, hom_dims={self.hom_dims()})"


def validate_category(C: NdgCategory) -> NdgCategory:
    F = C.field
    for (A, B), H in C.hom.items():
        C.check_object(A)
        C.check_object(B)
        try:
            check_nilpotent(H)
        except NotNDifferential as exc:
            raise NotNDifferential(exc.degree, f"hom({A},{B}): d^N != 0 at degree {exc.degree}")
    for A in C.objects:
        u = C.unit.get(A)
        H = C.Hom(A, A)
        if u is None or u.shape != (H.dim(0), 1):
            raise UnitViolation(f"missing or malformed unit for {A}", witness={"object": A})
    objs = C.objects
    # q-Leibniz
    for A in objs:
        for B in objs:
            for Cc in objs:
                if C.Hom(A, Cc).space.total_dim() == 0:
                    continue
                leibniz_check(C.comp_blocks(A, B, Cc), C.Hom(B, Cc), C.Hom(A, B),
                              C.Hom(A, Cc), f"composition {A}->{B}->{Cc}")
    # units
    for A in objs:
        for B in objs:
            H = C.Hom(A, B)
            for s, n in H.dims.items():
                eye = Matrix.identity(F, n)
                right = C.comp_block(A, A, B, s, 0) @ eye.kron(C.unit[A])
                left = C.comp_block(A, B, B, 0, s) @ C.unit[B].kron(eye)
                for name, m in (("x 1_A", right), ("1_B x", left)):
                    diff = m - eye
                    if not diff.is_zero():
                        raise UnitViolation(f"{name} != x on hom({A},{B})",
                                            witness={"degree": s, "basis": first_nonzero(diff)})
    # associativity: (f g) h = f (g h), f: C->D, g: B->C, h: A->B
    for A in objs:
        for B in objs:
            for Cc in objs:
                for D in objs:
                    if C.Hom(A, D).space.total_dim() == 0:
                        continue
                    assoc_check(C.comp_blocks(B, Cc, D), C.comp_blocks(A, B, D),
                                C.comp_blocks(A, B, Cc), C.comp_blocks(A, Cc, D),
                                C.Hom(Cc, D), C.Hom(B, Cc), C.Hom(A, B),
                                C.Hom(B, D), C.Hom(A, Cc), C.Hom(A, D),
                                f"composition {A}->{B}->{Cc}->{D}")
    return C


# ---------------------------------------------------------------- examples

def base_category(F: Field, name: str = "*") -> NdgCategory:
    """The field k as a one-object category."""
    H = point(F, 0)
    one = Matrix.identity(F, 1)
    return NdgCategory(F, [name], {(name, name): H}, {name: one},
                       {(name, name, name): {(0, 0): one}})


def truncated_polynomial(F: Field, top: Optional[int] = None, name: str = "*",
                         d_override: Optional[Dict[int, object]] = None) -> NdgCategory:
    """k[x]/(x^(top+1)) with deg x = 1 and d(x^m) = [m] x^(m+1); top defaults to N.

    ``d_override`` replaces the coefficient of x^(m+1) in d(x^m); used to build
    deliberately broken instances.
    """
    N = F.N
    top = N if top is None else top
    dims = {m: 1 for m in range(top + 1)}
    d = {}
    for m in range(top):
        c = F.sum(F.root_power(j) for j in range(m))  # [m], also past N
        if d_override and m in d_override:
            c = F(d_override[m])
        d[m] = Matrix(F, F.asarray([[c]]))
    H = NComplex(F, dims, d)
    one = Matrix.identity(F, 1)
    blocks = {(a, b): one for a in range(top + 1) for b in range(top + 1) if a + b <= top}
    return NdgCategory(F, [name], {(name, name): H}, {name: one},
                       {(name, name, name): blocks})


def upper_triangular(F: Field, R: NdgCategory, V: NComplex = None,
                     names=("a", "b")) -> NdgCategory:
    """Two objects a, b with hom(a,a) = algebra of R, hom(b,b) = k, hom(a,b) = R as a
    right module over itself (or a plain complex V with trivial a-action when R is k),
    hom(b,a) = 0.
    """
    a, b = names
    (r,) = R.objects
    A = R.Hom(r, r)
    one = Matrix.identity(F, 1)
    mid = A if V is None else V
    hom = {(a, a): A, (b, b): point(F, 0), (a, b): mid}
    unit = {a: R.unit[r], b: one}
    comp = {
        (a, a, a): R.comp_blocks(r, r, r),
        (b, b, b): {(0, 0): one},
        (a, b, b): {(0, s): Matrix.identity(F, n) for s, n in mid.dims.items()},
    }
    if V is None:
        comp[(a, a, b)] = R.comp_blocks(r, r, r)
    else:
        comp[(a, a, b)] = {(s, 0): Matrix.identity(F, n) for s, n in mid.dims.items()}
        if A.space.total_dim() != 1:
            raise ValueError("a plain complex needs R = k")
    return NdgCategory(F, [a, b], hom, unit, comp)


def change_basis(C: NdgCategory, g: Dict[tuple, Dict[int, Matrix]]) -> NdgCategory:
    """Transport the structure along degreewise invertible g[(A, B)][i] on each hom."""
    F = C.field

    def G(A, B, i):
        n = C.Hom(A, B).dim(i)
        return g.get((A, B), {}).get(i, Matrix.identity(F, n))

    hom = {}
    for (A, B), H in C.hom.items():
        d = {i: G(A, B, i + 1) @ m @ inverse(G(A, B, i)) for i, m in H.d.items()}
        hom[(A, B)] = NComplex(F, H.space, d)
    unit = {A: G(A, A, 0) @ u for A, u in C.unit.items()}
    comp = {}
    for (A, B, Cc), blocks in C.compose.items():
        nb = {}
        for (r, s), m in blocks.items():
            nb[(r, s)] = G(A, Cc, r + s) @ m @ inverse(G(B, Cc, r)).kron(inverse(G(A, B, s)))
        comp[(A, B, Cc)] = nb
    return NdgCategory(F, C.objects, hom, unit, comp)
