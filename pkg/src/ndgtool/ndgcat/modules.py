"""Right/left NDG modules and bimodules over a finite N_qDG category."""
from __future__ import annotations

from typing import Dict, List, Optional

import numpy as np

from ..errors import BaseMismatch, NotNDifferential, UnitViolation
from ..linalg import Matrix, inverse
from ..ncx.core import NComplex, check_nilpotent, direct_sum, point
from ..ncx.functors import (desuspend, q_functor, q_layout, suspend, suspend_layout,
                            theta_shift)
from ..ncx.tensor import hom_complex, tensor_blocks, tensor_complex
from ..scalars import q_binomial
from .bilinear import Blocks, assoc_check, block, clean_blocks, first_nonzero, leibniz_check
from .category import NdgCategory


class NdgModule:
    """Right module: action[(A1, A2)] blocks X(A1) (x) hom(A2, A1) -> X(A2).
    Left module:  action[(A1, A2)] blocks hom(A1, A2) (x) X(A1) -> X(A2).
    """

    def __init__(self, base: NdgCategory, side: str, value: Dict[str, NComplex],
                 action: Dict[tuple, Blocks]):
        if side not in ("right", "left"):
            raise ValueError(f"side must be right or left, got {side!r}")
        self.base = base
        self.side = side
        self.field = base.field
        self._zero = NComplex(base.field, {}, {})
        self.value = {A: value.get(A, self._zero) for A in base.objects}
        self.action = {}
        for (A1, A2), blocks in action.items():
            L, R, O = self._factors(A1, A2)
            self.action[(A1, A2)] = clean_blocks(blocks, L, R, O)

    def _factors(self, A1, A2):
        C = self.base
        if self.side == "right":
            return self.at(A1), C.Hom(A2, A1), self.at(A2)
        return C.Hom(A1, A2), self.at(A1), self.at(A2)

    def at(self, A) -> NComplex:
        return self.value.get(A, self._zero)

    def blocks(self, A1, A2) -> Blocks:
        return self.action.get((A1, A2), {})

    def act_block(self, A1, A2, s: int, t: int) -> Matrix:
        L, R, O = self._factors(A1, A2)
        return block(self.blocks(A1, A2), L, R, O, s, t)

    def dims(self):
        return {A: X.dims for A, X in self.value.items()}

    def __repr__(self):
        return f"NdgModule({self.side}, {self.dims()})"


def validate_module(X: NdgModule) -> NdgModule:
    C = X.base
    F = X.field
    objs = C.objects
    for A in objs:
        try:
            check_nilpotent(X.at(A))
        except NotNDifferential as exc:
            raise NotNDifferential(exc.degree, f"module value at {A}: d^N != 0 at {exc.degree}")
    for A1 in objs:
        for A2 in objs:
            L, R, O = X._factors(A1, A2)
            if O.space.total_dim():
                leibniz_check(X.blocks(A1, A2), L, R, O, f"{X.side} action {A1}->{A2}")
    for A in objs:
        V = X.at(A)
        for s, n in V.dims.items():
            eye = Matrix.identity(F, n)
            if X.side == "right":
                m = X.act_block(A, A, s, 0) @ eye.kron(C.unit[A])
            else:
                m = X.act_block(A, A, 0, s) @ C.unit[A].kron(eye)
            if not (m - eye).is_zero():
                raise UnitViolation(f"unit does not act trivially on {A}",
                                    witness={"degree": s, "basis": first_nonzero(m - eye)})
    for A1 in objs:
        for A2 in objs:
            for A3 in objs:
                if X.side == "right":
                    if not X.at(A3).space.total_dim():
                        continue
                    # x (f g) = (x f) g, f: A2 -> A1, g: A3 -> A2
                    assoc_check(X.blocks(A1, A2), X.blocks(A2, A3),
                                C.comp_blocks(A3, A2, A1), X.blocks(A1, A3),
                                X.at(A1), C.Hom(A2, A1), C.Hom(A3, A2),
                                X.at(A2), C.Hom(A3, A1), X.at(A3),
                                f"right action {A1}->{A2}->{A3}")
                else:
                    if not X.at(A3).space.total_dim():
                        continue
                    # (f g) x = f (g x), g: A1 -> A2, f: A2 -> A3
                    assoc_check(C.comp_blocks(A1, A2, A3), X.blocks(A1, A3),
                                X.blocks(A1, A2), X.blocks(A2, A3),
                                C.Hom(A2, A3), C.Hom(A1, A2), X.at(A1),
                                C.Hom(A1, A3), X.at(A2), X.at(A3),
                                f"left action {A1}->{A2}->{A3}")
    return X


# ---------------------------------------------------------------- bimodules

class NdgBimodule:
    """B-A-bimodule: value[(a, b)] = M(a, b), contravariant in a, covariant in b.

    left[(a, b1, b2)]:  hom_B(b1, b2) (x) M(a, b1) -> M(a, b2)
    right[(a1, a2, b)]: M(a1, b) (x) hom_A(a2, a1) -> M(a2, b)
    """

    def __init__(self, left_base: NdgCategory, right_base: NdgCategory,
                 value: Dict[tuple, NComplex], left: Dict[tuple, Blocks],
                 right: Dict[tuple, Blocks]):
        self.left_base = left_base
        self.right_base = right_base
        self.field = right_base.field
        self._zero = NComplex(self.field, {}, {})
        self.value = dict(value)
        self.left = {}
        for (a, b1, b2), blocks in left.items():
            self.left[(a, b1, b2)] = clean_blocks(blocks, left_base.Hom(b1, b2),
                                                  self.at(a, b1), self.at(a, b2))
        self.right = {}
        for (a1, a2, b), blocks in right.items():
            self.right[(a1, a2, b)] = clean_blocks(blocks, self.at(a1, b),
                                                   right_base.Hom(a2, a1), self.at(a2, b))

    def at(self, a, b) -> NComplex:
        return self.value.get((a, b), self._zero)

    def right_module(self, b) -> NdgModule:
        """M(-, b) as a right module over the right base."""
        A = self.right_base
        return NdgModule(A, "right", {a: self.at(a, b) for a in A.objects},
                         {(a1, a2): self.right.get((a1, a2, b), {})
                          for a1 in A.objects for a2 in A.objects})

    def left_module(self, a) -> NdgModule:
        """M(a, -) as a left module over the left base."""
        B = self.left_base
        return NdgModule(B, "left", {b: self.at(a, b) for b in B.objects},
                         {(b1, b2): self.left.get((a, b1, b2), {})
                          for b1 in B.objects for b2 in B.objects})

    def __repr__(self):
        return f"NdgBimodule({ {k: v.dims for k, v in self.value.items()} })"


def validate_bimodule(M: NdgBimodule) -> NdgBimodule:
    A, B = M.right_base, M.left_base
    for b in B.objects:
        validate_module(M.right_module(b))
    for a in A.objects:
        validate_module(M.left_module(a))
    # f (m g) = (f m) g
    for a1 in A.objects:
        for a2 in A.objects:
            for b1 in B.objects:
                for b2 in B.objects:
                    if not M.at(a2, b2).space.total_dim():
                        continue
                    assoc_check(M.left.get((a1, b1, b2), {}), M.right.get((a1, a2, b2), {}),
                                M.right.get((a1, a2, b1), {}), M.left.get((a2, b1, b2), {}),
                                B.Hom(b1, b2), M.at(a1, b1), A.Hom(a2, a1),
                                M.at(a1, b2), M.at(a2, b1), M.at(a2, b2),
                                f"bimodule middle associativity at ({a1},{a2},{b1},{b2})")
    return M


# ---------------------------------------------------------------- constructions

def representable(C: NdgCategory, A, side: str = "right") -> NdgModule:
    """Right: B -> hom(B, A). Left: B -> hom(A, B). Action is composition."""
    C.check_object(A)
    objs = C.objects
    if side == "right":
        value = {B: C.Hom(B, A) for B in objs}
        action = {(B1, B2): C.comp_blocks(B2, B1, A) for B1 in objs for B2 in objs}
    else:
        value = {B: C.Hom(A, B) for B in objs}
        action = {(B1, B2): C.comp_blocks(A, B1, B2) for B1 in objs for B2 in objs}
    return NdgModule(C, side, value, action)


def regular_bimodule(C: NdgCategory) -> NdgBimodule:
    objs = C.objects
    value = {(a, b): C.Hom(a, b) for a in objs for b in objs}
    left = {(a, b1, b2): C.comp_blocks(a, b1, b2) for a in objs for b1 in objs for b2 in objs}
    right = {(a1, a2, b): C.comp_blocks(a2, a1, b) for a1 in objs for a2 in objs for b in objs}
    return NdgBimodule(C, C, value, left, right)


def module_as_bimodule(X: NdgModule, other: NdgCategory) -> NdgBimodule:
    """A right A-module as a k-A-bimodule, or a left B-module as a B-k-bimodule.

    ``other`` must be the one-object base category k.
    """
    F = X.field
    (o,) = other.objects
    if X.side == "right":
        A = X.base
        value = {(a, o): X.at(a) for a in A.objects}
        right = {(a1, a2, o): X.blocks(a1, a2) for a1 in A.objects for a2 in A.objects}
        left = {(a, o, o): {(0, s): Matrix.identity(F, n) for s, n in X.at(a).dims.items()}
                for a in A.objects}
        return NdgBimodule(other, A, value, left, right)
    B = X.base
    value = {(o, b): X.at(b) for b in B.objects}
    left = {(o, b1, b2): X.blocks(b1, b2) for b1 in B.objects for b2 in B.objects}
    right = {(o, o, b): {(s, 0): Matrix.identity(F, n) for s, n in X.at(b).dims.items()}
             for b in B.objects}
    return NdgBimodule(B, other, value, left, right)


def free_bimodule(B: NdgCategory, A: NdgCategory, b0, a0) -> NdgBimodule:
    """M(a, b) = hom_B(b0, b) (x) hom_A(a, a0); B acts on the left factor, A on the right."""
    F = A.field
    value, left, right = {}, {}, {}
    for a in A.objects:
        for b in B.objects:
            value[(a, b)] = tensor_complex(B.Hom(b0, b), A.Hom(a, a0))
    for a in A.objects:
        V = A.Hom(a, a0)
        for b1 in B.objects:
            for b2 in B.objects:
                U1, U2, H = B.Hom(b0, b1), B.Hom(b0, b2), B.Hom(b1, b2)
                M1, M2 = value[(a, b1)], value[(a, b2)]
                blocks = {}
                for t in H.support:
                    for s in M1.support:
                        out = F.zeros((M2.dim(t + s), H.dim(t) * M1.dim(s)))
                        t_off = {k: off for k, off, _ in tensor_blocks([U2.dims, V.dims], t + s)}
                        for (s1, s2), off, size in tensor_blocks([U1.dims, V.dims], s):
                            if (t + s1, s2) not in t_off:
                                continue
                            comp = B.comp_block(b0, b1, b2, t, s1)   # H^t (x) U1^s1 -> U2^(t+s1)
                            blk = comp.kron(Matrix.identity(F, V.dim(s2)))
                            # columns of blk are ordered (h, u, v); ours are (h, (s-block offset + u*v))
                            to = t_off[(t + s1, s2)]
                            for h in range(H.dim(t)):
                                cols = slice(h * size, (h + 1) * size)
                                dst = slice(h * M1.dim(s) + off, h * M1.dim(s) + off + size)
                                out[to:to + blk.rows, dst] = blk.data[:, cols]
                        blocks[(t, s)] = Matrix(F, out)
                left[(a, b1, b2)] = blocks
    for b in B.objects:
        U = B.Hom(b0, b)
        for a1 in A.objects:
            for a2 in A.objects:
                V1, V2, H = A.Hom(a1, a0), A.Hom(a2, a0), A.Hom(a2, a1)
                M1, M2 = value[(a1, b)], value[(a2, b)]
                blocks = {}
                for s in M1.support:
                    for t in H.support:
                        out = F.zeros((M2.dim(s + t), M1.dim(s) * H.dim(t)))
                        t_off = {k: off for k, off, _ in tensor_blocks([U.dims, V2.dims], s + t)}
                        for (s1, s2), off, size in tensor_blocks([U.dims, V1.dims], s):
                            if (s1, s2 + t) not in t_off:
                                continue
                            comp = A.comp_block(a2, a1, a0, s2, t)   # V1^s2 (x) H^t -> V2^(s2+t)
                            blk = Matrix.identity(F, U.dim(s1)).kron(comp)
                            # rows/cols: source index (off + idx) * H + h is contiguous
                            to = t_off[(s1, s2 + t)]
                            out[to:to + blk.rows, off * H.dim(t):(off + size) * H.dim(t)] = blk.data
                        blocks[(s, t)] = Matrix(F, out)
                right[(a1, a2, b)] = blocks
    return NdgBimodule(B, A, value, left, right)


# ---------------------------------------------------------------- functors on modules

class ActionMatrix:
    """l x l upper-triangular matrix of hom elements with (s, t) entry
    [t-1 s-1] q^(n(t-s)) d^(t-s)(a) for s <= t (1-based), zero below.

    ``entries[s][t]`` is (degree, column vector) or None.
    """

    def __init__(self, C: NdgCategory, src, tgt, a: Matrix, t0: int, n: int, size: int):
        F = C.field
        H = C.Hom(src, tgt)
        self.field, self.n, self.size, self.t0 = F, n, size, t0
        self.src, self.tgt = src, tgt
        self.entries = [[None] * size for _ in range(size)]
        for s in range(size):
            for t in range(s, size):
                k = t - s
                coeff = F.mul(q_binomial(F, t, s), F.root_power(n * k))
                vec = (H.d_power(t0, k) @ a).scale(coeff)
                self.entries[s][t] = (t0 + k, vec)

    def entry(self, s, t):
        return self.entries[s][t]


def action_matrix_product(C: NdgCategory, P: ActionMatrix, Q: ActionMatrix, A, B, Cc):
    """Entrywise (P Q)_(i,j) = sum_l P_(i,l) Q_(l,j) with P over hom(B, Cc) and Q over
    hom(A, B); entries are (degree, column in hom(A, Cc))."""
    F = C.field
    size = P.size
    out = [[None] * size for _ in range(size)]
    for i in range(size):
        for j in range(i, size):
            acc = None
            deg = None
            for l in range(i, j + 1):
                dp, vp = P.entry(i, l)
                dq, vq = Q.entry(l, j)
                v = C.compose_elements(A, B, Cc, vp, dp, vq, dq)
                deg = dp + dq
                acc = v if acc is None else acc + v
            out[i][j] = (deg, acc)
    return out


def _structured_action(X: NdgModule, new_values: Dict[str, NComplex], layout, size: int):
    """Action on a functor image whose degree-n space stacks ``size`` components of X.

    ``layout(V, n)`` returns [(index, source degree, offset, dim)]. The product is
    (x a)_t = sum_(s<=t) [t-1 s-1] q^(n(t-s)) x_s d^(t-s)(a).
    """
    C, F = X.base, X.field
    objs = C.objects
    action = {}
    for A1 in objs:
        for A2 in objs:
            H = C.Hom(A2, A1)
            V1, V2 = X.at(A1), X.at(A2)
            W1, W2 = new_values[A1], new_values[A2]
            blocks = {}
            for n in W1.support:
                lay1 = layout(V1, n)
                for t0 in H.support:
                    lay2 = layout(V2, n + t0)
                    out = F.zeros((W2.dim(n + t0), W1.dim(n) * H.dim(t0)))
                    for s in range(size):
                        _, js, off_s, dim_s = lay1[s]
                        if not dim_s:
                            continue
                        for t in range(s, size):
                            _, jt, off_t, dim_t = lay2[t]
                            k = t - s
                            if not dim_t or not H.dim(t0 + k):
                                continue
                            coeff = F.mul(q_binomial(F, t, s), F.root_power(n * k))
                            D = H.d_power(t0, k)
                            blk = X.act_block(A1, A2, js, t0 + k) @ \
                                Matrix.identity(F, dim_s).kron(D)
                            blk = blk.scale(coeff)
                            cols = slice(off_s * H.dim(t0), (off_s + dim_s) * H.dim(t0))
                            rows = slice(off_t, off_t + dim_t)
                            out[rows, cols] = F.reduce(out[rows, cols] + blk.data)
                    blocks[(n, t0)] = Matrix(F, out)
            action[(A1, A2)] = blocks
    return action


def module_functor(X: NdgModule, which: str, arg: int = 0) -> NdgModule:
    """Apply theta^arg, Q_arg (on the underlying graded module), Sigma or Sigma^-1."""
    if X.side != "right":
        raise ValueError("functors are implemented for right modules")
    C, F, N = X.base, X.field, X.field.N
    objs = C.objects
    if which == "theta":
        n = arg
        value = {A: theta_shift(X.at(A), n) for A in objs}
        action = {k: {(s - n, t): m for (s, t), m in b.items()} for k, b in X.action.items()}
        return NdgModule(C, "right", value, action)
    if which == "q":
        r = arg
        value = {A: q_functor(r, X.at(A).space, F) for A in objs}
        action = _structured_action(X, value, lambda V, n: q_layout(N, r, V, n), N)
        return NdgModule(C, "right", value, action)
    if which in ("suspend", "desuspend"):
        inv = which == "desuspend"
        op = desuspend if inv else suspend
        value = {A: op(X.at(A)) for A in objs}
        action = _structured_action(X, value,
                                    lambda V, m: suspend_layout(N, V, m, inv), N - 1)
        return NdgModule(C, "right", value, action)
    raise ValueError(f"unknown functor {which!r}")


def dual_module(X: NdgModule) -> NdgModule:
    """D X(A) = Hom(X(A), k_0) for a left module X; (phi f)(y) = phi(f y)."""
    if X.side != "left":
        raise ValueError("the dual is taken of a left module")
    C, F = X.base, X.field
    objs = C.objects
    k0 = point(F, 0)
    value = {A: hom_complex(X.at(A), k0) for A in objs}
    action = {}
    for A1 in objs:
        for A2 in objs:
            H = C.Hom(A2, A1)
            blocks = {}
            for a in value[A1].support:
                for t in H.support:
                    P, K = X.at(A1).dim(-a), X.at(A2).dim(-a - t)
                    T = H.dim(t)
                    if not (P and K and T):
                        continue
                    # lam: H^t (x) X(A2)^(-a-t) -> X(A1)^(-a), shape (P, T*K)
                    lam = X.act_block(A2, A1, t, -a - t).data
                    out = lam.reshape(P, T, K).transpose(2, 0, 1).reshape(K, P * T)
                    blocks[(a, t)] = Matrix(F, np.ascontiguousarray(out))
            action[(A1, A2)] = blocks
    return NdgModule(C, "right", value, action)


def direct_sum_modules(parts: List[NdgModule]) -> NdgModule:
    """Objectwise direct sum; the action is block diagonal."""
    X0 = parts[0]
    C, F = X0.base, X0.field
    if any(P.base is not C or P.side != X0.side for P in parts):
        raise BaseMismatch("summands live over different categories or sides")
    objs = C.objects
    value = {A: direct_sum(F, [P.at(A) for P in parts]) for A in objs}
    action = {}
    for A1 in objs:
        for A2 in objs:
            blocks = {}
            L0, R0, O0 = X0._factors(A1, A2)
            degs_l = set()
            for P in parts:
                L, R, _ = P._factors(A1, A2)
                degs_l |= {(s, t) for s in L.support for t in R.support}
            for s, t in sorted(degs_l):
                rows, cols = [], []
                out_rows = 0
                # assemble by placing each summand's block at its offsets
                Lsum, Rsum, Osum = _sum_factors(X0, value, A1, A2)
                out = F.zeros((Osum.dim(s + t), Lsum.dim(s) * Rsum.dim(t)))
                o_off = 0
                v_off = 0
                for P in parts:
                    L, R, O = P._factors(A1, A2)
                    b = P.act_block(A1, A2, s, t)
                    if X0.side == "right":
                        # columns (x, f): x runs over the stacked summands
                        for xi in range(L.dim(s)):
                            src = slice(xi * R.dim(t), (xi + 1) * R.dim(t))
                            dst = slice((v_off + xi) * R.dim(t), (v_off + xi + 1) * R.dim(t))
                            out[o_off:o_off + O.dim(s + t), dst] = b.data[:, src]
                        v_off += L.dim(s)
                    else:
                        for fi in range(L.dim(s)):
                            src = slice(fi * R.dim(t), (fi + 1) * R.dim(t))
                            base = fi * Rsum.dim(t) + v_off
                            dst = slice(base, base + R.dim(t))
                            out[o_off:o_off + O.dim(s + t), dst] = b.data[:, src]
                        v_off += R.dim(t)
                    o_off += O.dim(s + t)
                blocks[(s, t)] = Matrix(F, out)
            action[(A1, A2)] = blocks
    return NdgModule(C, X0.side, value, action)


def _sum_factors(X0: NdgModule, value, A1, A2):
    C = X0.base
    if X0.side == "right":
        return value[A1], C.Hom(A2, A1), value[A2]
    return C.Hom(A1, A2), value[A1], value[A2]


def transport_module(X: NdgModule, g: Dict[str, Dict[int, Matrix]]) -> NdgModule:
    """Module structure moved along degreewise invertible g[A][i] (isomorphic module)."""
    C, F = X.base, X.field
    objs = C.objects

    def G(A, i):
        return g.get(A, {}).get(i, Matrix.identity(F, X.at(A).dim(i)))

    value = {}
    for A in objs:
        V = X.at(A)
        value[A] = NComplex(F, V.space, {i: G(A, i + 1) @ m @ inverse(G(A, i))
                                         for i, m in V.d.items()})
    action = {}
    for (A1, A2), blocks in X.action.items():
        L, R, O = X._factors(A1, A2)
        nb = {}
        for (s, t), m in blocks.items():
            if X.side == "right":
                nb[(s, t)] = G(A2, s + t) @ m @ inverse(G(A1, s)).kron(
                    Matrix.identity(F, R.dim(t)))
            else:
                nb[(s, t)] = G(A2, s + t) @ m @ Matrix.identity(F, L.dim(s)).kron(
                    inverse(G(A1, t)))
        action[(A1, A2)] = nb
    return NdgModule(C, X.side, value, action)


def module_on_k(F, V: NComplex, C: Optional[NdgCategory] = None) -> NdgModule:
    """An N-complex as a (right) module over the one-object category k."""
    from .category import base_category
    C = C or base_category(F)
    (o,) = C.objects
    return NdgModule(C, "right", {o: V},
                     {(o, o): {(s, 0): Matrix.identity(F, n) for s, n in V.dims.items()}})
