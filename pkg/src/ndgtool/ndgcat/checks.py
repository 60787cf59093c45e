"""Identity checks on categories and modules: iterated Leibniz, action matrices,
module maps, and the split sequences built objectwise."""
from __future__ import annotations

from typing import Dict, List

from ..linalg import Matrix
from ..ncx.core import GradedMap, is_acyclic
from ..ncx.functors import canonical_maps
from ..scalars import q_binomial
from .category import NdgCategory
from .modules import ActionMatrix, NdgModule, action_matrix_product, module_functor


def _basis(F, n, k) -> Matrix:
    return Matrix(F, F.eye(n)[:, [k]])


def leibniz_powers_failures(C: NdgCategory, limit: int = 5) -> List[tuple]:
    """d^n(fg) = sum_l q^(lr) [n l] d^(n-l)(f) d^l(g) for f of degree r, 1 <= n <= N."""
    F, N = C.field, C.N
    out = []
    objs = C.objects
    for A in objs:
        for B in objs:
            for Cc in objs:
                Hf, Hg, Hfg = C.Hom(B, Cc), C.Hom(A, B), C.Hom(A, Cc)
                if not Hfg.space.total_dim():
                    continue
                for r in Hf.support:
                    for s in Hg.support:
                        for i in range(Hf.dim(r)):
                            for j in range(Hg.dim(s)):
                                f, g = _basis(F, Hf.dim(r), i), _basis(F, Hg.dim(s), j)
                                fg = C.compose_elements(A, B, Cc, f, r, g, s)
                                for n in range(1, N + 1):
                                    lhs = Hfg.d_power(r + s, n) @ fg
                                    rhs = Matrix.zeros(F, Hfg.dim(r + s + n), 1)
                                    for l in range(n + 1):
                                        c = F.mul(F.root_power(l * r), q_binomial(F, n, l))
                                        df = Hf.d_power(r, n - l) @ f
                                        dg = Hg.d_power(s, l) @ g
                                        term = C.compose_elements(A, B, Cc, df, r + n - l,
                                                                  dg, s + l)
                                        rhs = rhs + term.scale(c)
                                    if not (lhs - rhs).is_zero():
                                        out.append((A, B, Cc, r, s, i, j, n))
                                        if len(out) >= limit:
                                            return out
    return out


def action_matrix_failures(C: NdgCategory, n_values=(0, 1, -1)) -> List[tuple]:
    """For basis elements a: (a^n) tJ = tJ (a^(n+1)) + q^n (d(a)^n) at size N, and
    (a^n)(b^(n+m)) = ((ab)^n) for composable basis pairs, a of degree m."""
    F, N = C.field, C.N
    bad = []
    objs = C.objects
    for A1 in objs:
        for A2 in objs:
            H = C.Hom(A2, A1)
            for t0 in H.support:
                for k in range(H.dim(t0)):
                    a = _basis(F, H.dim(t0), k)
                    da = H.diff(t0) @ a if H.dim(t0 + 1) else Matrix.zeros(F, 0, 1)
                    for n in n_values:
                        P = ActionMatrix(C, A2, A1, a, t0, n, N)
                        Q = ActionMatrix(C, A2, A1, a, t0, n + 1, N)
                        D = ActionMatrix(C, A2, A1, da, t0 + 1, n, N) if H.dim(t0 + 1) else None
                        for s in range(N):
                            for t in range(N):
                                # (P tJ)_(s,t) = P_(s,t+1); (tJ Q)_(s,t) = Q_(s-1,t)
                                lhs = _entry(P, s, t + 1, H, t0 + t + 1 - s)
                                rhs = _entry(Q, s - 1, t, H, t0 + t + 1 - s)
                                if D is not None:
                                    rhs = rhs + _entry(D, s, t, H, t0 + t + 1 - s).scale(
                                        F.root_power(n))
                                if lhs.rows and not (lhs - rhs).is_zero():
                                    bad.append(("shift", A1, A2, t0, k, n, s, t))
    for A in objs:
        for B in objs:
            for Cc in objs:
                Ha, Hb, Hab = C.Hom(B, Cc), C.Hom(A, B), C.Hom(A, Cc)
                if not Hab.space.total_dim():
                    continue
                for m in Ha.support:
                    for u in Hb.support:
                        for i in range(Ha.dim(m)):
                            for j in range(Hb.dim(u)):
                                a, b = _basis(F, Ha.dim(m), i), _basis(F, Hb.dim(u), j)
                                ab = C.compose_elements(A, B, Cc, a, m, b, u)
                                for n in n_values:
                                    P = ActionMatrix(C, B, Cc, a, m, n, N)
                                    Q = ActionMatrix(C, A, B, b, u, n + m, N)
                                    R = ActionMatrix(C, A, Cc, ab, m + u, n, N)
                                    prod = action_matrix_product(C, P, Q, A, B, Cc)
                                    for s in range(N):
                                        for t in range(s, N):
                                            deg, v = prod[s][t]
                                            if not (v - R.entry(s, t)[1]).is_zero():
                                                bad.append(("product", A, B, Cc, i, j, n, s, t))
    return bad


def _entry(P: ActionMatrix, s, t, H, deg) -> Matrix:
    F = P.field
    if 0 <= s < P.size and 0 <= t < P.size and P.entries[s][t] is not None:
        d, v = P.entries[s][t]
        return v
    return Matrix.zeros(F, H.dim(deg), 1)


def module_map_failures(f: Dict[str, GradedMap], S: NdgModule, T: NdgModule) -> List[tuple]:
    """Degree-0 families with f(x a) = f(x) a, checked blockwise."""
    C, F = S.base, S.field
    bad = []
    for A1 in C.objects:
        for A2 in C.objects:
            H = C.Hom(A2, A1)
            for s in S.at(A1).support:
                for t in H.support:
                    lhs = f[A2].comp(s + t) @ S.act_block(A1, A2, s, t)
                    rhs = T.act_block(A1, A2, s, t) @ \
                        f[A1].comp(s).kron(Matrix.identity(F, H.dim(t)))
                    if not (lhs - rhs).is_zero():
                        bad.append((A1, A2, s, t))
    return bad


def split_sequence_report(X: NdgModule) -> Dict[str, bool]:
    """Both canonical sequences built objectwise: chain maps, module maps, exact."""
    C, N = X.base, X.field.N
    mods = {"Q0": module_functor(X, "q", 0), "QN1": module_functor(X, "q", N - 1),
            "susp": module_functor(X, "suspend"), "desusp": module_functor(X, "desuspend"),
            "X": X}
    cm = {A: canonical_maps(X.at(A)) for A in C.objects}
    out = {}
    for name, s, t in (("pi", "Q0", "X"), ("eps", "desusp", "Q0"),
                       ("eta", "X", "QN1"), ("delta", "QN1", "susp")):
        fam = {A: cm[A][name] for A in C.objects}
        out[f"{name}_chain"] = all(g.is_chain_map() for g in fam.values())
        out[f"{name}_module"] = not module_map_failures(fam, mods[s], mods[t])
    exact = True
    for A in C.objects:
        c = cm[A]
        for first, second in (("eps", "pi"), ("eta", "delta")):
            f, g = c[first], c[second]
            for m in set(f.source.support) | set(f.target.support) | set(g.target.support):
                fm, gm = f.comp(m), g.comp(m)
                # injective, surjective, and dim ker g = rank f with g f = 0
                if fm.rank() != fm.cols or gm.rank() != gm.rows:
                    exact = False
                elif not (gm @ fm).is_zero() or fm.cols + gm.rows != fm.rows:
                    exact = False
    out["exact"] = exact
    return out


def sigma_theta_same(X: NdgModule) -> bool:
    """Sigma X and Sigma^-1 theta^N X as identical module data."""
    N = X.field.N
    lhs = module_functor(X, "suspend")
    rhs = module_functor(module_functor(X, "theta", N), "desuspend")
    for A in X.base.objects:
        if not lhs.at(A).same_data(rhs.at(A)):
            return False
    for key in set(lhs.action) | set(rhs.action):
        lb, rb = lhs.action.get(key, {}), rhs.action.get(key, {})
        keys = {k for k in set(lb) | set(rb)
                if not (lb.get(k) is None and rb.get(k).is_zero())
                and not (rb.get(k) is None and lb.get(k).is_zero())}
        for k in keys:
            if k not in lb or k not in rb or not (lb[k] == rb[k]):
                return False
    return True
