import numpy as np
import pytest
from hypothesis import given, strategies as st

from ndgtool.errors import NotAcyclic, NotChainMap, NotNDifferential
from ndgtool.linalg import Matrix
from ndgtool.ncx.contraction import contract_acyclic
from ndgtool.ncx.core import (GradedMap, GradedSpace, NComplex, check_nilpotent, direct_sum,
                              homology, is_acyclic, point, staircase, validate_ncomplex)
from ndgtool.ncx.functors import canonical_maps, desuspend, q_functor, suspend, theta_shift, \
    u_functor
from ndgtool.ncx.homotopy import apply_homotopy, is_quasi_iso, khom_dim, khom_dim_direct, \
    null_homotopy
from ndgtool.ncx.tensor import (associator, braiding_iso, hom_complex, tensor_blocks,
                                tensor_complex)
from ndgtool.ncx.triangles import cone, hexagon_report
from ndgtool.random_gen import block_complex, random_chain_map, random_complex, scramble
from ndgtool.scalars import prime_field


def one(F):
    return Matrix.identity(F, 1)


# ---------------------------------------------------------------- construction

def test_zero_differential_is_valid(f7):
    X = validate_ncomplex(f7, {0: 2, 1: 3}, {})
    assert X.dims == {0: 2, 1: 3}


def test_identity_staircase_n3_valid(f7):
    X = validate_ncomplex(f7, {0: 1, 1: 1, 2: 1}, {0: one(f7), 1: one(f7)})
    assert X.d_power(0, 2) == one(f7)
    assert X.d_power(0, 0) == one(f7)
    assert X.d_power(0, 3).shape == (0, 1)


def test_n2_three_identities_rejected():
    F = prime_field(5, 2)
    with pytest.raises(NotNDifferential) as err:
        validate_ncomplex(F, {0: 1, 1: 1, 2: 1}, {0: one(F), 1: one(F)})
    assert err.value.degree == 0


# ---------------------------------------------------------------- homology

def test_homology_of_zero_differential(f7):
    X = NComplex(f7, {0: 2, 1: 1})
    for i in (0, 1):
        for r in (1, 2):
            assert homology(X, i, r).h_dim == X.dim(i)


def test_standard_block_is_acyclic(f7):
    J = staircase(f7, 0, 3)
    assert all(homology(J, i, r).h_dim == 0 for i in range(-1, 4) for r in (1, 2))
    assert is_acyclic(J, all_r=True)
    assert is_acyclic(direct_sum(f7, [J, staircase(f7, 1, 3)]))
    assert not is_acyclic(point(f7, 0))


def test_point_homology(f7):
    P = point(f7, 0)
    assert [homology(P, 0, r).h_dim for r in (1, 2)] == [1, 1]
    assert homology(P, 1, 1).h_dim == 0


@given(st.integers(2, 5), st.integers(0, 2 ** 32 - 1))
def test_homology_matches_block_count(N, seed):
    """A length-l block starting at s contributes to H^i_(r) iff ..."""
    F = prime_field({2: 7, 3: 7, 4: 13, 5: 11}[N], N)
    rng = np.random.default_rng(seed)
    X, blocks = random_complex(F, rng, lo=-1)
    for i in range(-2, 2 * N):
        for r in range(1, N):
            # basis vector at position j of a block (s, l) survives in H^i_(r) when it
            # is killed by d^r (j >= l - r) and not hit by d^(N-r) (j < N - r)
            expected = sum(1 for s, l in blocks if 0 <= i - s < l
                           and i - s >= l - r and i - s < N - r)
            assert homology(X, i, r).h_dim == expected


# ---------------------------------------------------------------- hom and tensor

def test_hom_from_unit_is_target(f7, rng):
    V, _ = random_complex(f7, rng)
    H = hom_complex(point(f7, 0), V)
    assert H.same_data(V)


def test_second_hom_power_n3(f7, rng):
    U, _ = random_complex(f7, rng)
    V, _ = random_complex(f7, rng)
    H = hom_complex(U, V)
    q = f7.q
    from ndgtool.ncx.tensor import map_to_vector, vector_to_map
    from ndgtool.random_gen import random_hom_element
    f = random_hom_element(U, V, 1, rng)
    d2f = vector_to_map(H.d_power(1, 2) @ map_to_vector(f, U, V), U, V, 3)
    c = f7.add(q, f7.mul(q, q))
    for i in U.support:
        expected = (V.d_power(i + 1, 2) @ f.comp(i)
                    - (V.diff(i + 2) @ f.comp(i + 1) @ U.diff(i)).scale(c)
                    + f.comp(i + 2) @ U.d_power(i, 2))
        assert d2f.comp(i) == expected


def test_tensor_with_unit(f7, rng):
    U, _ = random_complex(f7, rng)
    assert tensor_complex(U, point(f7, 0)).same_data(U)


def test_associator_is_chain_iso(f7, rng):
    U, V, W = (random_complex(f7, rng, max_blocks=2)[0] for _ in range(3))
    a = associator(U, V, W)
    assert a.is_chain_map() and a.is_iso()


def test_braiding_round_trip_and_chain(f7, rng):
    U, _ = random_complex(f7, rng)
    V, _ = random_complex(f7, rng)
    b = braiding_iso(U, V)
    assert b.is_chain_map()
    back = braiding_iso(V, U, root=f7.inv(f7.q))
    assert back @ b == tensor_complex(U, V).identity()


def test_braiding_n2_sign():
    F = prime_field(5, 2)
    U = NComplex(F, {1: 1})
    b = braiding_iso(U, U)
    assert b.comp(2).data[0, 0] == F.neg(F.one)


def _braiding_with_exponent(U, V, sign):
    F = U.field
    src = tensor_complex(U, V)
    tgt = tensor_complex(V, U, root=F.inv(F.q))
    comps = {}
    for i in src.support:
        out = F.zeros((tgt.dim(i), src.dim(i)))
        t_off = {t: off for t, off, _ in tensor_blocks([V.dims, U.dims], i)}
        for (r, s), off, _ in tensor_blocks([U.dims, V.dims], i):
            for a in range(U.dim(r)):
                for b in range(V.dim(s)):
                    out[t_off[(s, r)] + b * U.dim(r) + a, off + a * V.dim(s) + b] = \
                        F.root_power(sign * r * s)
        comps[i] = Matrix(F, out)
    return GradedMap(src, tgt, 0, comps)


def test_positive_exponent_braiding_is_not_a_chain_map(f7):
    U = staircase(f7, 1, 2)
    V = staircase(f7, 1, 2)
    assert not _braiding_with_exponent(U, V, +1).is_chain_map()
    assert _braiding_with_exponent(U, V, -1).is_chain_map()


# ---------------------------------------------------------------- functors

def test_theta_examples(f7, rng):
    X, _ = random_complex(f7, rng)
    assert theta_shift(X, 0).same_data(X)
    T3 = theta_shift(X, 3)
    assert T3.dims == {i - 3: n for i, n in X.dims.items()}
    J = theta_shift(staircase(f7, 0, 3), 1)
    assert all(m == Matrix.from_rows(f7, [[4]]) for m in J.d.values())


def test_q_functor_of_point(f7):
    Q = q_functor(0, GradedSpace({0: 1}), f7)
    assert Q.dims == {0: 1, 1: 1, 2: 1}
    assert Q.same_data(staircase(f7, 0, 3))
    assert u_functor(0, Q) == Q.space


@given(st.integers(0, 2), st.integers(0, 2 ** 32 - 1))
def test_q_functor_acyclic(r, seed):
    F = prime_field(7, 3)
    from ndgtool.random_gen import random_graded_space
    M = random_graded_space(np.random.default_rng(seed))
    assert is_acyclic(q_functor(r, M, F), all_r=True)


def test_eta_of_point_n2():
    F = prime_field(5, 2)
    c = canonical_maps(point(F, 0))
    # (Q_1 U_0 X)^0 = X^0 + X^1 = k + 0, so (1, d)^T keeps only its first entry
    assert c["QN1"].dims == {-1: 1, 0: 1}
    assert c["eta"].comp(0) == Matrix.from_rows(F, [[1]])


def test_suspension_of_point(f7):
    S = suspend(point(f7, 0))
    assert S.dims == {-2: 1, -1: 1}
    assert S.diff(-2) == one(f7)
    assert homology(S, -1, 1).h_dim == homology(point(f7, 0), 0, 2).h_dim == 1
    assert S.same_data(desuspend(theta_shift(point(f7, 0), 3)))


def test_delta_block_pattern(f7, rng):
    X, _ = random_complex(f7, rng)
    c = canonical_maps(X)
    assert c["delta"].is_chain_map() and c["eps"].is_chain_map()
    for m in c["QN1"].support:
        assert (c["delta"].comp(m) @ c["eta"].comp(m)).is_zero() if X.dim(m) else True


# ---------------------------------------------------------------- homotopy

def test_null_homotopy_examples(f7):
    J = staircase(f7, 0, 3)
    S = null_homotopy(J.identity())
    assert S is not None and apply_homotopy(S) == J.identity()
    assert S.comp(2) == one(f7)
    assert null_homotopy(J.zero_map(J)) is not None
    assert null_homotopy(point(f7, 0).identity()) is None


def test_null_homotopy_needs_chain_map(f7):
    J = staircase(f7, 0, 3)
    bad = GradedMap(J, J, 0, {0: one(f7)})
    with pytest.raises(NotChainMap):
        null_homotopy(bad)


def test_khom_examples(f7, rng):
    P = point(f7, 0)
    assert khom_dim(P, P, 0) == 1
    X, _ = random_complex(f7, rng)
    J = staircase(f7, -1, 3)
    for n in range(-3, 4):
        assert khom_dim(X, J, n) == 0
        for flavor in ("susp0", "susp1"):
            assert khom_dim(X, P, n, flavor) == khom_dim_direct(X, P, n, flavor)


def test_quasi_iso_examples(f7, rng):
    X, _ = random_complex(f7, rng)
    assert is_quasi_iso(X.identity())
    Xs, g = scramble(X, rng)
    assert is_quasi_iso(g, all_r=True)
    P = point(f7, 0)
    incl = canonical_maps(P)["eta"]          # k -> contractible block
    assert not is_quasi_iso(incl)


# ---------------------------------------------------------------- cones and contraction

def test_cone_dimensions(f7, rng):
    X, _ = random_complex(f7, rng)
    Y, _ = random_complex(f7, rng)
    f = random_chain_map(X, Y, rng)
    T = cone(f)
    for m in range(-6, 8):
        assert T.Z.dim(m) == Y.dim(m) + sum(X.dim(i) for i in range(m + 1, m + 3))
    assert all(e.exact for e in hexagon_report(T))


def test_cone_of_identity_and_zero(f7, rng):
    X, _ = random_complex(f7, rng)
    assert is_acyclic(cone(X.identity()).Z, all_r=True)
    Y, _ = random_complex(f7, rng)
    assert all(e.exact for e in hexagon_report(cone(X.zero_map(Y))))


def test_contraction_examples(f7, rng):
    J = staircase(f7, 0, 3)
    c = contract_acyclic(J)
    assert c.blocks == [(0, 3)]
    assert c.basis_change == J.identity()
    X, g = scramble(block_complex(f7, [(0, 3), (1, 3)]), rng)
    c = contract_acyclic(X)
    assert sorted(c.blocks) == [(0, 3), (1, 3)]
    with pytest.raises(NotAcyclic):
        contract_acyclic(point(f7, 0))
