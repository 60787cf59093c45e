import numpy as np
import pytest
from hypothesis import given, strategies as st

from ndgtool.errors import LeibnizViolation, NdgError
from ndgtool.ncx.core import homology, point
from ndgtool.ncx.tensor import hom_complex
from ndgtool.ndgcat import (action_matrix_failures, adjunction_check, base_category,
                            dual_module, hom_over_category, khom_module, khom_via_dual,
                            leibniz_powers_failures, module_functor, module_hom_complex,
                            module_on_k, object_choice, random_bimodule_instance,
                            random_category, random_module, regular_bimodule, representable,
                            sigma_theta_same, split_sequence_report, tensor_over_category,
                            tensor_representable_check, tensor_shift_check,
                            truncated_polynomial, upper_triangular, validate_bimodule,
                            validate_category, validate_module, yoneda_check)
from ndgtool.random_gen import random_complex
from ndgtool.scalars import prime_field, q_int

F7 = prime_field(7, 3)
seeds = st.integers(0, 2 ** 32 - 1)


def test_base_category_and_representable(f7):
    k = validate_category(base_category(f7))
    R = representable(k, "*")
    assert R.at("*").dims == {0: 1}


def test_truncated_polynomial(f7):
    T = validate_category(truncated_polynomial(f7))
    H = T.Hom("*", "*")
    assert H.dims == {m: 1 for m in range(4)}
    for m in range(3):
        assert H.diff(m).data[0, 0] == q_int(f7, m)
    assert representable(T, "*").at("*").dims == {m: 1 for m in range(4)}
    assert module_hom_complex(representable(T, "*"), representable(T, "*")).space.total_dim() == 4


def test_wrong_differential_rejected(f7):
    with pytest.raises(LeibnizViolation):
        validate_category(truncated_polynomial(f7, d_override={2: 2}))


def test_upper_triangular_valid(f7, rng):
    V, _ = random_complex(f7, rng, max_blocks=2, span=3)
    C = validate_category(upper_triangular(f7, base_category(f7), V))
    assert set(C.objects) == {"a", "b"}
    validate_category(upper_triangular(f7, truncated_polynomial(f7, 2)))


@given(seeds)
def test_random_categories_satisfy_identities(seed):
    rng = np.random.default_rng(seed)
    C = validate_category(random_category(F7, rng))
    assert not leibniz_powers_failures(C)
    assert not action_matrix_failures(C)
    for A in C.objects:
        validate_module(representable(C, A, "right"))
        validate_module(representable(C, A, "left"))


def test_dual_examples(f7, rng):
    k = base_category(f7)
    D = dual_module(representable(k, "*", "left"))
    assert D.at("*").dims == {0: 1}
    T = truncated_polynomial(f7)
    D = dual_module(representable(T, "*", "left"))
    validate_module(D)
    assert D.at("*").dims == {-m: 1 for m in range(4)}


def test_over_k_matches_plain_complexes(f7, rng):
    U, _ = random_complex(f7, rng)
    V, _ = random_complex(f7, rng)
    k = base_category(f7)
    H = module_hom_complex(module_on_k(f7, U, k), module_on_k(f7, V, k))
    assert H.same_data(hom_complex(U, V))
    P = module_on_k(f7, point(f7, 0), k)
    assert khom_module(P, P, 0) == 1


@given(seeds)
def test_yoneda_and_functor_images(seed):
    rng = np.random.default_rng(seed)
    C = random_category(F7, rng)
    X = random_module(C, rng)
    A = object_choice(C, rng)
    assert yoneda_check(X, A).ok
    for which, arg in (("theta", 2), ("q", 1), ("suspend", 0), ("desuspend", 0)):
        validate_module(module_functor(X, which, arg))
    assert sigma_theta_same(X)
    assert all(split_sequence_report(X).values())


def test_khom_of_representable(f7, rng):
    C = random_category(f7, rng)
    A = object_choice(C, rng)
    Y = random_module(C, rng)
    R = representable(C, A)
    for n in range(-3, 4):
        assert khom_module(R, Y, n) == homology(Y.at(A), n, 1).h_dim
        assert khom_module(R, module_functor(Y, "q", 1), n) == 0


@given(seeds)
def test_bimodule_constructions(seed):
    rng = np.random.default_rng(seed)
    C = random_category(F7, rng)
    R = regular_bimodule(C)
    validate_bimodule(R)
    X = random_module(C, rng)
    T = tensor_over_category(X, R)
    H = hom_over_category(R, X)
    validate_module(T)
    validate_module(H)
    for o in C.objects:
        assert T.at(o).dims == X.at(o).dims
        assert H.at(o).space.total_dim() == X.at(o).space.total_dim()
    assert tensor_representable_check(R, object_choice(C, rng)).ok
    assert tensor_shift_check(X, R, 1)


def test_adjunction_alpha(f7):
    rng = np.random.default_rng(3)
    seen = 0
    for _ in range(8):
        X, M, Y = random_bimodule_instance(f7, rng)
        res = adjunction_check(X, M, Y)
        assert res.ok, res
        seen += sum(res.dims_left.values()) > 0
    assert seen


def test_dual_generator_counterexample():
    """k -> k in degrees 0, 1 over N = 3: the hom into the dual sees H^0_(2), not H^0_(1)."""
    from ndgtool.ncx.core import staircase
    F = F7
    k = base_category(F)
    X = module_on_k(F, staircase(F, 0, 2), k)
    rep = khom_via_dual(X, "*", 0)
    assert (rep.lhs, rep.stated, rep.dual) == (1, 0, 1)
    assert not rep.ok and rep.ok_dual
