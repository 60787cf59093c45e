import numpy as np
import pytest
from hypothesis import given, strategies as st
from sympy import GF
from sympy.polys.matrices import DomainMatrix

from ndgtool.linalg import (Matrix, inverse, kernel, rank, solve_linear, subquotient_dim)
from ndgtool.random_gen import random_matrix
from ndgtool.scalars import prime_field


def test_solve_examples(f7):
    I = Matrix.identity(f7, 2)
    b = Matrix.from_rows(f7, [[1], [0]])
    assert solve_linear(I, b) == b
    assert solve_linear(Matrix.zeros(f7, 2, 2), b) is None
    A = Matrix.from_rows(f7, [[1, 1], [0, 0]])
    assert solve_linear(A, Matrix.from_rows(f7, [[3], [0]])) == Matrix.from_rows(f7, [[3], [0]])


def test_subquotient_examples(f7):
    e = Matrix.identity(f7, 2)
    assert subquotient_dim(e, Matrix.zeros(f7, 2, 0)) == 2
    v = Matrix.from_rows(f7, [[1], [2]])
    assert subquotient_dim(v, v) == 0
    assert subquotient_dim(e, Matrix.from_rows(f7, [[1], [1]])) == 1


@given(st.integers(0, 6), st.integers(0, 6), st.integers(0, 2 ** 32 - 1))
def test_rank_kernel_against_sympy(rows, cols, seed):
    F = prime_field(7, 3)
    rng = np.random.default_rng(seed)
    A = random_matrix(F, rows, cols, rng)
    if rng.integers(0, 2) and rows > 1:
        A.data[-1] = A.data[0]                     # force a dependency
    dm = DomainMatrix([[GF(7)(int(v)) for v in row] for row in A.data], (rows, cols), GF(7))
    expected = dm.rank() if rows and cols else 0
    assert rank(A) == expected
    K = kernel(A)
    assert K.cols == cols - expected
    assert (A @ K).is_zero()


def test_kernel_and_inverse_cyclotomic(rng):
    from ndgtool.scalars import cyclotomic_field
    from ndgtool.random_gen import random_invertible
    F = cyclotomic_field(3)
    g = random_invertible(F, 3, rng)
    assert g @ inverse(g) == Matrix.identity(F, 3)
    A = random_matrix(F, 2, 4, rng)
    assert (A @ kernel(A)).is_zero()
