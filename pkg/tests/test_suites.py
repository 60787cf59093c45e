import pytest

from ndgtool import classical
from ndgtool.errors import UnknownSuite
from ndgtool.suites import SUITES, gaussian_polynomial, run_suite, suite_prime


def test_gaussian_polynomial_small():
    assert gaussian_polynomial(2, 1) == [1, 1]
    assert gaussian_polynomial(4, 2) == [1, 1, 2, 1, 1]
    assert sum(gaussian_polynomial(6, 3)) == 20          # q = 1 gives the binomial


def test_suite_prime():
    assert [suite_prime(N) for N in range(2, 9)] == [7, 7, 13, 11, 7, 29, 17]


@pytest.mark.parametrize("name", [n for n in SUITES if n != "dual-generator"])
def test_small_runs_pass(name):
    rep = run_suite(name, trials=2, seed=3)
    assert rep.checks and rep.passed, [c for c in rep.checks if not c.passed]


def test_unknown_suite():
    with pytest.raises(UnknownSuite):
        run_suite("nope")


def test_reports_are_reproducible():
    a = run_suite("functors", [3], trials=4, seed=11)
    b = run_suite("functors", [3], trials=4, seed=11)
    assert [(c.name, c.detail) for c in a.checks] == [(c.name, c.detail) for c in b.checks]


# ---------------------------------------------------------------- classical oracle

def test_classical_betti_and_shift():
    # k --1--> k in degrees 0, 1 plus k in degree 2
    X = classical.ChainComplex(5, {0: 1, 1: 1, 2: 1}, {0: [[1]]})
    assert X.squares_to_zero()
    assert [X.betti(i) for i in range(3)] == [0, 0, 1]
    S = classical.shift(X)
    assert S.betti(1) == 1 and S.d[-1] == [[4]]


def test_classical_cone_of_identity():
    X = classical.ChainComplex(7, {0: 2, 1: 1}, {0: [[1, 3]]})
    ident = {0: [[1, 0], [0, 1]], 1: [[1]]}
    assert classical.is_quasi_iso(X, X, ident)
    zero = {0: [[0, 0], [0, 0]], 1: [[0]]}
    assert not classical.is_quasi_iso(X, X, zero)


def test_classical_rank():
    assert classical.rank_mod([[1, 2], [2, 4]], 7) == 1
    assert classical.rank_mod([[1, 2], [2, 5]], 7) == 2
    assert classical.rank_mod([], 7) == 0
