"""The eleven acceptance criteria, each run at full size.

Each test records one line that pytest prints in its terminal summary.
"""
import pytest

from ndgtool.suites import run_suite


def _run(log, key, title, suite, N_values, trials, seed=0, only=None, min_cases=None):
    rep = run_suite(suite, N_values, trials, seed)
    checks = [c for c in rep.checks if only is None or only(c.name)]
    failed = [c.name for c in checks if not c.passed]
    cases = sum(c.detail.get("cases", 0) for c in checks)
    Ns = f"{N_values[0]}" if len(N_values) == 1 else f"{N_values[0]}..{N_values[-1]}"
    detail = (f"{len(checks)} checks over N={Ns}, {cases} cases, "
              f"{len(failed)} failing, {rep.seconds:.1f}s")
    log.append((key, title, not failed, detail))
    assert checks
    if min_cases is not None:
        short = [c.name for c in checks if c.detail.get("cases", 0) < min_cases]
        assert not short, f"too few cases in {short}"
    assert not failed, f"failing checks: {failed}; reproducers: {rep.failures[:2]}"
    assert rep.seconds < 120
    return rep


def test_criterion_01_q_identities(acceptance_log):
    _run(acceptance_log, "1", "q-identities over Q(zeta_N) and F_p", "q-identities",
         list(range(2, 9)), 1)


def test_criterion_02_operator_binomial(acceptance_log):
    _run(acceptance_log, "2", "operator q-binomial expansions", "operator-binomial",
         list(range(2, 7)), 100, min_cases=100)


def test_criterion_03_power_formulas(acceptance_log):
    _run(acceptance_log, "3", "hom/tensor nilpotency and power formulas", "leibniz-powers",
         list(range(2, 6)), 100, min_cases=100)


def test_criterion_04_functors(acceptance_log):
    _run(acceptance_log, "4", "suspension, canonical sequences, cones", "functors",
         list(range(2, 6)), 100, min_cases=100)


def test_criterion_05_adjunctions(acceptance_log):
    _run(acceptance_log, "5", "Q_r/U_r adjunctions", "adjunction", list(range(2, 6)), 50,
         min_cases=50)


def test_criterion_06_homotopy(acceptance_log):
    _run(acceptance_log, "6", "null-homotopies and homotopy-category homs", "homotopy",
         list(range(2, 6)), 50)


def test_criterion_07_contraction(acceptance_log):
    _run(acceptance_log, "7", "contraction of acyclic complexes", "contraction",
         list(range(2, 6)), 100, min_cases=100)


def test_criterion_08_hexagon(acceptance_log):
    _run(acceptance_log, "8", "long exact homology sequence of cones", "hexagon",
         list(range(2, 6)), 50, min_cases=50)


def test_criterion_09_category(acceptance_log):
    rep = _run(acceptance_log, "9", "category, Yoneda, tensor-hom adjunction", "category",
               [3], 25)
    alpha = [c for c in rep.checks if c.name.startswith("adjunction_alpha_iso")]
    assert alpha and alpha[0].detail["cases"] == 25


@pytest.mark.xfail(strict=True, reason="the stated right-hand side H^n_(1) X(A) does not "
                   "match; dualizing over k swaps amplitude r with N - r and negates degrees")
def test_criterion_10_dual_generator_as_stated(acceptance_log):
    _run(acceptance_log, "10", "dual generator, stated form H^n_(1) (known mismatch)",
         "dual-generator", [3], 25, only=lambda n: n.startswith("stated"), min_cases=25)


def test_criterion_10b_dual_generator_adjusted(acceptance_log):
    _run(acceptance_log, "10b", "dual generator, adjusted form H^-n_(N-1)",
         "dual-generator", [3], 25, only=lambda n: n.startswith("dual_"), min_cases=25)


def test_criterion_11_n2_regression(acceptance_log):
    _run(acceptance_log, "11", "N=2 against the classical oracle", "n2-regression", [2], 100,
         min_cases=100)
