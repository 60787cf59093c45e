from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from ndgtool.errors import BadRoot, NoPrimitiveRoot, NotAField, OutOfRange
from ndgtool.scalars import (FieldSpec, cyclotomic_field, cyclotomic_polynomial, make_field,
                             prime_field, q_binomial, q_int)

x = sympy.symbols("x")


@pytest.mark.parametrize("n", range(1, 25))
def test_cyclotomic_polynomial_matches_sympy(n):
    expected = sympy.Poly(sympy.cyclotomic_poly(n, x), x).all_coeffs()[::-1]
    assert list(cyclotomic_polynomial(n)) == [int(c) for c in expected]


def _sympy_gaussian(m, l):
    q = sympy.symbols("q")
    num = sympy.prod([1 - q ** (m - i) for i in range(l)])
    den = sympy.prod([1 - q ** (i + 1) for i in range(l)])
    return sympy.Poly(sympy.cancel(num / den), q), q


@pytest.mark.parametrize("N", range(2, 9))
def test_q_binomial_over_cyclotomic_matches_sympy_reduction(N):
    F = cyclotomic_field(N)
    phi = sympy.Poly(sympy.cyclotomic_poly(N, x), x)
    for m in range(N + 1):
        for l in range(m + 1):
            poly, q = _sympy_gaussian(m, l)
            rem = sympy.Poly(poly.as_expr().subs(q, x), x).rem(phi)
            coeffs = [Fraction(int(c)) for c in rem.all_coeffs()[::-1]]
            coeffs += [Fraction(0)] * (F.deg - len(coeffs))
            assert F.eq(q_binomial(F, m, l), F(coeffs)), (m, l)


@pytest.mark.parametrize("p,N", [(7, 3), (7, 6), (13, 4), (11, 5), (29, 7), (17, 8)])
def test_q_binomial_over_prime_field_matches_sympy(p, N):
    F = prime_field(p, N)
    for m in range(N + 1):
        for l in range(m + 1):
            poly, q = _sympy_gaussian(m, l)
            assert q_binomial(F, m, l) == int(poly.eval(F.q)) % p


@pytest.mark.parametrize("p,N", [(7, 2), (7, 3), (7, 6), (13, 4), (11, 5)])
def test_root_is_primitive(p, N):
    F = prime_field(p, N)
    assert pow(F.q, N, p) == 1
    assert all(pow(F.q, k, p) != 1 for k in range(1, N))


def test_quarter_turn_field():
    F = cyclotomic_field(4)
    assert F.eq(F.mul(F.q, F.q), F.neg(F.one))
    assert F.is_zero(q_int(F, 4))


def test_field_errors():
    with pytest.raises(NotAField):
        prime_field(9, 2)
    with pytest.raises(NoPrimitiveRoot):
        prime_field(7, 4)
    with pytest.raises(BadRoot):
        prime_field(7, 3, q=6)           # 6 has order 2
    with pytest.raises(OutOfRange):
        q_binomial(prime_field(7, 3), 4, 1)


def test_spec_round_trip():
    for F in (prime_field(7, 3), cyclotomic_field(5)):
        again = make_field(FieldSpec.from_json(F.spec.to_json()))
        assert again.spec == F.spec


def test_rational_parsing_prime():
    F = prime_field(7, 3)
    assert F("1/2") == 4
    assert F(Fraction(3, 4)) == (3 * 2) % 7
    assert F("-1") == 6


elements = st.lists(st.integers(-5, 5), min_size=2, max_size=2)


@given(st.integers(0, 6), st.integers(0, 6), st.integers(0, 6))
def test_prime_field_axioms(a, b, c):
    F = prime_field(7, 3)
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    if a:
        assert F.mul(a, F.inv(a)) == 1


@given(elements, elements, elements)
def test_cyclotomic_field_axioms(a, b, c):
    F = cyclotomic_field(3)
    a, b, c = F(a), F(b), F(c)
    assert F.eq(F.mul(F.mul(a, b), c), F.mul(a, F.mul(b, c)))
    assert F.eq(F.mul(a, F.add(b, c)), F.add(F.mul(a, b), F.mul(a, c)))
    if not F.is_zero(a):
        assert F.eq(F.mul(a, F.inv(a)), F.one)
