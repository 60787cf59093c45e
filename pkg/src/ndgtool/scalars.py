"""Coefficient fields carrying a primitive N-th root of unity, and q-numbers.

Two kinds of field are supported:

* ``prime``: F_p with N | p - 1; elements are ints in ``[0, p)``.
* ``cyclotomic``: Q(zeta_N) = Q[x]/(Phi_N); elements are :class:`Cyc` residues
  with exact rational coefficients, and the designated root is the class of x.

Every field exposes scalar arithmetic plus a few numpy array helpers used by
:mod:`ndgtool.linalg`.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional

import numpy as np

from .errors import BadRoot, NoPrimitiveRoot, NotAField, OutOfRange


@dataclass(frozen=True)
class FieldSpec:
    kind: str  # "cyclotomic" | "prime"
    N: int
    p: Optional[int] = None
    q_value: Optional[int] = None

    def to_json(self):
        out = {"kind": self.kind, "N": self.N}
        if self.kind == "prime":
            out["p"] = self.p
            if self.q_value is not None:
                out["q"] = str(self.q_value)
        return out

    @classmethod
    def from_json(cls, obj):
        kind = obj["kind"]
        q = obj.get("q")
        return cls(kind=kind, N=int(obj["N"]), p=obj.get("p"),
                   q_value=None if q is None else int(q))


# ---------------------------------------------------------------- polynomials

def _poly_divmod(num, den):
    """Divide integer/rational coefficient lists (lowest degree first)."""
    num = [Fraction(c) for c in num]
    quot = [Fraction(0)] * max(len(num) - len(den) + 1, 1)
    lead = Fraction(den[-1])
    while len(num) >= len(den) and any(num):
        shift = len(num) - len(den)
        c = num[-1] / lead
        quot[shift] = c
        for i, dc in enumerate(den):
            num[shift + i] -= c * dc
        while num and num[-1] == 0:
            num.pop()
    return quot, num


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple:
    """Integer coefficients of Phi_n, lowest degree first."""
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            quot, rem = _poly_divmod(poly, cyclotomic_polynomial(d))
            assert not any(rem)
            poly = quot
    assert all(c.denominator == 1 for c in map(Fraction, poly))
    return tuple(int(c) for c in poly)


def _is_prime(n: int) -> bool:
    from sympy import isprime

    return bool(isprime(n))


def _primitive_root(p: int) -> int:
    from sympy.ntheory import primitive_root

    return int(primitive_root(p))


# ---------------------------------------------------------------- fields

class Field:
    """Common interface; see :class:`PrimeField` and :class:`CyclotomicField`."""

    kind: str
    N: int
    dtype: object

    def root_power(self, e: int):
        """q**e for any integer e (negative powers via q^(N-1))."""
        return self._qpow[e % self.N]

    @property
    def q_inv(self):
        return self._qpow[self.N - 1]

    def pow(self, x, e: int):
        if e < 0:
            x, e = self.inv(x), -e
        out = self.one
        base = x
        while e:
            if e & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            e >>= 1
        return out

    def sum(self, items):
        out = self.zero
        for x in items:
            out = self.add(out, x)
        return out

    # array helpers
    def zeros(self, shape):
        arr = np.empty(shape, dtype=self.dtype)
        arr[...] = self.zero
        return arr

    def eye(self, n):
        arr = self.zeros((n, n))
        for i in range(n):
            arr[i, i] = self.one
        return arr

    def asarray(self, rows):
        rows = [[self(x) for x in row] for row in rows]
        arr = np.empty((len(rows), len(rows[0]) if rows else 0), dtype=self.dtype)
        for i, row in enumerate(rows):
            for j, x in enumerate(row):
                arr[i, j] = x
        return arr

    def _check_root(self, q):
        if not self.is_zero(self.sub(self.pow(q, self.N), self.one)):
            raise BadRoot(f"q^N != 1 for q={self.format(q)}")
        for l in range(1, self.N):
            if self.is_zero(self.sub(self.pow(q, l), self.one)):
                raise BadRoot(f"q^{l} = 1 for q={self.format(q)}; root is not primitive")

    def _init_powers(self):
        self._qpow = [self.pow(self.q, e) for e in range(self.N)]

    def compatible(self, other: "Field") -> bool:
        """Same underlying field (the designated root may differ)."""
        return self.base_key == other.base_key

    def __repr__(self):
        return f"<{type(self).__name__} {self.base_key} q={self.format(self.q)}>"


class PrimeField(Field):
    kind = "prime"

    def __init__(self, p: int, N: int, q: int):
        self.p = p
        self.N = N
        self.dtype = np.int64 if p < (1 << 25) else object
        self.zero = 0
        self.one = 1
        self.q = q % p
        self._check_root(self.q)
        self._init_powers()

    @property
    def base_key(self):
        return ("prime", self.p)

    @property
    def spec(self):
        return FieldSpec("prime", self.N, self.p, self.q)

    def with_root(self, q) -> "PrimeField":
        return PrimeField(self.p, self.N, int(q))

    def __call__(self, x):
        if isinstance(x, str):
            x = Fraction(x)
        if isinstance(x, Fraction):
            return (x.numerator * pow(x.denominator, -1, self.p)) % self.p
        return int(x) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        a = int(a) % self.p
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def is_zero(self, a):
        return int(a) % self.p == 0

    def eq(self, a, b):
        return (int(a) - int(b)) % self.p == 0

    def format(self, a):
        return str(int(a) % self.p)

    def reduce(self, arr):
        return arr % self.p

    def nonzero_mask(self, arr):
        return arr != 0

    def scale(self, arr, c):
        return (arr * int(c)) % self.p


class Cyc:
    """Residue class in Q[x]/(Phi_N); ``c`` holds the rational coefficients."""

    __slots__ = ("c", "F")

    def __init__(self, coeffs, F: "CyclotomicField"):
        self.c = tuple(coeffs)
        self.F = F

    def _coerce(self, other):
        if isinstance(other, Cyc):
            return other
        return self.F(other)

    def __add__(self, other):
        o = self._coerce(other)
        return Cyc([a + b for a, b in zip(self.c, o.c)], self.F)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return Cyc([a - b for a, b in zip(self.c, o.c)], self.F)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __neg__(self):
        return Cyc([-a for a in self.c], self.F)

    def __mul__(self, other):
        return self.F.mul(self, self._coerce(other))

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, (Cyc, int, Fraction)):
            return self.c == self._coerce(other).c
        return NotImplemented

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __hash__(self):
        return hash(self.c)

    def __bool__(self):
        return any(self.c)

    def __repr__(self):
        return f"Cyc({self.F.format(self)})"


class CyclotomicField(Field):
    kind = "cyclotomic"

    def __init__(self, N: int, q_coeffs=None):
        self.N = N
        self.phi = cyclotomic_polynomial(N)
        self.deg = len(self.phi) - 1
        self.dtype = object
        # x^k mod Phi_N for k < 2*deg, used by multiplication
        self._red = []
        for k in range(2 * self.deg):
            coeffs = [0] * (k + 1)
            coeffs[k] = 1
            _, rem = _poly_divmod(coeffs, self.phi)
            rem = list(rem) + [Fraction(0)] * (self.deg - len(rem))
            self._red.append(tuple(Fraction(c) for c in rem))
        self.zero = Cyc([Fraction(0)] * self.deg, self)
        self.one = self._const(1)
        if q_coeffs is None:
            self.q = Cyc(self._red[1], self)
        else:
            self.q = q_coeffs if isinstance(q_coeffs, Cyc) else Cyc(
                [Fraction(c) for c in q_coeffs], self)
        self._check_root(self.q)
        self._init_powers()

    @property
    def base_key(self):
        return ("cyclotomic", self.N)

    @property
    def spec(self):
        return FieldSpec("cyclotomic", self.N)

    def with_root(self, q) -> "CyclotomicField":
        return CyclotomicField(self.N, q)

    def _const(self, x):
        return Cyc([Fraction(x)] + [Fraction(0)] * (self.deg - 1), self)

    def __call__(self, x):
        if isinstance(x, Cyc):
            return x
        if isinstance(x, (list, tuple)):
            if len(x) != self.deg:
                raise ValueError(f"expected {self.deg} coefficients, got {len(x)}")
            return Cyc([Fraction(c) for c in x], self)
        if isinstance(x, str):
            return self._const(Fraction(x))
        return self._const(x)

    def add(self, a, b):
        return self(a) + self(b)

    def sub(self, a, b):
        return self(a) - self(b)

    def neg(self, a):
        return -self(a)

    def mul(self, a, b):
        a, b = self(a), self(b)
        out = [Fraction(0)] * self.deg
        for i, x in enumerate(a.c):
            if not x:
                continue
            for j, y in enumerate(b.c):
                if not y:
                    continue
                xy = x * y
                for k, r in enumerate(self._red[i + j]):
                    if r:
                        out[k] += xy * r
        return Cyc(out, self)

    def inv(self, a):
        a = self(a)
        if not a:
            raise ZeroDivisionError("inverse of zero")
        # solve (multiplication by a) c = 1 over Q
        n = self.deg
        cols = [self.mul(a, Cyc(self._red[j], self)).c for j in range(n)]
        aug = [[cols[j][i] for j in range(n)] + [Fraction(int(i == 0))] for i in range(n)]
        for col in range(n):
            piv = next(r for r in range(col, n) if aug[r][col] != 0)
            aug[col], aug[piv] = aug[piv], aug[col]
            pv = aug[col][col]
            aug[col] = [v / pv for v in aug[col]]
            for r in range(n):
                if r != col and aug[r][col] != 0:
                    f = aug[r][col]
                    aug[r] = [v - f * w for v, w in zip(aug[r], aug[col])]
        return Cyc([aug[i][n] for i in range(n)], self)

    def is_zero(self, a):
        return not self(a)

    def eq(self, a, b):
        return self(a).c == self(b).c

    def format(self, a):
        return [str(c) for c in self(a).c]

    def reduce(self, arr):
        return arr

    def nonzero_mask(self, arr):
        return arr != 0

    def scale(self, arr, c):
        return arr * self(c)


def make_field(spec: FieldSpec) -> Field:
    if spec.N < 2:
        raise ValueError("N must be at least 2")
    if spec.kind == "cyclotomic":
        return CyclotomicField(spec.N)
    if spec.kind != "prime":
        raise ValueError(f"unknown field kind {spec.kind!r}")
    p = spec.p
    if p is None or p < 2 or not _is_prime(p):
        raise NotAField(f"p={p} is not prime")
    if (p - 1) % spec.N:
        raise NoPrimitiveRoot(f"N={spec.N} does not divide p-1={p - 1}")
    if spec.q_value is not None:
        return PrimeField(p, spec.N, spec.q_value)
    g = _primitive_root(p)
    return PrimeField(p, spec.N, pow(g, (p - 1) // spec.N, p))


def prime_field(p: int, N: int, q: Optional[int] = None) -> PrimeField:
    return make_field(FieldSpec("prime", N, p, q))


def cyclotomic_field(N: int) -> CyclotomicField:
    return make_field(FieldSpec("cyclotomic", N))


# ---------------------------------------------------------------- q-numbers

def q_int(F: Field, m: int, root=None):
    """[m] = 1 + q + ... + q^(m-1)."""
    if m < 0 or m > F.N:
        raise OutOfRange(f"q-integer [{m}] is defined for 0 <= m <= N={F.N}")
    q = F.q if root is None else root
    out, term = F.zero, F.one
    for _ in range(m):
        out = F.add(out, term)
        term = F.mul(term, q)
    return out


def q_factorial(F: Field, m: int, root=None):
    out = F.one
    for j in range(1, m + 1):
        out = F.mul(out, q_int(F, j, root))
    return out


def q_binomial(F: Field, m: int, l: int, root=None):
    """Gaussian binomial [m choose l] with the conventions [N N] = [N 0] = 1."""
    if not (0 <= l <= m <= F.N):
        raise OutOfRange(f"q-binomial [{m} {l}] needs 0 <= l <= m <= N={F.N}")
    if l == 0 or l == m:
        return F.one
    if m == F.N:
        return F.zero
    key = (m, l, None if root is None else F.format(root).__repr__())
    cache = F.__dict__.setdefault("_binomials", {})
    if key in cache:
        return cache[key]
    den = F.mul(q_factorial(F, l, root), q_factorial(F, m - l, root))
    cache[key] = F.mul(q_factorial(F, m, root), F.inv(den))
    return cache[key]
