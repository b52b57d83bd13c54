"""Exact arithmetic in cyclotomic fields Q(zeta_N) and in Q(zeta_N)[F].

Elements of Q(zeta_N) are stored as coefficient vectors of length phi(N)
in the power basis 1, z, ..., z^(phi(N)-1), reduced modulo the N-th
cyclotomic polynomial, so equality is plain tuple equality.  Rationals are
``fractions.Fraction`` throughout; no floating point is ever used.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from math import gcd
from numbers import Rational

__all__ = [
    "Cyclotomic",
    "FPoly",
    "cyclotomic_polynomial",
    "root_of_unity",
    "cyc_arith",
    "fpoly_eval",
    "as_cyclotomic",
    "parse_cyclotomic",
    "scalar_str",
]


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients (low degree first) of the n-th cyclotomic polynomial."""
    if n < 1:
        raise ValueError("order must be positive")
    # x^n - 1 divided by Phi_d for every proper divisor d
    num = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d:
            continue
        den = cyclotomic_polynomial(d)
        num = _exact_divide(num, list(den))
    return tuple(num)


def _exact_divide(num: list[int], den: list[int]) -> list[int]:
    num = list(num)
    dn = len(den) - 1
    out = [0] * (len(num) - dn)
    for k in range(len(out) - 1, -1, -1):
        q = num[k + dn]  # den is monic
        out[k] = q
        if q:
            for j, c in enumerate(den):
                num[k + j] -= q * c
    assert not any(num[:dn]), "non-exact cyclotomic division"
    return out


def _reduce(poly: list, n: int) -> tuple:
    """Reduce a coefficient list modulo Phi_n (monic) and pad to phi(n)."""
    phi = cyclotomic_polynomial(n)
    d = len(phi) - 1
    poly = list(poly)
    for k in range(len(poly) - 1, d - 1, -1):
        c = poly[k]
        if c:
            base = k - d
            for j in range(d):
                if phi[j]:
                    poly[base + j] -= c * phi[j]
        poly[k] = 0
    poly = poly[:d] + [0] * (d - len(poly))
    return tuple(Fraction(c) for c in poly)


@lru_cache(maxsize=None)
def _embedding(n: int, m: int) -> tuple[tuple, ...]:
    """Images of z_n^k (k < phi(n)) inside Q(zeta_m), for n | m."""
    step = m // n
    d = len(cyclotomic_polynomial(n)) - 1
    rows = []
    for k in range(d):
        poly = [0] * (k * step + 1)
        poly[k * step] = 1
        rows.append(_reduce(poly, m))
    return tuple(rows)


class Cyclotomic:
    """An element of Q(zeta_N), immutable.

    ``Cyclotomic(n, coeffs)`` interprets ``coeffs[k]`` as the coefficient of
    zeta_n^k; the vector may be longer than phi(n) and is reduced.
    """

    __slots__ = ("n", "c")

    def __init__(self, n: int, coeffs=()):
        if n < 1:
            raise ValueError("order must be positive")
        self.n = n
        self.c = _reduce(list(coeffs), n)

    @classmethod
    def _raw(cls, n: int, c: tuple) -> "Cyclotomic":
        obj = object.__new__(cls)
        obj.n = n
        obj.c = c
        return obj

    @classmethod
    def rational(cls, q, n: int = 1) -> "Cyclotomic":
        d = len(cyclotomic_polynomial(n)) - 1
        return cls._raw(n, (Fraction(q),) + (Fraction(0),) * (d - 1))

    # -- structure -------------------------------------------------------
    def is_rational(self) -> bool:
        return not any(self.c[1:])

    def is_zero(self) -> bool:
        return not any(self.c)

    def __bool__(self) -> bool:
        return any(self.c)

    def to_order(self, m: int) -> "Cyclotomic":
        """The same number viewed inside Q(zeta_m); requires n | m."""
        if m == self.n:
            return self
        if m % self.n:
            raise ValueError(f"Q(zeta_{self.n}) does not embed in Q(zeta_{m})")
        emb = _embedding(self.n, m)
        d = len(cyclotomic_polynomial(m)) - 1
        out = [Fraction(0)] * d
        for a, row in zip(self.c, emb):
            if a:
                for j, r in enumerate(row):
                    if r:
                        out[j] += a * r
        return Cyclotomic._raw(m, tuple(out))

    def _coerce(self, other):
        if isinstance(other, Cyclotomic):
            if other.n == self.n:
                return self, other
            m = _lcm(self.n, other.n)
            return self.to_order(m), other.to_order(m)
        if isinstance(other, (int, Rational)):
            return self, Cyclotomic.rational(other, self.n)
        return None, None

    # -- arithmetic ------------------------------------------------------
    def __add__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        return Cyclotomic._raw(a.n, tuple(x + y for x, y in zip(a.c, b.c)))

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic._raw(self.n, tuple(-x for x in self.c))

    def __sub__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        return Cyclotomic._raw(a.n, tuple(x - y for x, y in zip(a.c, b.c)))

    def __rsub__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        return Cyclotomic._raw(a.n, tuple(y - x for x, y in zip(a.c, b.c)))

    def __mul__(self, other):
        if isinstance(other, (int, Rational)):
            q = Fraction(other)
            return Cyclotomic._raw(self.n, tuple(x * q for x in self.c))
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        if b.is_rational():
            q = b.c[0]
            return Cyclotomic._raw(a.n, tuple(x * q for x in a.c))
        if a.is_rational():
            q = a.c[0]
            return Cyclotomic._raw(a.n, tuple(x * q for x in b.c))
        prod = [Fraction(0)] * (2 * len(a.c) - 1)
        for i, x in enumerate(a.c):
            if x:
                for j, y in enumerate(b.c):
                    if y:
                        prod[i + j] += x * y
        return Cyclotomic._raw(a.n, _reduce(prod, a.n))

    __rmul__ = __mul__

    def inverse(self) -> "Cyclotomic":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        if self.is_rational():
            return Cyclotomic.rational(1 / self.c[0], self.n)
        phi = [Fraction(c) for c in cyclotomic_polynomial(self.n)]
        inv = _poly_inverse_mod(list(self.c), phi)
        return Cyclotomic(self.n, inv)

    def __truediv__(self, other):
        if isinstance(other, (int, Rational)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return self * (1 / Fraction(other))
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        return a * b.inverse()

    def __rtruediv__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        return b * a.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = Cyclotomic.rational(1, self.n)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- comparison ------------------------------------------------------
    def __eq__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        return a.c == b.c

    def __hash__(self):
        if self.is_rational():
            return hash(self.c[0])
        return hash((self.n, self.c))

    def __repr__(self):
        return f"Cyclotomic({self.n}, {scalar_str(self)!r})"

    def __str__(self):
        return scalar_str(self)


def _poly_trim(p: list) -> list:
    while p and not p[-1]:
        p.pop()
    return p


def _poly_divmod(a: list, b: list):
    a = _poly_trim(list(a))
    b = _poly_trim(list(b))
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    lb = b[-1]
    while len(a) >= len(b) and a:
        shift = len(a) - len(b)
        coef = a[-1] / lb
        q[shift] = coef
        for j, c in enumerate(b):
            a[shift + j] -= coef * c
        _poly_trim(a)
    return q, a


def _poly_mul(a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_sub(a: list, b: list) -> list:
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)]


def _poly_inverse_mod(a: list, m: list) -> list:
    # extended Euclid: s*a + t*m = gcd, gcd is a nonzero constant since m is irreducible
    r0, r1 = _poly_trim(list(m)), _poly_trim(list(a))
    s0, s1 = [], [Fraction(1)]
    while len(r1) > 1:
        q, r = _poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _poly_trim(_poly_sub(s0, _poly_mul(q, s1)))
    if not r1:
        raise ZeroDivisionError("element is not invertible")
    c = r1[0]
    return [x / c for x in s1]


def root_of_unity(k: int, n: int) -> Cyclotomic:
    """zeta_n^k in canonical form."""
    if n < 1:
        raise ValueError("N must be >= 1")
    k %= n
    poly = [0] * (k + 1)
    poly[k] = 1
    return Cyclotomic(n, poly)


def as_cyclotomic(x, n: int = 1) -> Cyclotomic:
    if isinstance(x, Cyclotomic):
        return x.to_order(_lcm(x.n, n))
    return Cyclotomic.rational(Fraction(x), n)


def cyc_arith(a: Cyclotomic, b: Cyclotomic, op: str) -> Cyclotomic:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if not b:
            raise ZeroDivisionError("division by zero in cyclotomic field")
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def _frac_str(q: Fraction) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def scalar_str(x) -> str:
    """Text form ``a0 + a1*z^1 + ...`` used in reports."""
    if not isinstance(x, Cyclotomic):
        return _frac_str(Fraction(x))
    parts = []
    for k, a in enumerate(x.c):
        if not a:
            continue
        parts.append(_frac_str(a) if k == 0 else f"{_frac_str(a)}*z^{k}")
    return " + ".join(parts) if parts else "0"


_TERM = re.compile(r"^([+-]?\d+(?:/\d+)?)(?:\*z\^(\d+))?$|^([+-]?)z(?:\^(\d+))?$")


def parse_cyclotomic(text: str, n: int = 1) -> Cyclotomic:
    """Inverse of :func:`scalar_str`; ``z`` denotes zeta_n."""
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty scalar literal")
    s = s.replace("-", "+-").replace("*+-", "*-").replace("^+-", "^-")
    coeffs: dict[int, Fraction] = {}
    for tok in s.split("+"):
        if not tok:
            continue
        m = _TERM.match(tok)
        if not m:
            raise ValueError(f"cannot parse scalar term {tok!r}")
        if m.group(1) is not None:
            c, k = Fraction(m.group(1)), int(m.group(2) or 0)
        else:
            c, k = Fraction(-1 if m.group(3) == "-" else 1), int(m.group(4) or 1)
        coeffs[k] = coeffs.get(k, Fraction(0)) + c
    poly = [Fraction(0)] * (max(coeffs) + 1)
    for k, c in coeffs.items():
        poly[k] += c
    total = Cyclotomic.rational(0, n)
    for k, c in enumerate(poly):
        if c:
            total = total + root_of_unity(k, n) * c
    return total


class FPoly:
    """A polynomial in the central parameter F with exact coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        if coeffs is None:
            coeffs = {}
        elif not isinstance(coeffs, dict):
            coeffs = dict(enumerate(coeffs))
        self.coeffs = {d: c for d, c in coeffs.items() if c}

    @classmethod
    def monomial(cls, c, d: int = 0) -> "FPoly":
        return cls({d: c})

    @property
    def degree(self) -> int:
        return max(self.coeffs) if self.coeffs else -1

    def __bool__(self):
        return bool(self.coeffs)

    def __add__(self, other):
        if not isinstance(other, FPoly):
            other = FPoly({0: other})
        out = dict(self.coeffs)
        for d, c in other.coeffs.items():
            out[d] = out[d] + c if d in out else c
        return FPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return FPoly({d: -c for d, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other if isinstance(other, FPoly) else FPoly({0: -other}))

    def __mul__(self, other):
        if not isinstance(other, FPoly):
            return FPoly({d: c * other for d, c in self.coeffs.items()})
        out: dict = {}
        for d1, c1 in self.coeffs.items():
            for d2, c2 in other.coeffs.items():
                d = d1 + d2
                out[d] = out[d] + c1 * c2 if d in out else c1 * c2
        return FPoly(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, FPoly):
            other = FPoly({0: other})
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __call__(self, value):
        return fpoly_eval(self, value)

    def __repr__(self):
        if not self.coeffs:
            return "FPoly(0)"
        terms = []
        for d in sorted(self.coeffs):
            c = scalar_str(self.coeffs[d])
            terms.append(c if d == 0 else f"({c})*F^{d}")
        return "FPoly(" + " + ".join(terms) + ")"


def fpoly_eval(p: FPoly, value):
    """Horner evaluation of ``p`` at ``value``."""
    if not p.coeffs:
        return Fraction(0) if not isinstance(value, Cyclotomic) else Cyclotomic.rational(0, value.n)
    acc = 0
    for d in range(p.degree, -1, -1):
        acc = acc * value + p.coeffs.get(d, 0)
    return acc
