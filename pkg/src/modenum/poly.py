"""Dense univariate polynomials with exact rational coefficients.

Coefficients are stored as a tuple of :class:`fractions.Fraction`, indexed by
exponent, with no trailing zeros (the zero polynomial is the empty tuple).
Hot loops convert to a common denominator and work on Python ints.
"""

from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Union

from .errors import InexactDivision, NonMonicModulus, ParseError

Scalar = Union[int, Fraction]

#: Degree reported for the zero polynomial.
NEG_INF = float("-inf")


def _strip(c: list) -> tuple:
    while c and not c[-1]:
        c.pop()
    return tuple(c)


def _scaled(coeffs) -> tuple[list[int], int]:
    """Return integer numerators and the common denominator D of ``coeffs``."""
    den = 1
    for c in coeffs:
        if c.denominator != 1:
            den = math.lcm(den, c.denominator)
    if den == 1:
        return [c.numerator for c in coeffs], 1
    return [c.numerator * (den // c.denominator) for c in coeffs], den


def _unscale(nums: Iterable[int], den: int) -> "Polynomial":
    if den == 1:
        return Polynomial._from_tuple(_strip([Fraction(v) for v in nums]))
    return Polynomial._from_tuple(_strip([Fraction(v, den) for v in nums]))


@dataclass(frozen=True)
class IntegralityWitness:
    is_integral: bool
    common_denominator: int

    def __bool__(self) -> bool:
        return self.is_integral


class Polynomial:
    """Immutable polynomial over Q in one variable."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable[Scalar | str] = ()):
        self._c = _strip([Fraction(c) for c in coeffs])

    @classmethod
    def _from_tuple(cls, t: tuple) -> "Polynomial":
        p = object.__new__(cls)
        p._c = t
        return p

    @classmethod
    def from_terms(cls, terms: Mapping[int, Scalar]) -> "Polynomial":
        """Densify a sparse ``{exponent: coefficient}`` mapping."""
        if not terms:
            return cls()
        if min(terms) < 0:
            raise ValueError("negative exponent")
        c = [Fraction(0)] * (max(terms) + 1)
        for k, v in terms.items():
            c[k] += Fraction(v)
        return cls._from_tuple(_strip(c))

    @classmethod
    def monomial(cls, k: int, c: Scalar = 1) -> "Polynomial":
        return cls.from_terms({k: c})

    @classmethod
    def constant(cls, c: Scalar) -> "Polynomial":
        return cls((c,))

    @property
    def coeffs(self) -> tuple:
        return self._c

    @property
    def degree(self):
        """Degree as an int, or ``NEG_INF`` for the zero polynomial."""
        return len(self._c) - 1 if self._c else NEG_INF

    def __len__(self) -> int:
        return len(self._c)

    def __getitem__(self, k: int) -> Fraction:
        if 0 <= k < len(self._c):
            return self._c[k]
        return Fraction(0)

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self) -> bool:
        return bool(self._c)

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self._c == other._c
        if isinstance(other, (int, Fraction)):
            return self._c == Polynomial.constant(other)._c
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._c)

    def __neg__(self) -> "Polynomial":
        return Polynomial._from_tuple(tuple(-c for c in self._c))

    def __add__(self, other) -> "Polynomial":
        other = _coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._c, other._c
        if len(a) < len(b):
            a, b = b, a
        c = list(a)
        for k, v in enumerate(b):
            c[k] += v
        return Polynomial._from_tuple(_strip(c))

    __radd__ = __add__

    def __sub__(self, other) -> "Polynomial":
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "Polynomial":
        return (-self) + other

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            return scale(self, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        if not self._c or not other._c:
            return Polynomial()
        an, ad = _scaled(self._c)
        bn, bd = _scaled(other._c)
        out = [0] * (len(an) + len(bn) - 1)
        for i, x in enumerate(an):
            if x:
                for j, y in enumerate(bn):
                    out[i + j] += x * y
        return _unscale(out, ad * bd)

    def __rmul__(self, other) -> "Polynomial":
        return self.__mul__(other)

    def __pow__(self, e: int) -> "Polynomial":
        if e < 0:
            raise ValueError("negative power")
        result, base = ONE, self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __call__(self, x):
        acc = 0
        for c in reversed(self._c):
            acc = acc * x + c
        return acc

    def integrality(self) -> IntegralityWitness:
        den = 1
        for c in self._c:
            den = math.lcm(den, c.denominator)
        return IntegralityWitness(den == 1, den)

    def is_monic(self) -> bool:
        return bool(self._c) and self._c[-1] == 1

    def __repr__(self) -> str:
        return f"Polynomial('{self}')"

    def __str__(self) -> str:
        return format_poly(self)

    def to_json(self) -> list:
        return to_json(self)


def _coerce(x):
    if isinstance(x, Polynomial):
        return x
    if isinstance(x, (int, Fraction)):
        return Polynomial.constant(x)
    return NotImplemented


ZERO = Polynomial()
ONE = Polynomial((1,))
X = Polynomial((0, 1))


def scale(a: Polynomial, c: Scalar) -> Polynomial:
    c = Fraction(c)
    if not c:
        return ZERO
    return Polynomial._from_tuple(tuple(v * c for v in a.coeffs))


def arith(a: Polynomial, b, kind: str) -> Polynomial:
    """Dispatch ``add``, ``sub``, ``mul`` or ``scalar-mul`` (``b`` a scalar)."""
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "mul":
        return a * b
    if kind in ("scalar-mul", "scalar_mul"):
        return scale(a, b)
    raise ValueError(f"unknown kind {kind!r}")


def x_pow_minus_one(n: int) -> Polynomial:
    """The polynomial x^n - 1."""
    return Polynomial.from_terms({0: -1, n: 1})


def geometric(n: int, step: int = 1) -> Polynomial:
    """1 + x^step + x^(2 step) + ... + x^(n - step), i.e. (x^n - 1)/(x^step - 1)."""
    return Polynomial.from_terms({k: 1 for k in range(0, n, step)})


def poly_divmod(a: Polynomial, m: Polynomial) -> tuple[Polynomial, Polynomial]:
    """Quotient and remainder of ``a`` by any nonzero ``m``."""
    if m.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    dm = len(m) - 1
    if len(a) <= dm:
        return ZERO, a
    mc = m.coeffs
    lead = mc[-1]
    r = list(a.coeffs)
    q = [Fraction(0)] * (len(r) - dm)
    for k in range(len(r) - 1, dm - 1, -1):
        c = r[k]
        if not c:
            continue
        c = c / lead
        q[k - dm] = c
        base = k - dm
        for t in range(dm + 1):
            r[base + t] -= c * mc[t]
    return Polynomial._from_tuple(_strip(q)), Polynomial._from_tuple(_strip(r[:dm]))


def exact_div(a: Polynomial, m: Polynomial) -> Polynomial:
    q, r = poly_divmod(a, m)
    if r:
        raise InexactDivision(f"({a}) is not divisible by ({m})")
    return q


def poly_rem(a: Polynomial, m: Polynomial) -> Polynomial:
    """Remainder of ``a`` modulo the monic polynomial ``m``."""
    if not m.is_monic() or len(m) < 2:
        raise NonMonicModulus(f"modulus must be monic of degree >= 1, got {m}")
    dm = len(m) - 1
    if len(a) <= dm:
        return a
    if m.integrality().is_integral:
        mc = [c.numerator for c in m.coeffs]
        r, den = _scaled(a.coeffs)
        for k in range(len(r) - 1, dm - 1, -1):
            c = r[k]
            if c:
                base = k - dm
                for t in range(dm):
                    if mc[t]:
                        r[base + t] -= c * mc[t]
        return _unscale(r[:dm], den)
    return poly_divmod(a, m)[1]


def simplify(a: Polynomial, n: int) -> Polynomial:
    """Remainder of ``a`` modulo x^n - 1: fold exponents mod n."""
    if n < 1:
        raise ValueError("n must be positive")
    c = a.coeffs
    if len(c) <= n:
        return a
    nums, den = _scaled(c)
    out = nums[:n]
    for k in range(n, len(nums)):
        out[k % n] += nums[k]
    return _unscale(out, den)


def coeff_class(a: Polynomial, n: int, i: int) -> Fraction:
    """Sum of the coefficients of ``a`` at exponents congruent to i mod n."""
    if n < 1:
        raise ValueError("n must be positive")
    c = a.coeffs
    return sum(c[i % n :: n], Fraction(0))


def class_sums(a: Polynomial, n: int) -> list[Fraction]:
    """All n class sums of ``a``, as a length-n list."""
    s = simplify(a, n)
    return [s[i] for i in range(n)]


def is_periodic(a: Polynomial, n: int, d: int) -> bool:
    """True iff d is not 0 mod n and the class sums of ``a`` mod n repeat with shift d."""
    if n < 1 or d < 1:
        raise ValueError("n and d must be positive")
    if d % n == 0:
        return False
    s = class_sums(a, n)
    return all(s[i] == s[(i + d) % n] for i in range(n))


# -- text and JSON formats -------------------------------------------------


def _fmt_scalar(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def format_poly(a: Polynomial) -> str:
    """Render as ``c*x^k`` terms joined by `` + `` in ascending k; zero is ``0``."""
    terms = [f"{_fmt_scalar(c)}*x^{k}" for k, c in enumerate(a.coeffs) if c]
    return " + ".join(terms) if terms else "0"


_TERM = re.compile(r"^(?P<sign>-)?(?P<coef>\d+(?:/\d+)?)?\*?(?P<var>[xq](?:\^(?P<exp>\d+))?)?$")


def parse_poly(text: str) -> Polynomial:
    """Parse the canonical text format.

    Also accepts loose input for convenience: bare constants, ``x``, ``x^k``,
    ``q`` as the variable, ``-`` between terms, and any term order.
    """
    s = re.sub(r"\s+", "", text)
    if not s:
        raise ParseError("empty polynomial")
    s = re.sub(r"(?<=[\dxq])-", "+-", s)
    terms: dict[int, Fraction] = {}
    for raw in s.split("+"):
        m = _TERM.match(raw)
        if not raw or not m or (m.group("coef") is None and m.group("var") is None):
            raise ParseError(f"bad term {raw!r} in {text!r}")
        try:
            coef = Fraction(m.group("coef")) if m.group("coef") else Fraction(1)
        except ZeroDivisionError as exc:
            raise ParseError(f"zero denominator in {text!r}") from exc
        if m.group("sign"):
            coef = -coef
        if m.group("var") is None:
            k = 0
        else:
            k = int(m.group("exp")) if m.group("exp") is not None else 1
        terms[k] = terms.get(k, Fraction(0)) + coef
    return Polynomial.from_terms(terms)


def to_json(a: Polynomial) -> list:
    """``[[numerator, denominator], ...]`` by exponent, as decimal strings."""
    return [[str(c.numerator), str(c.denominator)] for c in a.coeffs]


def from_json(data) -> Polynomial:
    if isinstance(data, str):
        data = json.loads(data)
    try:
        return Polynomial(Fraction(int(p), int(q)) for p, q in data)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad polynomial JSON: {data!r}") from exc
