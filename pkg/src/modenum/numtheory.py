"""Divisors, Moebius, totient, cyclotomic polynomials and Ramanujan sums."""

from __future__ import annotations

import math
from functools import lru_cache

from .poly import ONE, Polynomial, exact_div, poly_rem, simplify, x_pow_minus_one


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division."""
    if n < 1:
        raise ValueError("n must be positive")
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


@lru_cache(maxsize=None)
def _divisors(n: int) -> tuple[int, ...]:
    divs = [1]
    for p, e in factorize(n).items():
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return tuple(sorted(divs))


def divisors(n: int) -> list[int]:
    """Divisors of n in ascending order."""
    if n < 1:
        raise ValueError("n must be positive")
    return list(_divisors(n))


def moebius(n: int) -> int:
    f = factorize(n)
    if any(e > 1 for e in f.values()):
        return 0
    return -1 if len(f) % 2 else 1


def euler_phi(n: int) -> int:
    result = n
    for p in factorize(n):
        result -= result // p
    return result


@lru_cache(maxsize=None)
def cyclotomic(n: int) -> Polynomial:
    """The n-th cyclotomic polynomial, by dividing x^n - 1 by the lower ones."""
    if n < 1:
        raise ValueError("n must be positive")
    denom = ONE
    for d in _divisors(n)[:-1]:
        denom = denom * cyclotomic(d)
    return exact_div(x_pow_minus_one(n), denom)


def ramanujan_holder(n: int, l: int) -> int:
    """Closed form mu(n/g) phi(n) / phi(n/g) with g = gcd(n, l)."""
    m = n // math.gcd(n, l % n)
    q, r = divmod(moebius(m) * euler_phi(n), euler_phi(m))
    assert r == 0
    return q


@lru_cache(maxsize=None)
def _ramanujan(n: int, l: int) -> int:
    g = math.gcd(n, l)
    value = sum(moebius(n // d) * d for d in _divisors(g))
    assert value == ramanujan_holder(n, l), (n, l)
    return value


def ramanujan(n: int, l: int) -> int:
    """Ramanujan sum c_n(l) as the Moebius sum over common divisors of n and l."""
    if n < 1:
        raise ValueError("n must be positive")
    return _ramanujan(n, l % n)


@lru_cache(maxsize=None)
def ramanujan_row(n: int) -> tuple[int, ...]:
    """``(c_n(0), ..., c_n(n-1))``; c_n is periodic in its argument with period n."""
    return tuple(ramanujan(n, l) for l in range(n))


def reduce_cyclotomic(a: Polynomial, d: int) -> Polynomial:
    """Remainder of ``a`` modulo the d-th cyclotomic polynomial."""
    return poly_rem(simplify(a, d), cyclotomic(d))
