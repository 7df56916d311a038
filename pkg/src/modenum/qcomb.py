"""q-multinomial coefficients, q-Catalan numbers and their class sums mod n."""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple, Sequence

from .errors import DomainError, NonIntegerResult
from .numtheory import divisors, ramanujan, ramanujan_row
from .poly import ONE, ZERO, Polynomial, class_sums, exact_div, geometric, scale


class MultiIndex(NamedTuple):
    j: int
    ks: tuple[int, ...]


class CatalanQuery(NamedTuple):
    j: int
    n: int
    i: int


def binomial(n: int, k: int) -> int:
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)


def multinomial(j: int, ks: Sequence[int]) -> int:
    """Ordinary multinomial; zero when the parts do not sum to j."""
    if sum(ks) != j or any(k < 0 for k in ks):
        return 0
    out, rest = 1, j
    for k in ks:
        out *= math.comb(rest, k)
        rest -= k
    return out


def catalan_number(j: int) -> int:
    return math.comb(2 * j, j) // (j + 1)


def q_integer(s: int) -> Polynomial:
    """[s] = 1 + q + ... + q^(s-1)."""
    return geometric(s)


@lru_cache(maxsize=None)
def q_factorial(s: int) -> Polynomial:
    if s < 0:
        raise ValueError("negative factorial")
    if s <= 1:
        return ONE
    return q_factorial(s - 1) * q_integer(s)


def _check_parts(j: int, ks: Sequence[int]) -> None:
    if j < 0 or any(k < 0 for k in ks):
        raise ValueError("q-multinomial parameters must be non-negative")


@lru_cache(maxsize=None)
def _q_multinomial(j: int, ks: tuple[int, ...]) -> Polynomial:
    if sum(ks) != j:
        return ZERO
    out = q_factorial(j)
    for k in ks:
        out = exact_div(out, q_factorial(k))
    return out


def q_multinomial(j: int, ks: Sequence[int]) -> Polynomial:
    """[j]! / ([k_1]! ... [k_l]!), or zero if the k's do not sum to j."""
    _check_parts(j, ks)
    return _q_multinomial(j, tuple(ks))


def q_binomial(j: int, k: int) -> Polynomial:
    if k < 0 or k > j:
        return ZERO
    return q_multinomial(j, (k, j - k))


def q_multinomial_residue(j: int, ks: Sequence[int], n: int) -> Polynomial:
    """A polynomial congruent to the q-multinomial modulo Phi_n (q-Lucas).

    Splits every parameter into base-n digits: the quotient digits give an
    ordinary multinomial, the remainder digits a small q-multinomial.
    """
    _check_parts(j, ks)
    if n < 1:
        raise ValueError("n must be positive")
    outer = multinomial(j // n, [k // n for k in ks])
    if not outer:
        return ZERO
    return scale(q_multinomial(j % n, [k % n for k in ks]), outer)


def q_multinomial_class(j: int, ks: Sequence[int], n: int, i: int) -> Fraction:
    """Number-weighted class sum S^i_n of the q-multinomial, by the divisor formula.

    Only remainder-digit q-multinomials (all parameters below d) are expanded.
    """
    _check_parts(j, ks)
    if n < 1:
        raise ValueError("n must be positive")
    total = 0
    for d in divisors(n):
        if sum(k % d for k in ks) >= d:
            continue
        outer = multinomial(j // d, [k // d for k in ks])
        if not outer:
            continue
        base = class_sums(q_multinomial(j % d, [k % d for k in ks]), d)
        row = ramanujan_row(d)
        inner = sum(base[s] * row[(i - s) % d] for s in range(d))
        total += outer * inner
    return Fraction(total) / n


def q_multinomial_class_divisible(j: int, ks: Sequence[int], n: int, i: int) -> Fraction:
    """Non-recursive form of :func:`q_multinomial_class` valid when n divides j."""
    _check_parts(j, ks)
    if n < 1 or j % n:
        raise DomainError(f"requires n | j, got n={n}, j={j}")
    g = math.gcd(n, *ks)
    total = sum(
        multinomial(j // d, [k // d for k in ks]) * ramanujan(d, i) for d in divisors(g)
    )
    return Fraction(total, n)


@lru_cache(maxsize=None)
def q_catalan(j: int) -> Polynomial:
    """C_j(q) = (1 - q)/(1 - q^(j+1)) [2j choose j]_q."""
    if j < 0:
        raise ValueError("j must be non-negative")
    num = Polynomial((1, -1)) * q_binomial(2 * j, j)
    return exact_div(num, Polynomial.from_terms({0: 1, j + 1: -1}))


def q_catalan_residue(j: int, n: int) -> Polynomial:
    """A polynomial congruent to C_j(q) modulo Phi_n, for n >= 2."""
    if j < 0:
        raise ValueError("j must be non-negative")
    if n < 2:
        raise DomainError("q_catalan_residue requires n >= 2")
    g = j % n
    if 2 * g < n:
        return scale(q_catalan(g), binomial((2 * j - 2 * g) // n, (j - g) // n))
    if g == n - 1:
        return Polynomial.monomial(1, -binomial((2 * j - n + 2) // n, (j + 1) // n))
    return ZERO


def _exact_div_n(total: int, n: int) -> int:
    q, r = divmod(total, n)
    if r:
        raise NonIntegerResult(f"{total}/{n} is not an integer")
    return q


def catalan_major_count(j: int, n: int, i: int) -> int:
    """Number of Dyck words with j ones and j zeros whose major index is i mod n."""
    if j < 0 or n < 1:
        raise ValueError("need j >= 0 and n >= 1")
    total = catalan_number(j)
    for d in divisors(n)[1:]:
        r = j % d
        outer = binomial(2 * j // d, j // d)
        row = ramanujan_row(d)
        if 2 * r < d:
            base = class_sums(q_catalan(r), d)
            total += outer * sum(base[s] * row[(i - s) % d] for s in range(d))
        elif r == d - 1:
            total -= outer * row[(i - 1) % d]
    if isinstance(total, Fraction):
        if total.denominator != 1:
            raise NonIntegerResult(f"non-integral partial sum {total}")
        total = total.numerator
    result = _exact_div_n(total, n)
    if result < 0:
        raise NonIntegerResult(f"negative count {result}")
    return result


def catalan_major_table(j: int, n: int) -> list[int]:
    return [catalan_major_count(j, n, i) for i in range(n)]


def catalan_major_count_collapsed(j: int, n: int, i: int) -> int:
    """Closed forms for the two cases n | j and n | j + 1."""
    if n < 1 or j < 0:
        raise ValueError("need j >= 0 and n >= 1")
    total = catalan_number(j)
    if j % n == 0:
        for d in divisors(n)[1:]:
            total += binomial(2 * j // d, j // d) * ramanujan(d, i)
    elif (j + 1) % n == 0:
        for d in divisors(n)[1:]:
            total -= binomial(2 * j // d, j // d) * ramanujan(d, i - 1)
    else:
        raise DomainError(f"requires n | j or n | j+1, got n={n}, j={j}")
    return _exact_div_n(total, n)
