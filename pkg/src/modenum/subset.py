"""Subset sums of {1, ..., j} counted modulo n."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

import numpy as np

from .errors import DomainError, NonIntegerResult
from .numtheory import divisors, ramanujan_row
from .poly import ONE, ZERO, Polynomial, class_sums, scale

#: Largest j the brute-force enumerator accepts unless told otherwise.
DEFAULT_MAX_BRUTE = 24


class SubsetSumQuery(NamedTuple):
    n: int
    j: int
    i: int


@lru_cache(maxsize=None)
def subset_sum_poly(j: int) -> Polynomial:
    """N(j) = prod_{t=1..j} (1 + x^t)."""
    if j < 0:
        raise ValueError("j must be non-negative")
    out = ONE
    for t in range(1, j + 1):
        out = out * Polynomial.from_terms({0: 1, t: 1})
    return out


def subset_sum_residue(j: int, d: int) -> Polynomial:
    """A polynomial congruent to N(j) modulo Phi_d, for 0 < d <= j."""
    if not 0 < d <= j:
        raise DomainError(f"need 0 < d <= j, got d={d}, j={j}")
    if d % 2 == 0:
        return ZERO
    return scale(subset_sum_poly(j % d), 2 ** (j // d))


def subset_sum_class(n: int, j: int, i: int) -> int:
    """Number of subsets of {1..j} whose sum is i mod n, for 0 < n <= j.

    Only odd divisors of n contribute; each needs the class sums of the
    small polynomial N(j mod d).
    """
    if not 0 < n <= j:
        raise DomainError(f"need 0 < n <= j, got n={n}, j={j}")
    total = 0
    for d in divisors(n):
        if d % 2 == 0:
            continue
        base = class_sums(subset_sum_poly(j % d), d)
        row = ramanujan_row(d)
        total += 2 ** (j // d) * sum(base[s] * row[(i - s) % d] for s in range(d))
    total = Fraction(total)
    if total.denominator != 1 or total.numerator % n:
        raise NonIntegerResult(f"{total}/{n} is not an integer")
    return total.numerator // n


def subset_sum_table(n: int, j: int) -> list[int]:
    return [subset_sum_class(n, j, i) for i in range(n)]


def subset_sum_class_divisible(n: int, j: int, i: int) -> Fraction:
    """Closed form valid when n <= j and every odd divisor of n divides j."""
    if not 0 < n <= j:
        raise DomainError(f"need 0 < n <= j, got n={n}, j={j}")
    odd = [d for d in divisors(n) if d % 2]
    if any(j % d for d in odd):
        raise DomainError("every odd divisor of n must divide j")
    return Fraction(sum(2 ** (j // d) * ramanujan_row(d)[i % d] for d in odd), n)


def subset_sums(j: int, max_j: int = DEFAULT_MAX_BRUTE) -> np.ndarray:
    """Sums of all 2^j subsets of {1..j}, one array entry per subset."""
    if j < 0:
        raise ValueError("j must be non-negative")
    if j > max_j:
        raise DomainError(f"brute force capped at j <= {max_j}, got j={j}")
    sums = np.zeros(1, dtype=np.int64)
    for t in range(1, j + 1):
        sums = np.concatenate((sums, sums + t))
    return sums


def subset_sum_brute(n: int, j: int, max_j: int = DEFAULT_MAX_BRUTE) -> list[int]:
    """Class counts mod n by enumerating every subset of {1..j}."""
    if n < 1:
        raise ValueError("n must be positive")
    counts = np.bincount(subset_sums(j, max_j) % n, minlength=n)
    return [int(c) for c in counts]
