"""Reconstruction of remainders mod x^n - 1 from residues mod cyclotomic polynomials.

The workhorse is the linear functional

    G^n_i(a) = sum_s [x^s]a * c_n(i - s)

(c_n a Ramanujan sum), which only depends on the class of ``a`` modulo the
n-th cyclotomic polynomial.  Averaging G^d_i over the divisors d of n
recovers the class sums of ``a`` modulo n, and (1/n) sum_i G^n_i(a) x^i is a
canonical representative of ``a`` modulo Phi_n.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .errors import NonIntegralInput
from .numtheory import cyclotomic, divisors, ramanujan_row, reduce_cyclotomic
from .poly import (
    Polynomial,
    _scaled,
    _unscale,
    geometric,
    poly_rem,
    scale,
    simplify,
    x_pow_minus_one,
)


@dataclass(frozen=True)
class ResidueSystem:
    """A polynomial m_d for every divisor d of n, standing for a residue mod Phi_d."""

    n: int
    residues: Mapping[int, Polynomial] = field(default_factory=dict)

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be positive")
        if set(self.residues) != set(divisors(self.n)):
            raise ValueError(
                f"residue keys {sorted(self.residues)} must be exactly the divisors of {self.n}"
            )

    @classmethod
    def trivial(cls, f: Polynomial, n: int) -> "ResidueSystem":
        """Use ``f`` itself as the residue for every divisor."""
        return cls(n, {d: f for d in divisors(n)})

    def reduced(self, d: int) -> Polynomial:
        return reduce_cyclotomic(self.residues[d], d)


def _g_numerators(nums: list[int], n: int) -> list[int]:
    """G^n_i of the integer vector ``nums`` for i = 0..n-1."""
    folded = [0] * n
    for s, v in enumerate(nums):
        folded[s % n] += v
    row = ramanujan_row(n)
    support = [(s, v) for s, v in enumerate(folded) if v]
    return [sum(v * row[(i - s) % n] for s, v in support) for i in range(n)]


def g_coeff(a: Polynomial, n: int, i: int) -> Fraction:
    """G^n_i(a) = sum over s of [x^s]a * c_n(i - s)."""
    if n < 1:
        raise ValueError("n must be positive")
    nums, den = _scaled(a.coeffs)
    row = ramanujan_row(n)
    return Fraction(sum(v * row[(i - s) % n] for s, v in enumerate(nums) if v), den)


def g_poly(a: Polynomial, n: int) -> Polynomial:
    """G^n(a) = (1/n) sum_{0 <= i < n} G^n_i(a) x^i."""
    if n < 1:
        raise ValueError("n must be positive")
    nums, den = _scaled(a.coeffs)
    return _unscale(_g_numerators(nums, n), den * n)


def simplify_from_residues(rs: ResidueSystem) -> Polynomial:
    """The remainder mod x^n - 1 of any polynomial congruent to m_d mod Phi_d for all d | n."""
    n = rs.n
    total = [Fraction(0)] * n
    for d in divisors(n):
        nums, den = _scaled(rs.reduced(d).coeffs)
        if not nums:
            continue
        g = _g_numerators(nums, d)
        for i in range(n):
            if g[i % d]:
                total[i] += Fraction(g[i % d], den)
    return Polynomial(v / n for v in total)


def simplify_class_from_residues(rs: ResidueSystem, i: int) -> Fraction:
    """Single class sum, computed from the class sums of each m_d mod d."""
    n = rs.n
    acc = Fraction(0)
    for d in divisors(n):
        folded = simplify(rs.residues[d], d)
        row = ramanujan_row(d)
        acc += sum((folded[s] * row[(i - s) % d] for s in range(d)), Fraction(0))
    return acc / n


def crt_combine(targets: Mapping[int, Polynomial], n: int) -> Polynomial:
    """Build the n-simplified polynomial congruent to targets[d] mod Phi_d for each d | n.

    Sweeps the divisors in descending order; each step adds a multiple of
    (x^n - 1)/(x^d - 1), which fixes the residue modulo Phi_e for e | d and
    leaves it alone for every other divisor.
    """
    divs = divisors(n)
    if set(targets) != set(divs):
        raise ValueError(f"target keys must be exactly the divisors of {n}")
    order = divs[::-1]
    e = reduce_cyclotomic(targets[order[0]], order[0])
    for d in order[1:]:
        r = reduce_cyclotomic(targets[d], d)
        e = simplify(e + scale(r - e, Fraction(d, n)) * geometric(n, d), n)
    return simplify(e, n)


def canonical_rep(a: Polynomial, n: int) -> Polynomial:
    """The n-simplified polynomial congruent to ``a`` mod Phi_n and to 0 mod x^d - 1 for d | n, d < n."""
    result = g_poly(a, n)
    assert check_canonical(a, result, n), (a, n)
    return result


def check_canonical(a: Polynomial, result: Polynomial, n: int) -> bool:
    """Verify the defining congruences of a canonical representative via remainders."""
    if len(result) > n:
        return False
    if poly_rem(a - result, cyclotomic(n)):
        return False
    return all(not poly_rem(result, x_pow_minus_one(d)) for d in divisors(n)[:-1])


def invariant_equal(a: Polynomial, b: Polynomial, n: int) -> bool:
    """Whether integer polynomials ``a`` and ``b`` agree modulo Phi_n, via G^n."""
    for p in (a, b):
        w = p.integrality()
        if not w.is_integral:
            raise NonIntegralInput(f"{p} has common denominator {w.common_denominator}")
    return g_poly(a, n) == g_poly(b, n)

