import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from modenum.core import (
    ResidueSystem,
    canonical_rep,
    check_canonical,
    crt_combine,
    g_coeff,
    g_poly,
    invariant_equal,
    simplify_class_from_residues,
    simplify_from_residues,
)
from modenum.errors import NonIntegralInput
from modenum.numtheory import cyclotomic, divisors
from modenum.poly import ONE, X, ZERO, Polynomial, poly_rem, simplify, x_pow_minus_one
from modenum.subset import subset_sum_poly, subset_sum_residue

polys = st.lists(st.integers(-9, 9), max_size=40).map(Polynomial)
small_n = st.integers(1, 20)
HALF = Fraction(1, 2)


def test_g_coeff_examples():
    assert g_coeff(ONE, 2, 0) == 1
    assert g_coeff(ONE, 2, 1) == -1
    for n in range(1, 31):
        assert all(g_coeff(cyclotomic(n), n, i) == 0 for i in range(n))


@given(polys, st.integers(0, 10), small_n, st.integers(-30, 30))
def test_g_coeff_shift(c, t, n, i):
    assert g_coeff(Polynomial.monomial(t) * c, n, i) == g_coeff(c, n, i - t)


def test_g_poly_examples():
    assert g_poly(X, 2) == Polynomial((-HALF, HALF))
    assert g_poly(ONE, 2) == Polynomial((HALF, -HALF))


@settings(max_examples=60)
@given(polys, polys, small_n)
def test_g_poly_kills_cyclotomic_multiples(a, r, n):
    assert g_poly(cyclotomic(n) * r, n) == ZERO
    assert g_poly(a + cyclotomic(n) * r, n) == g_poly(a, n)


def test_residue_system_validates_keys():
    with pytest.raises(ValueError):
        ResidueSystem(6, {1: ONE, 2: ONE})
    with pytest.raises(ValueError):
        ResidueSystem(0, {})


def test_reconstruction_examples():
    rs = ResidueSystem(2, {1: ZERO, 2: ONE})
    assert simplify_from_residues(rs) == Polynomial((HALF, -HALF))
    assert crt_combine({1: ZERO, 2: ONE}, 2) == Polynomial((HALF, -HALF))


def test_reconstruction_worked_subset_sum():
    rs = ResidueSystem(12, {d: subset_sum_residue(22, d) for d in divisors(12)})
    assert simplify_from_residues(rs)[5] == 349504
    assert simplify_class_from_residues(rs, 5) == 349504


def test_degenerate_n_equals_one():
    f = Polynomial((3, -1, 4))
    assert simplify_from_residues(ResidueSystem.trivial(f, 1)) == Polynomial((6,))
    assert crt_combine({1: f}, 1) == Polynomial((6,))
    assert g_poly(f, 1) == Polynomial((6,))


@settings(max_examples=40)
@given(st.lists(st.integers(-9, 9), max_size=120).map(Polynomial), st.integers(1, 24))
def test_trivial_residues_give_simplification(f, n):
    rs = ResidueSystem.trivial(f, n)
    s = simplify(f, n)
    assert simplify_from_residues(rs) == s
    assert all(simplify_class_from_residues(rs, i) == s[i] for i in range(n))


@settings(max_examples=40)
@given(st.integers(1, 24), st.randoms(use_true_random=False))
def test_residue_freedom_and_crt(n, rng):
    targets = {d: _rand_poly(rng, 10) for d in divisors(n)}
    base = simplify_from_residues(ResidueSystem(n, targets))
    bumped = {d: t + cyclotomic(d) * _rand_poly(rng, 4) for d, t in targets.items()}
    assert simplify_from_residues(ResidueSystem(n, bumped)) == base
    combined = crt_combine(targets, n)
    assert combined == base
    assert len(combined) <= n
    for d, t in targets.items():
        assert poly_rem(combined - t, cyclotomic(d)) == ZERO


def test_crt_constant_targets():
    for n in range(1, 13):
        c = Polynomial((Fraction(7, 3),))
        assert crt_combine({d: c for d in divisors(n)}, n) == c


def _rand_poly(rng, deg):
    return Polynomial(rng.randint(-9, 9) for _ in range(rng.randint(0, deg) + 1))


def test_canonical_rep_examples():
    assert canonical_rep(ZERO, 5) == ZERO
    assert canonical_rep(X, 2) == Polynomial((-HALF, HALF))


@settings(max_examples=80)
@given(polys, polys, st.integers(1, 20))
def test_canonical_rep_properties(a, r, n):
    c = canonical_rep(a, n)
    assert len(c) <= n
    assert poly_rem(a - c, cyclotomic(n)) == ZERO
    for d in divisors(n)[:-1]:
        assert poly_rem(c, x_pow_minus_one(d)) == ZERO
    assert canonical_rep(c, n) == c
    assert canonical_rep(a + cyclotomic(n) * r, n) == c


def test_check_canonical_rejects_wrong_answer():
    a = Polynomial((1, 2, 3))
    assert check_canonical(a, g_poly(a, 4), 4)
    assert not check_canonical(a, simplify(a, 4), 4)


@given(polys, polys, st.integers(1, 20))
def test_invariant_equal_matches_remainder(a, b, n):
    assert invariant_equal(a, a, n)
    assert invariant_equal(a, a + cyclotomic(n), n)
    assert invariant_equal(a, b, n) == (poly_rem(a - b, cyclotomic(n)) == ZERO)


def test_invariant_equal_rejects_rationals():
    with pytest.raises(NonIntegralInput):
        invariant_equal(Polynomial((HALF,)), ONE, 3)


def test_invariant_on_random_pairs():
    rng = random.Random(7)
    for _ in range(300):
        n = rng.randint(1, 20)
        a = _rand_poly(rng, 30)
        b = a + cyclotomic(n) * _rand_poly(rng, 5) if rng.random() < 0.5 else _rand_poly(rng, 30)
        assert invariant_equal(a, b, n) == (poly_rem(a - b, cyclotomic(n)) == ZERO)


def test_subset_residues_round_trip():
    for j in range(1, 17):
        n = j
        rs = ResidueSystem(n, {d: subset_sum_residue(j, d) for d in divisors(n)})
        assert simplify_from_residues(rs) == simplify(subset_sum_poly(j), n)
