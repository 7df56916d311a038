from itertools import product
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from modenum.errors import EmptyWord, LengthNotDivisible, NotFlatNonDyck
from modenum.numtheory import cyclotomic
from modenum.poly import ZERO, Polynomial, is_periodic, poly_rem
from modenum.qcomb import q_catalan
from modenum.words import (
    count_straightened,
    count_straightened_exhaustive,
    delta,
    delta_class_count,
    delta_inv,
    delta_orbit,
    delta_period,
    descent_count,
    dyck_words,
    enumerate_major,
    enumerate_rigid_major,
    flat_non_dyck_words,
    gamma,
    gamma_inv,
    is_d_rigid,
    is_d_straightened,
    is_dyck,
    is_flat,
    major_gf,
    major_index,
    rigid_dyck_words,
    straightened_count,
    words,
)
from oracles import dyck_words_by_positions, is_dyck_word, word_major

binary = st.text(alphabet="01", max_size=16)


def test_flat_and_dyck_examples():
    assert is_flat("11000") and is_flat("001110")
    assert is_dyck("001101000")
    assert not is_dyck("001110000")
    assert is_flat("") and is_dyck("")
    assert is_flat([0, 0, 1])
    with pytest.raises(ValueError):
        is_flat("012")


def test_statistics_examples():
    assert major_index("0011000101001") == 22
    assert descent_count("0011000101001") == 4
    assert major_index("") == 0
    assert major_index("000111") == 0
    assert descent_count("0000") == 0
    assert descent_count("10") == 1
    assert descent_count("01") == 1


@given(binary)
def test_statistics_against_oracle(w):
    assert major_index(w) == word_major(w)
    assert is_dyck(w) == is_dyck_word(w)


def test_gamma_examples():
    assert gamma("0010110") == "0001011"
    with pytest.raises(EmptyWord):
        gamma("")
    with pytest.raises(EmptyWord):
        gamma_inv("")


@given(binary.filter(bool))
def test_gamma_rotation(w):
    assert gamma_inv(gamma(w)) == w
    cur = w
    for _ in range(len(w)):
        cur = gamma(cur)
    assert cur == w
    assert descent_count(gamma(w)) == descent_count(w)
    if "0" in w and "1" in w:
        assert (major_index(gamma(w)) - major_index(w)) % len(w) == descent_count(w) % len(w)


def test_gamma_orbit_gf_vanishes_mod_phi():
    for n in range(2, 11):
        for bits in product("01", repeat=n):
            w = "".join(bits)
            if "0" not in w or "1" not in w:
                continue
            orbit = [w]
            for _ in range(n - 1):
                orbit.append(gamma(orbit[-1]))
            gf = major_gf(orbit)
            assert any(is_periodic(gf, n, d) for d in range(1, n))
            assert poly_rem(gf, cyclotomic(n)) == ZERO


def test_delta_examples():
    assert delta("11000") == "01100"
    assert delta("01100") == "10100"
    assert delta_orbit("11000")[:3] == ["11000", "01100", "10100"]
    for bad in ("0011", "1110", "0101", ""):
        with pytest.raises(NotFlatNonDyck):
            delta(bad)
    with pytest.raises(NotFlatNonDyck):
        delta_inv("0011")


def test_delta_bijection_and_inverse():
    for n in range(1, 13):
        dom = list(flat_non_dyck_words(n))
        image = [delta(w) for w in dom]
        assert sorted(image) == sorted(dom)
        for w, v in zip(dom, image):
            assert v.count("1") == w.count("1")
            assert delta_inv(v) == w


def test_delta_orbits():
    for n in range(1, 13):
        for w in flat_non_dyck_words(n):
            orbit = delta_orbit(w)
            assert len(orbit) == n
            assert delta(orbit[-1]) == w
            assert n % delta_period(w) == 0
            if w.count("1") >= 2:
                majors = [major_index(u) for u in orbit + [w]]
                steps = {(b - a) % n for a, b in zip(majors, majors[1:])}
                assert len(steps) == 1 and 0 not in steps


def test_delta_class_counts():
    assert [delta_class_count(n) for n in range(1, 9)] == [0, 1, 1, 2, 2, 5, 5, 13]


def test_generators():
    assert list(words(1, 2)) == ["001", "010", "100"]
    for a in range(6):
        for b in range(6):
            assert sorted(dyck_words(a, b)) == sorted(dyck_words_by_positions(a, b))
            assert len(list(words(a, b))) == comb(a + b, a)


def test_enumerate_major():
    assert enumerate_major("dyck", 3, 3) == Polynomial.from_terms({0: 1, 2: 1, 3: 1, 4: 1, 6: 1})
    assert enumerate_major("dyck", 0, 4) == Polynomial((1,))
    assert enumerate_major("flat", 3, 2) == ZERO
    assert enumerate_major("all", 2, 2)(1) == 6
    with pytest.raises(ValueError):
        enumerate_major("lattice", 1, 1)
    for j in range(10):
        assert enumerate_major("dyck", j, j) == q_catalan(j)


def test_rigidity_examples():
    assert is_d_rigid("000111001000111101", 3)
    assert is_d_straightened("000111001000111011", 3)
    assert not is_d_straightened("000111010000111110", 3)
    # block-rigid but not a Dyck word
    assert is_d_rigid("000111010000111110", 3)
    with pytest.raises(LengthNotDivisible):
        is_d_rigid("0001", 3)
    with pytest.raises(LengthNotDivisible):
        list(rigid_dyck_words(3, 2, 2))


def test_rigid_generator_matches_filter():
    for d in range(2, 5):
        for length in range(0, 13, d):
            for ones in range(length // 2 + 1):
                gen = sorted(rigid_dyck_words(d, ones, length - ones))
                brute = sorted(
                    w for w in dyck_words_by_positions(ones, length - ones) if is_d_rigid(w, d)
                )
                assert gen == brute


def test_count_straightened():
    assert count_straightened(3, 2, 2) == 6 == count_straightened_exhaustive(3, 2, 2)
    for d in range(2, 5):
        for j in range(8):
            assert count_straightened(d, j, 0) == 1
            for k in range(8 - j):
                assert count_straightened_exhaustive(d, j, k) == comb(j + k, k)
                if j and k:
                    assert count_straightened_exhaustive(d, j, k) == (
                        count_straightened_exhaustive(d, j - 1, k)
                        + count_straightened_exhaustive(d, j, k - 1)
                    )
    with pytest.raises(ValueError):
        count_straightened(1, 1, 1)


def test_rigid_residue_identities():
    for length in range(2, 13):
        for n in range(2, length + 1):
            if length % n:
                continue
            phi = cyclotomic(n)
            for a in range(length + 1):
                b = length - a
                x = enumerate_major("dyck", a, b)
                y = enumerate_rigid_major(n, a, b)
                assert poly_rem(x - y, phi) == ZERO
                z = straightened_count(n, a, b)
                if a % n == 0 and b % n == 0:
                    expected = Polynomial((z,))
                elif a % n == 1 and b % n == n - 1:
                    expected = Polynomial((0, -z))
                else:
                    expected = ZERO
                assert poly_rem(y - expected, phi) == ZERO
