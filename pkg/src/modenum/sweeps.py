"""Property sweeps comparing closed forms against direct computation.

Each check takes a :class:`random.Random` and a ``scale`` in (0, 1] that
shrinks its ranges, and returns ``(ok, detail)``.
"""

from __future__ import annotations

import random
from typing import Callable

from . import core, numtheory as nt, qcomb, subset, words
from .poly import Polynomial, class_sums, poly_rem, simplify, x_pow_minus_one

Check = Callable[[random.Random, float], "tuple[bool, str]"]


def random_poly(rng: random.Random, max_deg: int, lo: int = -9, hi: int = 9) -> Polynomial:
    return Polynomial(rng.randint(lo, hi) for _ in range(rng.randint(0, max_deg) + 1))


def _sz(full: int, scale: float, floor: int = 1) -> int:
    return max(floor, int(round(full * scale)))


def partitions_up_to(j: int, parts: int):
    """Compositions of j into 1..parts non-negative parts."""
    def rec(rest, k):
        if k == 1:
            yield (rest,)
            return
        for a in range(rest + 1):
            for tail in rec(rest - a, k - 1):
                yield (a,) + tail

    for k in range(1, parts + 1):
        yield from rec(j, k)


def check_number_theory(rng, scale):
    top = _sz(60, scale, 6)
    for n in range(1, top + 1):
        prod = Polynomial((1,))
        for d in nt.divisors(n):
            prod = prod * nt.cyclotomic(d)
        if prod != x_pow_minus_one(n):
            return False, f"product of cyclotomics fails at n={n}"
    for n in range(1, _sz(100, scale, 6) + 1):
        for l in range(-2 * n, 2 * n + 1):
            if nt.ramanujan(n, l) != nt.ramanujan_holder(n, l):
                return False, f"Holder mismatch at c_{n}({l})"
            s = sum(nt.ramanujan(d, l) for d in nt.divisors(n))
            if s != (n if l % n == 0 else 0):
                return False, f"divisor sum fails at n={n}, l={l}"
    return True, f"n <= {top}"


def check_reconstruction(rng, scale):
    polys, top = _sz(500, scale), _sz(30, scale, 6)
    for _ in range(polys):
        f = random_poly(rng, 200)
        for n in range(1, top + 1):
            if core.simplify_from_residues(core.ResidueSystem.trivial(f, n)) != simplify(f, n):
                return False, f"n={n}, f={f}"
    return True, f"{polys} polynomials, n <= {top}"


def check_crt(rng, scale):
    systems, top = _sz(200, scale), _sz(24, scale, 6)
    for _ in range(systems):
        n = rng.randint(1, top)
        targets = {d: random_poly(rng, 12) for d in nt.divisors(n)}
        a = core.crt_combine(targets, n)
        if a != core.simplify_from_residues(core.ResidueSystem(n, targets)):
            return False, f"crt and reconstruction disagree at n={n}"
        for d, t in targets.items():
            if poly_rem(a - t, nt.cyclotomic(d)):
                return False, f"congruence mod Phi_{d} fails at n={n}"
    return True, f"{systems} residue systems, n <= {top}"


def check_canonical(rng, scale):
    polys, top = _sz(200, scale), _sz(36, scale, 6)
    for _ in range(polys):
        a = random_poly(rng, 80)
        n = rng.randint(1, top)
        if not core.check_canonical(a, core.g_poly(a, n), n):
            return False, f"n={n}, a={a}"
    return True, f"{polys} polynomials, n <= {top}"


def check_invariant(rng, scale):
    pairs, top = _sz(2000, scale), 20
    for k in range(pairs):
        n = rng.randint(1, top)
        a = random_poly(rng, 30)
        if k % 2:
            b = a + nt.cyclotomic(n) * random_poly(rng, 10)
        else:
            b = random_poly(rng, 30, -1, 1) + a
        expect = not poly_rem(a - b, nt.cyclotomic(n))
        if core.invariant_equal(a, b, n) != expect:
            return False, f"n={n}, a={a}, b={b}"
    return True, f"{pairs} pairs, n <= {top}"


def check_qmultinomial(rng, scale):
    top_j, top_n = _sz(14, scale, 4), _sz(10, scale, 4)
    for j in range(top_j + 1):
        for ks in partitions_up_to(j, 3):
            poly = qcomb.q_multinomial(j, ks)
            for n in range(1, top_n + 1):
                sums = class_sums(poly, n)
                for i in range(n):
                    if qcomb.q_multinomial_class(j, ks, n, i) != sums[i]:
                        return False, f"j={j}, ks={ks}, n={n}, i={i}"
                    if j % n == 0 and qcomb.q_multinomial_class_divisible(j, ks, n, i) != sums[i]:
                        return False, f"n | j form fails at j={j}, ks={ks}, n={n}, i={i}"
    return True, f"j <= {top_j}, n <= {top_n}"


def check_catalan(rng, scale):
    top_j, top_n = _sz(10, scale, 4), _sz(12, scale, 4)
    for j in range(top_j + 1):
        gf = words.enumerate_major("dyck", j, j)
        for n in range(1, top_n + 1):
            table = qcomb.catalan_major_table(j, n)
            if table != [int(v) for v in class_sums(gf, n)]:
                return False, f"j={j}, n={n}: {table}"
            if sum(table) != qcomb.catalan_number(j):
                return False, f"row sum at j={j}, n={n}"
    return True, f"j <= {top_j}, n <= {top_n}"


def check_catalan_residue(rng, scale):
    for j in range(_sz(12, scale, 4) + 1):
        c = qcomb.q_catalan(j)
        for n in range(2, _sz(10, scale, 4) + 1):
            if poly_rem(c - qcomb.q_catalan_residue(j, n), nt.cyclotomic(n)):
                return False, f"j={j}, n={n}"
    return True, "all cases"


def check_delta(rng, scale):
    top = _sz(14, scale, 4)
    for n in range(1, top + 1):
        dom = list(words.flat_non_dyck_words(n))
        image = {w: words.delta(w) for w in dom}
        if set(image.values()) != set(dom):
            return False, f"delta is not a bijection at length {n}"
        for w in dom:
            cur = w
            for _ in range(n):
                cur = image[cur]
            if cur != w:
                return False, f"delta^{n}({w}) != {w}"
            if w.count("1") >= 2:
                d1 = words.major_index(image[w]) - words.major_index(w)
                d2 = words.major_index(image[image[w]]) - words.major_index(image[w])
                if (d1 - d2) % n or d1 % n == 0:
                    return False, f"major index step fails at {w}"
    return True, f"lengths <= {top}"


def check_straightened(rng, scale):
    for d in range(2, 5):
        for j in range(8):
            for k in range(8 - j):
                if words.count_straightened_exhaustive(d, j, k) != qcomb.binomial(j + k, k):
                    return False, f"d={d}, j={j}, k={k}"
    return True, "d <= 4, j + k <= 7"


def check_subset(rng, scale):
    top = _sz(20, scale, 6)
    for j in range(1, top + 1):
        for n in range(1, j + 1):
            if subset.subset_sum_table(n, j) != subset.subset_sum_brute(n, j):
                return False, f"n={n}, j={j}"
    return True, f"j <= {top}"


CHECKS: dict[str, Check] = {
    "number-theory": check_number_theory,
    "reconstruction": check_reconstruction,
    "crt": check_crt,
    "canonical": check_canonical,
    "invariant": check_invariant,
    "qmultinomial": check_qmultinomial,
    "catalan": check_catalan,
    "catalan-residue": check_catalan_residue,
    "delta": check_delta,
    "straightened": check_straightened,
    "subsetsum": check_subset,
}


def run(names=None, seed: int = 0, scale: float = 1.0):
    """Yield ``(name, ok, detail)`` for each selected check, in a fixed order."""
    for name, fn in CHECKS.items():
        if names and name not in names:
            continue
        ok, detail = fn(random.Random(f"{seed}:{name}"), scale)
        yield name, ok, detail

