"""Binary words: major index, rotations, the delta action, rigid Dyck words.

Words are plain strings over ``"01"``.  Positions in the definitions are
1-based; that convention is confined to :func:`major_index` and
:func:`descent_count`.  A word is *flat* when it has at least as many zeros
as ones, and *Dyck* when every prefix is flat.
"""

from __future__ import annotations

import math
from itertools import combinations
from typing import Iterable, Iterator, Sequence, Union

from .errors import EmptyWord, LengthNotDivisible, NotFlatNonDyck
from .poly import Polynomial

Word = str
WordLike = Union[str, Sequence[int]]


def as_word(w: WordLike) -> Word:
    if not isinstance(w, str):
        w = "".join(str(int(c)) for c in w)
    if w.strip("01"):
        raise ValueError(f"not a binary word: {w!r}")
    return w


def is_flat(w: WordLike) -> bool:
    w = as_word(w)
    return w.count("1") <= w.count("0")


def is_dyck(w: WordLike) -> bool:
    bal = 0
    for ch in as_word(w):
        bal += 1 if ch == "0" else -1
        if bal < 0:
            return False
    return True


def major_index(w: WordLike) -> int:
    w = as_word(w)
    return sum(i for i in range(1, len(w)) if w[i - 1] == "1" and w[i] == "0")


def descent_count(w: WordLike) -> int:
    w = as_word(w)
    count = sum(1 for i in range(1, len(w)) if w[i - 1] == "1" and w[i] == "0")
    if w and w[-1] == "1" and w[0] == "0":
        count += 1
    return count


def gamma(w: WordLike) -> Word:
    """Move the final letter to the front."""
    w = as_word(w)
    if not w:
        raise EmptyWord("gamma of the empty word")
    return w[-1] + w[:-1]


def gamma_inv(w: WordLike) -> Word:
    w = as_word(w)
    if not w:
        raise EmptyWord("gamma_inv of the empty word")
    return w[1:] + w[0]


def _require_flat_non_dyck(w: Word) -> None:
    if not is_flat(w) or is_dyck(w):
        raise NotFlatNonDyck(f"{w!r} is not a flat non-Dyck word")


def _swap(w: Word, i: int, j: int) -> Word:
    chars = list(w)
    chars[i], chars[j] = chars[j], chars[i]
    return "".join(chars)


def delta(w: WordLike) -> Word:
    """Rotate right; if that lands on a Dyck word, swap its first letter with
    the letter closing the shortest balanced prefix."""
    w = as_word(w)
    _require_flat_non_dyck(w)
    g = gamma(w)
    if not is_dyck(g):
        return g
    bal = 0
    for k, ch in enumerate(g):
        bal += 1 if ch == "0" else -1
        if bal == 0:
            break
    else:
        raise AssertionError(f"no balanced prefix in {g!r}")
    return _swap(g, 0, k)


def delta_inv(w: WordLike) -> Word:
    w = as_word(w)
    _require_flat_non_dyck(w)
    if w[0] == "0":
        return gamma_inv(w)
    excess, peak, last = 0, 0, 0
    for p, ch in enumerate(w, 1):
        excess += 1 if ch == "1" else -1
        peak = max(peak, excess)
        if excess >= 1 and p < len(w):
            last = p
    if peak >= 2:
        return gamma_inv(w)
    # last = longest proper prefix with more ones than zeros; the next letter is 0
    return gamma_inv(_swap(w, 0, last))


def delta_orbit(w: WordLike) -> list[Word]:
    """``[w, delta(w), ..., delta^(n-1)(w)]`` for a word of length n."""
    w = as_word(w)
    _require_flat_non_dyck(w)
    out = [w]
    for _ in range(len(w) - 1):
        out.append(delta(out[-1]))
    return out


def delta_period(w: WordLike) -> int:
    """Smallest m >= 1 with delta^m(w) = w."""
    w = as_word(w)
    cur, m = delta(w), 1
    while cur != w:
        cur, m = delta(cur), m + 1
    return m


# -- generation ------------------------------------------------------------


def words(ones: int, zeros: int) -> Iterator[Word]:
    """All words with the given letter counts, in lexicographic order."""
    n = ones + zeros
    if ones < 0 or zeros < 0:
        return
    for pos in combinations(range(n), zeros):
        chars = ["1"] * n
        for p in pos:
            chars[p] = "0"
        yield "".join(chars)


def dyck_words(ones: int, zeros: int) -> Iterator[Word]:
    """All Dyck words with the given letter counts, pruning non-flat prefixes."""
    if ones > zeros or ones < 0:
        return

    def rec(prefix: str, o: int, z: int) -> Iterator[Word]:
        if o == ones and z == zeros:
            yield prefix
            return
        if z < zeros:
            yield from rec(prefix + "0", o, z + 1)
        if o < ones and o + 1 <= z:
            yield from rec(prefix + "1", o + 1, z)

    yield from rec("", 0, 0)


def flat_non_dyck_words(length: int) -> Iterator[Word]:
    for ones in range(1, length // 2 + 1):
        for w in words(ones, length - ones):
            if not is_dyck(w):
                yield w


def delta_class_count(length: int) -> int:
    """Number of delta-orbits on flat non-Dyck words of the given length."""
    seen: set[Word] = set()
    classes = 0
    for w in flat_non_dyck_words(length):
        if w in seen:
            continue
        classes += 1
        cur = w
        while cur not in seen:
            seen.add(cur)
            cur = delta(cur)
    return classes


def major_gf(ws: Iterable[WordLike]) -> Polynomial:
    """Sum of q^(major index) over the given words."""
    counts: dict[int, int] = {}
    for w in ws:
        m = major_index(w)
        counts[m] = counts.get(m, 0) + 1
    return Polynomial.from_terms(counts)


def enumerate_major(kind: str, ones: int, zeros: int) -> Polynomial:
    """Major-index generating function over all, flat, or Dyck words."""
    if kind == "all":
        return major_gf(words(ones, zeros))
    if kind == "flat":
        return major_gf(words(ones, zeros)) if ones <= zeros else Polynomial()
    if kind == "dyck":
        return major_gf(dyck_words(ones, zeros))
    raise ValueError(f"unknown kind {kind!r}")


# -- rigid and straightened words ------------------------------------------


def _blocks(w: Word, d: int) -> list[str]:
    if d < 2:
        raise ValueError("d must be at least 2")
    if len(w) % d:
        raise LengthNotDivisible(f"length {len(w)} is not a multiple of {d}")
    return [w[k : k + d] for k in range(0, len(w), d)]


def _rigid_blocks(w: Word, d: int):
    """List of (block, kind) with kind in {"zeros", "ones", 2, 3}, or None.

    Checks the block shapes and balance conditions only, not Dyckness.
    """
    out = []
    bal = 0  # zeros minus ones so far
    for b in _blocks(w, d):
        ones = b.count("1")
        after = bal + d - 2 * ones
        if ones == 0:
            kind = "zeros"
        elif ones == d:
            kind = "ones"
        elif ones == 1:
            if bal != 0:
                return None
            kind = 2
        elif ones == d - 1:
            if after != 0:
                return None
            kind = 3
        else:
            return None
        out.append((b, kind))
        bal = after
    return out


def is_d_rigid(w: WordLike, d: int) -> bool:
    """Block conditions for d-rigidity.

    Dyckness is not required here, so ``000111010000111110`` counts as
    3-rigid; callers working with Dyck words check that separately.
    """
    w = as_word(w)
    return _rigid_blocks(w, d) is not None


def is_d_straightened(w: WordLike, d: int) -> bool:
    w = as_word(w)
    blocks = _rigid_blocks(w, d)
    if blocks is not None and not is_dyck(w):
        return False
    if blocks is None:
        return False
    for b, kind in blocks:
        if kind == 2 and b[-1] != "1":
            return False
        if kind == 3 and b[0] != "0":
            return False
    return True


def _block_candidates(d: int) -> list[str]:
    out = {"0" * d, "1" * d}
    for p in range(d):
        out.add("0" * p + "1" + "0" * (d - p - 1))
        out.add("1" * p + "0" + "1" * (d - p - 1))
    return sorted(out)


def rigid_dyck_words(d: int, ones: int, zeros: int) -> Iterator[Word]:
    """All d-rigid Dyck words with the given letter counts.

    Builds words block by block from every block shape the definition
    allows, keeping only prefixes that are Dyck and satisfy the balance
    conditions; the final filter re-checks with :func:`is_d_rigid`.
    """
    if d < 2:
        raise ValueError("d must be at least 2")
    if (ones + zeros) % d:
        raise LengthNotDivisible(f"{ones}+{zeros} is not a multiple of {d}")
    cands = _block_candidates(d)

    def rec(prefix: str, o: int, z: int) -> Iterator[Word]:
        if o == ones and z == zeros:
            if is_dyck(prefix) and is_d_rigid(prefix, d):
                yield prefix
            return
        for b in cands:
            bo = b.count("1")
            if o + bo > ones or z + d - bo > zeros:
                continue
            cand = prefix + b
            if is_dyck(cand) and _rigid_blocks(cand, d) is not None:
                yield from rec(cand, o + bo, z + d - bo)

    yield from rec("", 0, 0)


def enumerate_rigid_major(n: int, ones: int, zeros: int) -> Polynomial:
    """Major-index generating function over n-rigid Dyck words."""
    return major_gf(rigid_dyck_words(n, ones, zeros))


def straightened_count(d: int, ones: int, zeros: int) -> int:
    """Number of d-straightened Dyck words with the given letter counts (by generation)."""
    return sum(1 for w in rigid_dyck_words(d, ones, zeros) if is_d_straightened(w, d))


def straightened_letter_counts(d: int, j: int, k: int) -> tuple[int, int]:
    """(ones, zeros) of the words counted by count_straightened(d, j, k)."""
    if j >= k:
        return d * k, d * j
    return d * j + 1, d * k - 1


def count_straightened(d: int, j: int, k: int) -> int:
    """Number of d-straightened Dyck words in the (j, k) family: binomial(j + k, k)."""
    if d < 2 or j < 0 or k < 0:
        raise ValueError("need d >= 2 and j, k >= 0")
    return math.comb(j + k, k)


def count_straightened_exhaustive(d: int, j: int, k: int) -> int:
    ones, zeros = straightened_letter_counts(d, j, k)
    return straightened_count(d, ones, zeros)
