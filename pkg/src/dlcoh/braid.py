"""
Type A_n Coxeter group and positive braid monoid.

Permutations of {0, ..., n} are tuples in one-line notation. The generator
s_i (1 <= i <= n) acts on the right by swapping positions i-1 and i, and on the
left by swapping the values i-1 and i. A positive braid word is a tuple of
generator indices.

Garside normal forms use the classical Garside structure: simple elements are
the permutations (reduced lifts), the Garside element is the half-twist w_0, and
a factorization a_1 a_2 ... a_k is left-greedy when the right descent set of
each a_i contains the left descent set of a_{i+1}. Identity factors are dropped.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

__all__ = [
    "Permutation", "BraidWord", "GarsideNF",
    "identity", "perm_of_word", "length", "reduced_word", "left_descents", "right_descents",
    "longest_element", "v_d_word", "j_d_set", "half_twist", "pi_word", "pi_sub",
    "garside_nf", "braid_equal", "PeriodicityReport", "periodicity_check",
    "min_coset_reps", "suffix_product",
]

Permutation = tuple[int, ...]


def identity(n: int) -> Permutation:
    return tuple(range(n + 1))


def _rmul(w: Permutation, i: int) -> Permutation:
    w = list(w)
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def _lmul(i: int, w: Permutation) -> Permutation:
    swap = {i - 1: i, i: i - 1}
    return tuple(swap.get(v, v) for v in w)


def compose(u: Permutation, v: Permutation) -> Permutation:
    """The product uv, so that perm_of_word(a + b) == compose(perm_of_word(a), perm_of_word(b))."""
    return tuple(u[j] for j in v)


def inverse(w: Permutation) -> Permutation:
    out = [0] * len(w)
    for pos, val in enumerate(w):
        out[val] = pos
    return tuple(out)


def perm_of_word(word: Iterable[int], n: int) -> Permutation:
    w = identity(n)
    for i in word:
        w = _rmul(w, i)
    return w


def length(w: Permutation) -> int:
    return sum(1 for a, b in itertools.combinations(w, 2) if a > b)


def right_descents(w: Permutation) -> frozenset[int]:
    return frozenset(i for i in range(1, len(w)) if w[i - 1] > w[i])


def left_descents(w: Permutation) -> frozenset[int]:
    return right_descents(inverse(w))


def reduced_word(w: Permutation) -> tuple[int, ...]:
    word = []
    while True:
        desc = right_descents(w)
        if not desc:
            return tuple(reversed(word))
        i = min(desc)
        word.append(i)
        w = _rmul(w, i)


def longest_element(n: int) -> Permutation:
    return tuple(range(n, -1, -1))


@dataclass(frozen=True)
class BraidWord:
    word: tuple[int, ...]
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("rank must be at least 1")
        bad = [i for i in self.word if not 1 <= i <= self.n]
        if bad:
            raise ValueError(f"generator indices {bad} outside 1..{self.n}")

    def __add__(self, other: BraidWord) -> BraidWord:
        if other.n != self.n:
            raise ValueError("rank mismatch")
        return BraidWord(self.word + other.word, self.n)

    def __mul__(self, k: int) -> BraidWord:
        return BraidWord(self.word * k, self.n)

    def __len__(self) -> int:
        return len(self.word)

    @classmethod
    def parse(cls, text: str, n: int) -> BraidWord:
        return cls(tuple(int(t) for t in text.split()), n)

    def __str__(self) -> str:
        return " ".join(map(str, self.word))


@dataclass(frozen=True)
class GarsideNF:
    factors: tuple[Permutation, ...]
    n: int

    def __str__(self) -> str:
        return "[" + ", ".join("[" + " ".join(map(str, f)) + "]" for f in self.factors) + "]"


def v_d_word(n: int, d: int) -> BraidWord:
    """s_1 s_2 ... s_{n - floor(d/2)} s_n s_{n-1} ... s_{floor((d+1)/2)}."""
    if not 1 <= d <= n + 1:
        raise ValueError(f"d = {d} outside 1..{n + 1}")
    up = range(1, n - d // 2 + 1)
    down = range(n, (d + 1) // 2 - 1, -1)
    return BraidWord(tuple(up) + tuple(down), n)


def j_d_set(n: int, d: int) -> frozenset[int]:
    if not 1 <= d <= n + 1:
        raise ValueError(f"d = {d} outside 1..{n + 1}")
    return frozenset(range((d + 1) // 2 + 1, n - d // 2 + 1))


def half_twist(n: int) -> BraidWord:
    return BraidWord(reduced_word(longest_element(n)), n)


def pi_word(n: int) -> BraidWord:
    return half_twist(n) * 2


def pi_sub(I: Iterable[int], n: int) -> BraidWord:
    """Lift of the square of the longest element of the parabolic subgroup W_I."""
    I = sorted(set(I))
    word: list[int] = []
    # connected components of I are independent type A blocks
    for _, grp in itertools.groupby(enumerate(I), key=lambda t: t[1] - t[0]):
        block = [i for _, i in grp]
        lo, r = block[0], len(block)
        w0 = reduced_word(longest_element(r))
        word.extend(lo - 1 + i for i in w0)
    return BraidWord(tuple(word) * 2, n)


def _normalize_pair(a: Permutation, b: Permutation) -> tuple[Permutation, Permutation]:
    # slide generators from the left of b to the right of a until L(b) is inside R(a)
    while True:
        moves = left_descents(b) - right_descents(a)
        if not moves:
            return a, b
        i = min(moves)
        a, b = _rmul(a, i), _lmul(i, b)


@lru_cache(maxsize=65536)
def _nf_factors(word: tuple[int, ...], n: int) -> tuple[Permutation, ...]:
    e = identity(n)
    factors: list[Permutation] = []
    for i in word:
        factors.append(_rmul(e, i))
        # right end was normal before the append, so sweeping leftwards suffices
        for j in range(len(factors) - 2, -1, -1):
            a, b = _normalize_pair(factors[j], factors[j + 1])
            if (a, b) == (factors[j], factors[j + 1]):
                break
            factors[j], factors[j + 1] = a, b
        while factors and factors[-1] == e:
            factors.pop()
    return tuple(factors)


def garside_nf(w: BraidWord) -> GarsideNF:
    return GarsideNF(_nf_factors(tuple(w.word), w.n), w.n)


def braid_equal(u: BraidWord, v: BraidWord) -> bool:
    return garside_nf(u) == garside_nf(v)


def is_left_greedy(nf: GarsideNF) -> bool:
    e = identity(nf.n)
    if any(f == e for f in nf.factors):
        return False
    return all(left_descents(b) <= right_descents(a) for a, b in zip(nf.factors, nf.factors[1:]))


@dataclass(frozen=True)
class PeriodicityReport:
    n: int
    d: int
    word_length: int
    expected_length: int
    weyl_length: int
    left_product_ok: bool    # v_d^d . pi_J == pi
    right_product_ok: bool   # pi_J . v_d^d == pi
    normalizes_j: bool

    @property
    def word_length_ok(self) -> bool:
        return self.word_length == self.expected_length

    @property
    def passed(self) -> bool:
        return self.left_product_ok and self.word_length_ok and self.normalizes_j

    def as_dict(self) -> dict:
        return {
            "n": self.n, "d": self.d,
            "word_length": self.word_length, "expected_length": self.expected_length,
            "weyl_length": self.weyl_length,
            "left_product_ok": self.left_product_ok, "right_product_ok": self.right_product_ok,
            "normalizes_j": self.normalizes_j,
        }


def normalizes(v: Permutation, J: Iterable[int], n: int) -> bool:
    """Whether v s_j v^{-1} is again a simple reflection of J for every j in J."""
    J = set(J)
    vi = inverse(v)
    simple = {perm_of_word((j,), n): j for j in J}
    return all(compose(compose(v, perm_of_word((j,), n)), vi) in simple for j in J)


def periodicity_check(n: int, d: int) -> PeriodicityReport:
    v = v_d_word(n, d)
    J = j_d_set(n, d)
    power = v * d
    pi = garside_nf(pi_word(n))
    pij = pi_sub(J, n)
    image = perm_of_word(v.word, n)
    return PeriodicityReport(
        n=n, d=d,
        word_length=len(v), expected_length=2 * n + 1 - d,
        weyl_length=length(image),
        left_product_ok=garside_nf(power + pij) == pi,
        right_product_ok=garside_nf(pij + power) == pi,
        normalizes_j=normalizes(image, J, n),
    )


def suffix_product(n: int, i: int) -> Permutation:
    """s_n s_{n-1} ... s_i; i = n + 1 gives the identity."""
    return perm_of_word(range(n, i - 1, -1), n)


def min_coset_reps(I: Iterable[int], J: Iterable[int], n: int) -> list[Permutation]:
    """Minimal length representatives of W_I \\ W / W_J, sorted by length then one-line form."""
    I, J = frozenset(I), frozenset(J)
    reps = [w for w in itertools.permutations(range(n + 1))
            if not (left_descents(w) & I) and not (right_descents(w) & J)]
    return sorted(reps, key=lambda w: (length(w), w))


def rewrite_neighbours(word: Sequence[int]) -> Iterable[tuple[int, ...]]:
    """All words obtained by one application of a braid or commutation relation."""
    word = tuple(word)
    for k in range(len(word) - 1):
        a, b = word[k], word[k + 1]
        if abs(a - b) >= 2:
            yield word[:k] + (b, a) + word[k + 2:]
    for k in range(len(word) - 2):
        a, b, c = word[k:k + 3]
        if a == c and abs(a - b) == 1:
            yield word[:k] + (b, a, b) + word[k + 3:]
