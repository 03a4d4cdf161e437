"""
Partitions, beta-sets and hook combinatorics.

A partition is stored as a weakly decreasing tuple of positive integers. A
beta-set is a strictly increasing tuple of non-negative integers; the partition
it encodes is recovered by subtracting the staircase 0, 1, 2, ... and dropping
zeros, so padding a beta-set with extra low entries (a shift) never changes the
partition.

Adding a d-hook to a partition corresponds to replacing an entry x of a beta-set
by x + d, provided x + d is not already present. Removing d-hooks until none is
left gives the d-core.

>>> X = beta_set(Partition((1,)), 2)
>>> X
BetaSet(0, 1, 3)
>>> sorted(addable_hooks(X, 2))
[0, 3]
>>> Y, hook = add_hook(X, 0, 2)
>>> partition_of(Y), hook.leg_length
(Partition(1, 1, 1), 1)
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

__all__ = [
    "Partition", "BetaSet", "HookAddition",
    "beta_set", "partition_of", "shift",
    "addable_hooks", "add_hook", "d_core", "same_block", "has_core",
    "restrictions", "partitions", "parse_partition", "rim_hook_leg",
]


class Partition(tuple):
    """Weakly decreasing tuple of positive integers.

    Any iterable of non-negative integers is accepted in either order; zeros are
    dropped and the parts are sorted decreasing. The empty partition is ``Partition()``.
    """

    def __new__(cls, parts: Iterable[int] = ()):
        parts = [int(p) for p in parts]
        if any(p < 0 for p in parts):
            raise ValueError(f"negative part in {parts!r}")
        return super().__new__(cls, sorted((p for p in parts if p), reverse=True))

    @property
    def size(self) -> int:
        return sum(self)

    def conjugate(self) -> Partition:
        if not self:
            return Partition()
        return Partition(sum(1 for p in self if p > j) for j in range(self[0]))

    def cells(self) -> Iterator[tuple[int, int]]:
        for i, p in enumerate(self):
            for j in range(p):
                yield i, j

    def hooks(self) -> list[int]:
        """Hook lengths of all cells."""
        conj = self.conjugate()
        return [self[i] - j + conj[j] - i - 1 for i, j in self.cells()]

    def n_statistic(self) -> int:
        """n(lambda) = sum (i-1) lambda_i."""
        return sum(i * p for i, p in enumerate(self))

    def __repr__(self) -> str:
        return f"Partition({', '.join(map(str, self))})"

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self)) + ")" if self else "()"


class BetaSet(tuple):
    """Strictly increasing tuple of non-negative integers."""

    def __new__(cls, entries: Iterable[int] = ()):
        entries = sorted(int(x) for x in entries)
        if entries and entries[0] < 0:
            raise ValueError("beta-set entries must be non-negative")
        if any(a == b for a, b in zip(entries, entries[1:])):
            raise ValueError(f"repeated entry in beta-set {entries!r}")
        return super().__new__(cls, entries)

    @property
    def s(self) -> int:
        return len(self)

    def __repr__(self) -> str:
        return f"BetaSet({', '.join(map(str, self))})"

    def __str__(self) -> str:
        return "[" + ", ".join(map(str, self)) + "]"


@dataclass(frozen=True)
class HookAddition:
    x: int
    d: int
    leg_length: int


def beta_set(mu: Partition, pad: int = 0) -> BetaSet:
    """Beta-set of ``mu`` with ``pad`` extra entries 0, ..., pad-1 at the bottom."""
    if pad < 0:
        raise ValueError("pad must be non-negative")
    mu = Partition(mu)
    k = len(mu)
    return BetaSet(list(range(pad)) + [p + (k - 1 - i) + pad for i, p in enumerate(mu)])


def partition_of(X: Iterable[int]) -> Partition:
    X = sorted(X)
    return Partition(x - i for i, x in enumerate(X))


def shift(X: Iterable[int], k: int) -> BetaSet:
    """Add k low entries: {0..k-1} together with X + k."""
    return BetaSet(list(range(k)) + [x + k for x in X])


def addable_hooks(X: BetaSet, d: int) -> set[int]:
    if d < 1:
        raise ValueError("d must be positive")
    members = set(X)
    return {x for x in X if x + d not in members}


def add_hook(X: BetaSet, x: int, d: int) -> tuple[BetaSet, HookAddition]:
    """Replace ``x`` by ``x + d``; the leg length is the number of entries jumped over."""
    members = set(X)
    if x not in members:
        raise ValueError(f"{x} is not an entry of {X}")
    if x + d in members:
        raise ValueError(f"{x + d} is already an entry of {X}")
    leg = sum(1 for y in X if x < y < x + d)
    Y = BetaSet((members - {x}) | {x + d})
    return Y, HookAddition(x, d, leg)


def _remove_hooks(X: BetaSet, d: int) -> BetaSet:
    members = set(X)
    while True:
        movable = [x for x in members if x >= d and x - d not in members]
        if not movable:
            return BetaSet(members)
        x = max(movable)
        members.remove(x)
        members.add(x - d)


@lru_cache(maxsize=None)
def d_core(lam: Partition, d: int) -> Partition:
    if d < 1:
        raise ValueError("d must be positive")
    return partition_of(_remove_hooks(beta_set(lam, 0), d))


def has_core(lam: Partition, nu: Partition, d: int) -> bool:
    """True iff ``nu`` is the d-core of ``lam``."""
    return d_core(Partition(lam), d) == Partition(nu)


def same_block(lam: Partition, nu: Partition, d: int) -> bool:
    """True iff ``lam`` and ``nu`` have the same d-core."""
    return d_core(Partition(lam), d) == d_core(Partition(nu), d)


@lru_cache(maxsize=None)
def restrictions(mu: Partition) -> tuple[Partition, ...]:
    """Partitions obtained by removing one corner box, largest first."""
    mu = Partition(mu)
    if not mu:
        raise ValueError("the empty partition has no restrictions")
    out = []
    for i, p in enumerate(mu):
        if i + 1 == len(mu) or mu[i + 1] < p:
            out.append(Partition(mu[:i] + (p - 1,) + mu[i + 1:]))
    return tuple(out)


@lru_cache(maxsize=None)
def partitions(m: int) -> tuple[Partition, ...]:
    """All partitions of m in reverse lexicographic order, starting with (m)."""
    if m < 0:
        return ()

    def gen(rest: int, largest: int) -> Iterator[tuple[int, ...]]:
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, largest), 0, -1):
            for tail in gen(rest - first, first):
                yield (first,) + tail

    return tuple(Partition(p) for p in gen(m, m))


def parse_partition(text: str) -> Partition:
    """Parse ``"2,1"`` (or ``"1,2"``); the empty string and ``"0"`` give the empty partition."""
    text = text.strip().strip("()[]")
    if not text:
        return Partition()
    return Partition(int(t) for t in text.replace(" ", "").split(",") if t)



def rim_hook_leg(lam: Partition, mu: Partition) -> int:
    """Leg length of the skew shape lam / mu read off the Young diagram (rows spanned minus one).

    Only meaningful when lam / mu is a rim hook.
    """
    lam, mu = Partition(lam), Partition(mu)
    padded = list(mu) + [0] * (len(lam) - len(mu))
    if len(padded) > len(lam) or any(m > l for l, m in zip(lam, padded)):
        raise ValueError(f"{mu} is not contained in {lam}")
    rows = sum(1 for l, m in zip(lam, padded) if l > m)
    return rows - 1
