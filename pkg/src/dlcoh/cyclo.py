"""
Generic degrees of unipotent characters of GL_N(q) in factored cyclotomic form,
and Craven's function on such products.

Everything is kept as ``scalar * q^a * prod Phi_e(q)^{m_e}``; polynomials are
only expanded on request. The roots of ``Phi_e`` are the primitive e-th roots of
unity exp(2 pi i j / e) with gcd(j, e) = 1, so comparing their arguments with
that of a root of unity zeta = exp(2 pi i k / d) reduces to comparing the
fractions j/e and k/d.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .partitions import Partition

__all__ = [
    "CycloPolynomial", "ZetaSpec", "divisors", "totient", "cyclotomic_coefficients",
    "generic_degree", "a_A", "a_plus_A", "mul", "div", "arg_count", "craven_C", "craven_delta",
]


@lru_cache(maxsize=None)
def divisors(k: int) -> tuple[int, ...]:
    return tuple(e for e in range(1, k + 1) if k % e == 0)


@lru_cache(maxsize=None)
def totient(e: int) -> int:
    return sum(1 for j in range(e) if gcd(j, e) == 1)


@lru_cache(maxsize=None)
def cyclotomic_coefficients(e: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_e, constant term first."""
    # q^e - 1 divided exactly by Phi_f for every proper divisor f
    num = [-1] + [0] * (e - 1) + [1]
    for f in divisors(e)[:-1]:
        num = _exact_div(num, cyclotomic_coefficients(f))
    return tuple(num)


def _exact_div(num: list[int], den: tuple[int, ...]) -> list[int]:
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + len(den) - 1]  # den is monic
        out[i] = c
        for j, b in enumerate(den):
            num[i + j] -= c * b
    assert not any(num), "inexact cyclotomic division"
    return out


def _poly_mul(a: list[int], b: tuple[int, ...] | list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


@dataclass(frozen=True)
class CycloPolynomial:
    """``scalar * q^q_power * prod_e Phi_e(q)^{m_e}``.

    ``cyclo_mult`` never stores zero multiplicities, so equal values compare equal.
    Negative multiplicities and a negative ``q_power`` are allowed for quotients.
    """

    q_power: int = 0
    scalar: Fraction = Fraction(1)
    cyclo_mult: tuple[tuple[int, int], ...] = field(default=())

    @classmethod
    def make(cls, q_power: int = 0, scalar=1, mult: dict[int, int] | None = None) -> CycloPolynomial:
        items = tuple(sorted((e, m) for e, m in (mult or {}).items() if m))
        if any(e < 1 for e, _ in items):
            raise ValueError("cyclotomic indices start at 1")
        return cls(q_power, Fraction(scalar), items)

    @classmethod
    def q_minus_one_power(cls, k: int) -> CycloPolynomial:
        """q^k - 1 as a product of cyclotomic polynomials."""
        return cls.make(0, 1, {e: 1 for e in divisors(k)})

    @property
    def mult(self) -> dict[int, int]:
        return dict(self.cyclo_mult)

    def multiplicity(self, e: int) -> int:
        return self.mult.get(e, 0)

    @property
    def is_finalized(self) -> bool:
        return self.q_power >= 0 and self.scalar > 0 and all(m >= 0 for _, m in self.cyclo_mult)

    @property
    def degree(self) -> int:
        return self.q_power + sum(m * totient(e) for e, m in self.cyclo_mult)

    @property
    def valuation(self) -> int:
        return self.q_power

    def __mul__(self, other: CycloPolynomial) -> CycloPolynomial:
        m = Counter(self.mult)
        m.update(other.mult)
        return CycloPolynomial.make(self.q_power + other.q_power, self.scalar * other.scalar, m)

    def __truediv__(self, other: CycloPolynomial) -> CycloPolynomial:
        m = Counter(self.mult)
        m.subtract(other.mult)
        return CycloPolynomial.make(self.q_power - other.q_power, self.scalar / other.scalar, m)

    def coefficients(self) -> list[Fraction]:
        """Expanded coefficient list, constant term first (finalized values only)."""
        if not self.is_finalized:
            raise ValueError("only finalized products can be expanded")
        poly = [0] * self.q_power + [1]
        for e, m in self.cyclo_mult:
            for _ in range(m):
                poly = _poly_mul(poly, cyclotomic_coefficients(e))
        return [self.scalar * c for c in poly]

    def __call__(self, q) -> Fraction:
        """Evaluate at an exact number q."""
        value = self.scalar * Fraction(q) ** self.q_power
        for e, m in self.cyclo_mult:
            phi = sum(c * Fraction(q) ** i for i, c in enumerate(cyclotomic_coefficients(e)))
            value *= phi ** m
        return value

    def __str__(self) -> str:
        terms = []
        if self.scalar != 1 or (not self.q_power and not self.cyclo_mult):
            terms.append(str(self.scalar))
        if self.q_power:
            terms.append("q" if self.q_power == 1 else f"q^{self.q_power}")
        for e, m in self.cyclo_mult:
            terms.append(f"Phi_{e}" if m == 1 else f"Phi_{e}^{m}")
        return " * ".join(terms)


ONE = CycloPolynomial()


def mul(P: CycloPolynomial, Q: CycloPolynomial) -> CycloPolynomial:
    return P * Q


def div(P: CycloPolynomial, Q: CycloPolynomial) -> CycloPolynomial:
    return P / Q


@dataclass(frozen=True)
class ZetaSpec:
    """zeta = exp(2 pi i k / d), a primitive d-th root of unity.

    ``ZetaSpec(1, 1)`` is allowed and stands for the d = 1 case of Craven's
    function, where every root has argument below the threshold 2 pi.
    """

    k: int
    d: int

    def __post_init__(self):
        if self.d < 1 or not 1 <= self.k <= self.d or gcd(self.k, self.d) != 1:
            raise ValueError(f"exp(2 pi i {self.k}/{self.d}) is not a valid primitive root")
        if self.k == self.d and self.d != 1:
            raise ValueError("k must be smaller than d")

    @classmethod
    def primitive(cls, d: int) -> ZetaSpec:
        return cls(1, d)

    @property
    def threshold(self) -> Fraction:
        """Arg(zeta) / 2 pi, except that d = 1 gives the full turn."""
        return Fraction(self.k, self.d)


@lru_cache(maxsize=None)
def _roots_below(e: int, threshold: Fraction) -> int:
    return sum(1 for j in range(e) if gcd(j, e) == 1 and Fraction(j, e) < threshold)


def arg_count(P: CycloPolynomial, zeta: ZetaSpec) -> int:
    """Number of roots (with multiplicity) of argument strictly below Arg zeta."""
    t = zeta.threshold
    return sum(m * _roots_below(e, t) for e, m in P.cyclo_mult)


def craven_C(P: CycloPolynomial, zeta: ZetaSpec) -> Fraction:
    return (zeta.threshold * (P.degree + P.valuation)
            + arg_count(P, zeta)
            - Fraction(P.multiplicity(1), 2))


@lru_cache(maxsize=None)
def generic_degree(lam: Partition) -> CycloPolynomial:
    """Degree of the unipotent character of GL_N(q) labelled by ``lam`` (q-hook formula)."""
    lam = Partition(lam)
    if not lam:
        raise ValueError("generic degree needs a non-empty partition")
    m = Counter()
    for k in range(1, lam.size + 1):
        m.update(divisors(k))
    for h in lam.hooks():
        m.subtract(divisors(h))
    P = CycloPolynomial.make(lam.n_statistic(), 1, m)
    if not P.is_finalized or P.scalar != 1:
        raise ArithmeticError(f"hook formula did not give a polynomial for {lam}")
    return P


def _degree_or_one(lam: Partition) -> CycloPolynomial:
    # the empty partition labels the trivial group, of degree 1
    return generic_degree(Partition(lam)) if lam else ONE


def a_A(P: CycloPolynomial) -> tuple[int, int]:
    return P.valuation, P.degree


def craven_delta(lam: Partition, mu: Partition, zeta: ZetaSpec) -> Fraction:
    return craven_C(_degree_or_one(lam), zeta) - craven_C(_degree_or_one(mu), zeta)


def a_plus_A(lam: Partition) -> int:
    a, A = a_A(_degree_or_one(lam))
    return a + A
