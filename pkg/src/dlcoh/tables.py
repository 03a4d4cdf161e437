"""
Conjectural compact-support cohomology tables of the parabolic Deligne-Lusztig
varieties X_{n,d} of type A_n, of X(pi), and of the varieties attached to whole
Phi_d-blocks, together with the consistency checks the induction argument needs.

A table is a multiset of entries (lambda, degree, frobenius exponent): the
unipotent character chi_lambda occurring in H_c^degree, where F acts by
q^{frobenius exponent}. The local system F_mu only appears as the label ``mu``.
"""

from __future__ import annotations

import dataclasses
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple

from .cyclo import ZetaSpec, a_A, a_plus_A, craven_delta, generic_degree
from .partitions import (
    BetaSet, Partition, add_hook, addable_hooks, beta_set, partition_of, partitions,
    restrictions,
)

__all__ = [
    "TableEntry", "CohomologyTable", "GradedCharacter",
    "dim_xnd", "pi_gamma", "conja_table", "hc_restrict", "gm_product", "shift_twist",
    "TriangleReport", "triangle_check", "pi_variety_table", "block_table", "block_dimension",
    "Conjecture1Report", "conjecture1_check", "UniquenessReport", "restriction_uniqueness_check",
    "branching_decompositions",
]

class TableEntry(NamedTuple):
    lam: Partition
    degree: int
    frob_exp: int
    multiplicity: int = 1


def _sort_key(e: TableEntry):
    return e.degree, e.frob_exp, tuple(e.lam)


def _entries(counts: Counter) -> tuple[TableEntry, ...]:
    if any(m < 0 for m in counts.values()):
        raise ValueError("negative multiplicity in a graded character")
    return tuple(sorted((TableEntry(Partition(k[0]), k[1], k[2], m)
                         for k, m in counts.items() if m), key=_sort_key))


class _Graded:
    entries: tuple[TableEntry, ...]

    def counts(self) -> Counter:
        return Counter({(e.lam, e.degree, e.frob_exp): e.multiplicity for e in self.entries})

    def characters(self) -> set[Partition]:
        return {e.lam for e in self.entries}

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)


@dataclass(frozen=True)
class GradedCharacter(_Graded):
    entries: tuple[TableEntry, ...] = ()

    @classmethod
    def from_counts(cls, counts: Counter) -> GradedCharacter:
        return cls(_entries(counts))

    def __add__(self, other: _Graded) -> GradedCharacter:
        return GradedCharacter.from_counts(self.counts() + other.counts())


@dataclass(frozen=True)
class CohomologyTable(_Graded):
    n: int
    d: int
    mu: Partition
    source: str  # xnd | pi | block | derived
    entries: tuple[TableEntry, ...] = field(default=())

    @classmethod
    def from_counts(cls, n: int, d: int, mu: Partition, source: str, counts: Counter) -> CohomologyTable:
        return cls(n, d, Partition(mu), source, _entries(counts))


def dim_xnd(n: int, d: int) -> int:
    if not 1 <= d <= n + 1:
        raise ValueError(f"d = {d} outside 1..{n + 1}")
    return 2 * n + 1 - d


def pi_gamma(X: BetaSet, x: int, d: int, n: int) -> tuple[int, int]:
    """Compact-support degree and Frobenius exponent of the hook added at ``x``."""
    if x not in addable_hooks(X, d):
        raise ValueError(f"{x} does not give an addable {d}-hook of {X}")
    below = sum(1 for y in X if y < x)
    between = sum(1 for y in X if x < y < x + d)
    return 2 * (n + x - below) - between, n + 1 + x - len(X)


def _pad(d: int, pad: int | None) -> int:
    if pad is None:
        return d
    if pad < d:
        raise ValueError(f"beta-set padding {pad} is smaller than d = {d}")
    return pad


def conja_table(n: int, d: int, mu: Partition, pad: int | None = None) -> CohomologyTable:
    """One entry (mu * x, pi_d(X, x), gamma_d(X, x)) for every addable d-hook x."""
    dim_xnd(n, d)
    mu = Partition(mu)
    if mu.size != n + 1 - d:
        raise ValueError(f"mu = {mu} should be a partition of {n + 1 - d}")
    X = beta_set(mu, _pad(d, pad))
    counts = Counter()
    for x in sorted(addable_hooks(X, d)):
        Y, _ = add_hook(X, x, d)
        counts[(partition_of(Y), *pi_gamma(X, x, d, n))] += 1
    table = CohomologyTable.from_counts(n, d, mu, "xnd", counts)
    assert len(table.characters()) == len(table.entries), "X_{n,d} table is not multiplicity-free"
    return table


def hc_restrict(table: _Graded) -> GradedCharacter:
    """Harish-Chandra restriction to GL_n x GL_1, entry by entry (one-box branching)."""
    counts = Counter()
    for e in table:
        for lam in restrictions(e.lam):
            counts[(lam, e.degree, e.frob_exp)] += e.multiplicity
    return GradedCharacter.from_counts(counts)


def gm_product(table: _Graded) -> GradedCharacter:
    """Kunneth with H_c(G_m): a copy in degree +1 and a copy in degree +2 twisted by q."""
    counts = Counter()
    for e in table:
        counts[(e.lam, e.degree + 1, e.frob_exp)] += e.multiplicity
        counts[(e.lam, e.degree + 2, e.frob_exp + 1)] += e.multiplicity
    return GradedCharacter.from_counts(counts)


def shift_twist(table, delta_deg: int, delta_exp: int):
    entries = tuple(e._replace(degree=e.degree + delta_deg, frob_exp=e.frob_exp + delta_exp)
                    for e in table)
    if isinstance(table, CohomologyTable):
        if (delta_deg, delta_exp) == (0, 0):
            return table
        return dataclasses.replace(table, source="derived", entries=entries)
    return GradedCharacter(entries)


# -- the distinguished triangle -------------------------------------------------------------

@dataclass(frozen=True)
class Cancellation:
    frob_exp: int
    lam: Partition
    r_degree: int
    l_degree: int
    count: int


@dataclass(frozen=True)
class TriangleReport:
    n: int
    d: int
    mu: Partition
    feasible: bool
    strict: bool
    exact_exponents: tuple[int, ...]
    cancellations: tuple[Cancellation, ...]
    witness: dict | None = None

    @property
    def passed(self) -> bool:
        return self.feasible and self.strict

    def as_dict(self) -> dict:
        out = {
            "n": self.n, "d": self.d, "mu": list(self.mu),
            "status": "pass" if self.passed else "fail",
            "feasible": self.feasible, "strict": self.strict,
            "exact_exponents": list(self.exact_exponents),
            "cancellations": [
                {"frobenius_exponent": c.frob_exp, "lambda": list(c.lam),
                 "r_degree": c.r_degree, "l_degree": c.l_degree, "count": c.count}
                for c in self.cancellations],
        }
        if self.witness is not None:
            out["witness"] = self.witness
        return out


def _connecting_ranks(l: dict, m: dict, r: dict) -> tuple[list[int], list[int]] | None:
    """Solve m_k = l_k + r_k - c_k - c_{k-1} for the ranks c_k of H^k(R) -> H^{k+1}(L).

    The ranks are forced degree by degree from the bottom; returns (degrees, ranks), or
    None if some forced rank is negative or exceeds min(r_k, l_{k+1}).
    """
    degrees = set(l) | set(m) | set(r)
    lo, hi = min(degrees) - 1, max(degrees) + 1
    ks = list(range(lo, hi + 1))
    ranks, prev = [], 0
    for k in ks:
        c = l.get(k, 0) + r.get(k, 0) - m.get(k, 0) - prev
        if c < 0 or c > min(r.get(k, 0), l.get(k + 1, 0)):
            return None
        ranks.append(c)
        prev = c
    return ks, ranks


def triangle_check(n: int, d: int, mu: Partition, pad: int | None = None) -> TriangleReport:
    """Check the Harish-Chandra restriction triangle at the level of bigraded characters.

    L = G_m x X_{n-1,d-1} with F_mu, M = restriction of X_{n,d} with F_mu, and
    R = X_{n-1,d} with the sum of the F_{mu^(j)}, shifted by [-2](1).
    """
    mu = Partition(mu)
    if not 2 <= d <= n:
        raise ValueError(f"the triangle needs 2 <= d <= n, got n = {n}, d = {d}")
    if mu.size != n + 1 - d:
        raise ValueError(f"mu = {mu} should be a partition of {n + 1 - d}")
    L = gm_product(conja_table(n - 1, d - 1, mu, pad))
    M = hc_restrict(conja_table(n, d, mu, pad))
    R = GradedCharacter()
    for mu_j in restrictions(mu):
        R = R + conja_table(n - 1, d, mu_j, pad)
    R = shift_twist(R, 2, 1)

    X = beta_set(mu, _pad(d, pad))
    exact = sorted(n + 1 + x - len(X) for x in addable_hooks(X, d))

    seqs: dict[tuple[Partition, int], tuple[dict, dict, dict]] = defaultdict(lambda: ({}, {}, {}))
    for slot, table in enumerate((L, M, R)):
        for e in table:
            seqs[(e.lam, e.frob_exp)][slot][e.degree] = e.multiplicity

    feasible, strict, witness = True, True, None
    cancellations = []
    for (lam, f) in sorted(seqs, key=lambda k: (k[1], tuple(k[0]))):
        l, m, r = seqs[(lam, f)]
        solved = _connecting_ranks(l, m, r)
        if solved is None:
            feasible = strict = False
            witness = witness or _witness(lam, f, l, m, r, "infeasible")
            continue
        ks, ranks = solved
        if f in exact:
            if any(ranks):
                strict = False
                witness = witness or _witness(lam, f, l, m, r, "cancellation at an exact exponent")
        else:
            paired = not m and all(r.get(k, 0) == c == l.get(k + 1, 0) for k, c in zip(ks, ranks))
            if not paired:
                strict = False
                witness = witness or _witness(lam, f, l, m, r, "unpaired terms off the exact exponents")
                continue
            cancellations.extend(Cancellation(f, lam, k, k + 1, c) for k, c in zip(ks, ranks) if c)
    return TriangleReport(n, d, mu, feasible, strict, tuple(exact), tuple(cancellations), witness)


def _witness(lam, f, l, m, r, reason) -> dict:
    seq = lambda s: {str(k): v for k, v in sorted(s.items())}
    return {"reason": reason, "lambda": list(lam), "frobenius_exponent": f,
            "L": seq(l), "M": seq(m), "R": seq(r)}


# -- X(pi) and block varieties --------------------------------------------------------------

def pi_variety_table(n: int, pad: int | None = None) -> CohomologyTable:
    """H_c(X(pi)) assembled from the X_{n,1} tables, one for each local system F_mu, mu |- n."""
    if n < 1:
        raise ValueError("n must be positive")
    nu_levi = n * (n - 1) // 2
    counts = Counter()
    for mu in partitions(n):
        a_A_mu = a_plus_A(mu)
        big_A = _A(mu)
        for e in conja_table(n, 1, mu, pad):
            counts[(e.lam, e.degree + 4 * nu_levi - 2 * big_A,
                    e.frob_exp + 2 * nu_levi - a_A_mu)] += e.multiplicity
    return CohomologyTable.from_counts(n, 1, Partition(), "pi", counts)


def _A(mu: Partition) -> int:
    return a_A(generic_degree(mu))[1] if mu else 0


def _block_steps(n: int, d: int, nu: Partition) -> int:
    dim_xnd(n, d)
    size = Partition(nu).size
    if size > n + 1 or (n + 1 - size) % d:
        raise ValueError(f"|nu| = {size} is not n + 1 - a d for n = {n}, d = {d}")
    a = (n + 1 - size) // d
    if a < 1:
        raise ValueError("at least one hook must be added")
    return a


def block_ranks(n: int, d: int, nu: Partition) -> list[int]:
    """Ambient ranks of the successive steps of a chain, smallest first."""
    a = _block_steps(n, d, nu)
    return [n - (a - 1 - i) * d for i in range(a)]


def block_dimension(n: int, d: int, nu: Partition) -> int:
    return sum(dim_xnd(r, d) for r in block_ranks(n, d, nu))


def block_table(n: int, d: int, nu: Partition, pad: int | None = None) -> CohomologyTable:
    """Chains nu -> ... -> lambda of d-hook additions, degrees and exponents summed along the chain.

    The multiplicity of (lambda, degree, exponent) is the number of chains realizing it.
    """
    nu = Partition(nu)
    ranks = block_ranks(n, d, nu)
    layer: dict[Partition, Counter] = {nu: Counter({(0, 0): 1})}
    for rank in ranks:
        nxt: dict[Partition, Counter] = defaultdict(Counter)
        for mu, paths in layer.items():
            step = conja_table(rank, d, mu, pad)
            for e in step:
                for (deg, f), count in paths.items():
                    nxt[e.lam][(deg + e.degree, f + e.frob_exp)] += count
        layer = nxt
    counts = Counter({(lam, deg, f): c for lam, paths in layer.items() for (deg, f), c in paths.items()})
    return CohomologyTable.from_counts(n, d, nu, "block", counts)


@dataclass(frozen=True)
class Conjecture1Report:
    disjoint: bool
    craven_ok: bool
    checked: int
    witness: dict | None = None

    @property
    def passed(self) -> bool:
        return self.disjoint and self.craven_ok

    def as_dict(self) -> dict:
        out = {"status": "pass" if self.passed else "fail", "disjoint": self.disjoint,
               "craven_ok": self.craven_ok, "checked": self.checked}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


def _total_dimension(table: CohomologyTable) -> int:
    if table.source == "xnd":
        return dim_xnd(table.n, table.d)
    if table.source == "block":
        return block_dimension(table.n, table.d, table.mu)
    if table.source == "pi":
        return table.n * (table.n + 1)
    raise ValueError(f"no ambient dimension for a table of source {table.source!r}")


def conjecture1_check(table: CohomologyTable, d: int | None = None) -> Conjecture1Report:
    """(i) every character sits in a single degree; (ii) 2 dim - degree is Craven's prediction."""
    d = table.d if d is None else d
    dim = _total_dimension(table)
    zeta = ZetaSpec.primitive(d)
    degrees: dict[Partition, set[int]] = defaultdict(set)
    for e in table:
        degrees[e.lam].add(e.degree)
    witness = None
    disjoint = True
    for lam in sorted(degrees, key=tuple):
        if len(degrees[lam]) > 1:
            disjoint = False
            witness = {"reason": "character in several degrees", "lambda": list(lam),
                       "degrees": sorted(degrees[lam])}
            break
    craven_ok = True
    for e in table:
        predicted = craven_delta(e.lam, table.mu, zeta)
        if 2 * dim - e.degree != predicted:
            craven_ok = False
            witness = witness or {"reason": "degree differs from Craven's formula",
                                  "lambda": list(e.lam), "degree": e.degree,
                                  "expected": _num(2 * dim - predicted), "actual": e.degree}
            break
    return Conjecture1Report(disjoint, craven_ok, len(table.entries), witness)


def _num(x: Fraction):
    return x.numerator if x.denominator == 1 else str(x)


# -- uniqueness of branching images ---------------------------------------------------------

def branching_decompositions(lam: Partition) -> list[Counter]:
    """All non-negative combinations of characters of GL_{|lam|} whose restriction equals that of lam."""
    lam = Partition(lam)
    target = Counter(restrictions(lam))
    candidates = [nu for nu in partitions(lam.size)
                  if all(target[p] >= c for p, c in Counter(restrictions(nu)).items())]
    solutions: list[Counter] = []

    def search(i: int, rest: Counter, chosen: dict):
        if not rest:
            solutions.append(Counter({nu: c for nu, c in chosen.items() if c}))
            return
        if i == len(candidates):
            return
        nu = candidates[i]
        res = Counter(restrictions(nu))
        most = min(rest[p] // k for p, k in res.items())
        for c in range(most + 1):
            used = Counter({p: k * c for p, k in res.items()})
            search(i + 1, rest - used, {**chosen, nu: c})

    search(0, target, {})
    return solutions


@dataclass(frozen=True)
class UniquenessReport:
    n: int
    alternatives: tuple[tuple[Partition, tuple[tuple[tuple[Partition, int], ...], ...]], ...]

    @property
    def expected(self) -> dict:
        """The claimed answer: unique for n >= 3, and (2,1) ~ (3) + (1,1,1) for n = 2."""
        if self.n == 2:
            return {Partition((2, 1)): (((Partition((3,)), 1), (Partition((1, 1, 1)), 1)),)}
        return {}

    @property
    def passed(self) -> bool:
        return dict(self.alternatives) == self.expected

    def as_dict(self) -> dict:
        out = {"n": self.n, "status": "pass" if self.passed else "fail",
               "non_unique": [
                   {"lambda": list(lam),
                    "alternatives": [[{"nu": list(nu), "coefficient": c} for nu, c in alt]
                                     for alt in alts]}
                   for lam, alts in self.alternatives]}
        return out


def restriction_uniqueness_check(n: int) -> UniquenessReport:
    if n < 2:
        raise ValueError("n must be at least 2")
    found = []
    for lam in sorted(partitions(n + 1), key=tuple):
        alts = []
        for sol in branching_decompositions(lam):
            if sol != Counter({lam: 1}):
                alts.append(tuple(sorted(sol.items(), key=lambda t: tuple(t[0]), reverse=True)))
        if alts:
            found.append((lam, tuple(sorted(alts))))
    return UniquenessReport(n, tuple(found))
