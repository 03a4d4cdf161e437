"""
Verification sweeps over parameter ranges.

Each suite is split into independent work items. Items are evaluated in a
process pool (or inline for ``jobs == 1``) and the results are reduced in the
fixed item order, so a report never depends on the number of workers.
"""

from __future__ import annotations

import logging
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from . import braid
from .cyclo import ZetaSpec, a_A, a_plus_A, craven_delta, generic_degree
from .partitions import (
    Partition, add_hook, addable_hooks, beta_set, d_core, partition_of, partitions,
    restrictions, rim_hook_leg,
)
from .tables import (
    block_table, conja_table, conjecture1_check, dim_xnd, pi_gamma, pi_variety_table,
    restriction_uniqueness_check, triangle_check,
)

log = logging.getLogger(__name__)

SUITES = ("perv", "triangle", "periodicity", "pi-variety", "block", "uniqueness")


@dataclass(frozen=True)
class SweepConfig:
    max_n: int
    d_range: tuple[int, int] | None = None
    jobs: int = 1
    format: str = "json"
    seed: int = 0
    pad: int | None = None

    def __post_init__(self):
        if self.max_n < 1:
            raise ValueError("max_n must be at least 1")
        if self.jobs < 1:
            raise ValueError("jobs must be at least 1")
        if self.format not in ("json", "csv"):
            raise ValueError(f"unknown format {self.format!r}")
        if self.d_range is not None and self.d_range[0] > self.d_range[1]:
            raise ValueError("empty d range")

    def ds(self, lo: int, hi: int) -> range:
        if self.d_range is not None:
            lo, hi = max(lo, self.d_range[0]), min(hi, self.d_range[1])
        return range(lo, hi + 1)

    def pad_for(self, d: int) -> int:
        return d if self.pad is None else max(self.pad, d)

    def parameters(self) -> dict:
        return {"max_n": self.max_n,
                "d_range": list(self.d_range) if self.d_range else None,
                "seed": self.seed, "pad": self.pad}


class Failure(Exception):
    def __init__(self, check: str, parameters: dict, expected, actual):
        super().__init__(check)
        self.witness = {"check": check, "parameters": parameters,
                        "expected": _jsonable(expected), "actual": _jsonable(actual)}


def _jsonable(x):
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else str(x)
    if isinstance(x, Partition):
        return list(x)
    if isinstance(x, (list, tuple)):
        return [_jsonable(y) for y in x]
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    return x


def _expect(check: str, parameters: dict, expected, actual):
    if expected != actual:
        raise Failure(check, parameters, expected, actual)


# -- work items -------------------------------------------------------------------------------

def work_items(suite: str, cfg: SweepConfig) -> list[tuple]:
    N = cfg.max_n
    if suite == "perv":
        items = [("lemma", n, d) for n in range(1, N + 1) for d in cfg.ds(1, n + 1)]
        items += [("integrality", m) for m in range(1, N + 2)]
        return items
    if suite == "triangle":
        return [("triangle", n, d) for n in range(2, N + 1) for d in cfg.ds(2, n)]
    if suite == "periodicity":
        items = [("periodicity", n, d) for n in range(1, N + 1) for d in cfg.ds(1, n + 1)]
        items += [("rewrite", n) for n in range(1, min(N, 6) + 1)]
        return items
    if suite == "pi-variety":
        return [("pi", n) for n in range(1, N + 1)]
    if suite == "block":
        return [("block", n, d) for n in range(1, N + 1) for d in cfg.ds(1, n + 1)]
    if suite == "uniqueness":
        return [("uniqueness", n) for n in range(2, N + 1)]
    raise ValueError(f"unknown suite {suite!r}")


def run_item(item: tuple, cfg: SweepConfig) -> tuple[int, dict | None]:
    """Evaluate one work item; returns (number of checks, first failure witness or None)."""
    try:
        return _DISPATCH[item[0]](*item[1:], cfg=cfg), None
    except Failure as exc:
        return 0, exc.witness


def _lemma(n: int, d: int, cfg: SweepConfig) -> int:
    zeta = ZetaSpec.primitive(d)
    dim = dim_xnd(n, d)
    base = cfg.pad_for(d)
    checked = 0
    for mu in partitions(n + 1 - d):
        for pad in (base, base + 1, base + 2, base + 5):
            X = beta_set(mu, pad)
            s = len(X)
            for x in sorted(addable_hooks(X, d)):
                p = {"n": n, "d": d, "mu": list(mu), "beta_set": list(X), "x": x}
                Y, hook = add_hook(X, x, d)
                lam = partition_of(Y)
                below = sum(1 for y in X if y < x)
                between = sum(1 for y in X if x < y < x + d)
                delta = craven_delta(lam, mu, zeta)
                _expect("craven difference", p, 2 * (n + 1 - d - x + below) + between, delta)
                _expect("a + A difference", p, d * (n - d + s - x), a_plus_A(lam) - a_plus_A(mu))
                pi, gamma = pi_gamma(X, x, d, n)
                _expect("degree duality", p, 2 * dim - delta, pi)
                _expect("exponent duality", p,
                        dim - Fraction(a_plus_A(lam) - a_plus_A(mu), d), gamma)
                _expect("degree bounds", p, True, 0 <= pi <= 2 * dim)
                _expect("sign law", p, rim_hook_leg(lam, mu) % 2, pi % 2)
                _expect("leg length", p, rim_hook_leg(lam, mu), hook.leg_length)
                checked += 7
        table = conja_table(n, d, mu, base)
        for e in table:
            p = {"n": n, "d": d, "mu": list(mu), "lambda": list(e.lam)}
            if e.lam == Partition([1] * (n + 1)):
                _expect("Steinberg eigenvalue", p, 0, e.frob_exp)
                checked += 1
            if e.lam == Partition([n + 1]):
                _expect("trivial eigenvalue", p, 2 * n + 1 - d, e.frob_exp)
                checked += 1
        for pad in (base + 1, base + 5):
            _expect("padding invariance", {"n": n, "d": d, "mu": list(mu), "pad": pad},
                    table, conja_table(n, d, mu, pad))
            checked += 1
    return checked


def _integrality(m: int, cfg: SweepConfig) -> int:
    checked = 0
    for lam in partitions(m):
        for d in cfg.ds(1, m):
            delta = craven_delta(lam, d_core(lam, d), ZetaSpec.primitive(d))
            _expect("craven integrality", {"lambda": list(lam), "d": d}, 1, delta.denominator)
            checked += 1
    return checked


def _triangle(n: int, d: int, cfg: SweepConfig) -> int:
    checked = 0
    for mu in partitions(n + 1 - d):
        report = triangle_check(n, d, mu, cfg.pad_for(d))
        if not report.passed:
            raise Failure("triangle", {"n": n, "d": d, "mu": list(mu)},
                          "feasible with exact matches and paired cancellations", report.witness)
        checked += 1
    return checked


def _periodicity(n: int, d: int, cfg: SweepConfig) -> int:
    p = {"n": n, "d": d}
    r = braid.periodicity_check(n, d)
    _expect("v_d^d pi_J = pi", p, True, r.left_product_ok)
    _expect("pi_J v_d^d = pi", p, True, r.right_product_ok)
    _expect("word length", p, r.expected_length, r.word_length)
    _expect("v_d normalizes J_d", p, True, r.normalizes_j)
    checked = 4
    if d >= 2:
        _expect("Weyl length of v_d", p, 2 * n + 1 - d, r.weyl_length)
        checked += 1
    if 2 <= d <= n:
        a, b = (d + 1) // 2, n - d // 2
        expected = sorted((braid.suffix_product(n, i)
                           for i in [*range(1, a + 1), *range(b + 1, n + 2)]),
                          key=lambda w: (braid.length(w), w))
        actual = braid.min_coset_reps(range(1, n), braid.j_d_set(n, d), n)
        _expect("double coset representatives", p, expected, actual)
        checked += 1
    return checked


def _rewrite(n: int, cfg: SweepConfig) -> int:
    rng = random.Random(cfg.seed * 1009 + n)
    checked = 0
    for _ in range(25):
        word = tuple(rng.randint(1, n) for _ in range(rng.randint(0, 12)))
        other = word
        for _ in range(50):
            moves = list(braid.rewrite_neighbours(other))
            if moves:
                other = rng.choice(moves)
        u, v = braid.BraidWord(word, n), braid.BraidWord(other, n)
        _expect("normal form under rewriting", {"n": n, "word": list(word), "rewritten": list(other)},
                True, braid.braid_equal(u, v))
        _expect("left-greedy", {"n": n, "word": list(word)}, True,
                braid.is_left_greedy(braid.garside_nf(u)))
        checked += 2
    return checked


def _pi(n: int, cfg: SweepConfig) -> int:
    table = pi_variety_table(n, cfg.pad)
    nu_g = n * (n + 1) // 2
    checked = 0
    for e in table:
        a, A = a_A(generic_degree(e.lam))
        p = {"n": n, "lambda": list(e.lam)}
        _expect("X(pi) degree", p, 4 * nu_g - 2 * A, e.degree)
        _expect("X(pi) exponent", p, 2 * nu_g - a - A, e.frob_exp)
        _expect("X(pi) multiplicity", p, len(restrictions(e.lam)), e.multiplicity)
        checked += 3
    _expect("X(pi) support", {"n": n}, set(partitions(n + 1)), table.characters())
    report = conjecture1_check(table)
    _expect("X(pi) degree prediction", {"n": n}, None, report.witness)
    return checked + 2


def _block(n: int, d: int, cfg: SweepConfig) -> int:
    checked = 0
    for a in range(1, (n + 1) // d + 1):
        for nu in partitions(n + 1 - a * d):
            p = {"n": n, "d": d, "nu": list(nu)}
            table = block_table(n, d, nu, cfg.pad_for(d))
            seen: dict[Partition, tuple[int, int]] = {}
            for e in table:
                got = (e.degree, e.frob_exp)
                _expect("chain independence", {**p, "lambda": list(e.lam)},
                        seen.setdefault(e.lam, got), got)
            report = conjecture1_check(table)
            _expect("degree prediction", p, None, report.witness)
            checked += 1
    return checked


def _uniqueness(n: int, cfg: SweepConfig) -> int:
    report = restriction_uniqueness_check(n)
    expected = {"n": n, "non_unique": [
        {"lambda": list(lam), "alternatives": [[{"nu": list(nu), "coefficient": c} for nu, c in alt]
                                               for alt in alts]}
        for lam, alts in report.expected.items()]}
    actual = report.as_dict()
    del actual["status"]
    _expect("restriction uniqueness", {"n": n}, expected, actual)
    return len(partitions(n + 1))


_DISPATCH = {
    "lemma": _lemma, "integrality": _integrality, "triangle": _triangle,
    "periodicity": _periodicity, "rewrite": _rewrite, "pi": _pi, "block": _block,
    "uniqueness": _uniqueness,
}


def _run(args: tuple[tuple, SweepConfig]) -> tuple[int, dict | None]:
    return run_item(*args)


def run_suite(suite: str, cfg: SweepConfig, pool: ProcessPoolExecutor | None = None) -> dict:
    items = work_items(suite, cfg)
    log.info("verify %s: %d work items", suite, len(items))
    args = [(item, cfg) for item in items]
    results = list(pool.map(_run, args, chunksize=1)) if pool else [_run(a) for a in args]
    checked = sum(c for c, _ in results)
    failures = [w for _, w in results if w is not None]
    report = {"suite": suite, "status": "fail" if failures else "pass",
              "items": len(items), "checked": checked, "failed_items": len(failures)}
    if failures:
        report["witness"] = failures[0]
    log.info("verify %s: %s", suite, report["status"])
    return report


def run_verify(suite: str, cfg: SweepConfig) -> dict:
    suites = SUITES if suite == "all" else (suite,)
    if suite != "all" and suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    if cfg.jobs > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            reports = [run_suite(s, cfg, pool) for s in suites]
    else:
        reports = [run_suite(s, cfg) for s in suites]
    status = "pass" if all(r["status"] == "pass" for r in reports) else "fail"
    out = {"suite": suite, "status": status, "parameters": cfg.parameters(), "suites": reports}
    failed = [r for r in reports if r["status"] == "fail"]
    if failed:
        out["witness"] = {"suite": failed[0]["suite"], **failed[0]["witness"]}
    return out
