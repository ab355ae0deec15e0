"""Exhaustive and randomized exploration of quaternary codes at desk scale.

Every ``[n, k]`` code is visited once through its canonical generator:
pivot-column subsets are taken in colexicographic order and, inside a
subset, the free entries count in base 4 (last free entry fastest).  One
pivot subset is one shard; shards are independent, so the scans can be
spread over worker processes and merged in shard order, which keeps every
report identical whatever the worker count.
"""

from __future__ import annotations

import itertools
import json
import multiprocessing
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Callable, Iterator, Sequence

import numpy as np

from . import __version__, batch
from .code import LinearCode, from_generator, hermitian_dual_distance, minimum_weight
from .errors import CapacityError, DomainError, InvariantViolation, PreconditionError
from .lcd import extension_generator, has_dual_distance_one, is_hermitian_lcd, promote_dual_distance
from .linalg import F4Matrix, det, format_matrix, hermitian_gram, rank

EXHAUSTIVE_LIMIT = 10**7
RANDOM_CHUNK = 1 << 14


def count_codes(n: int, k: int) -> int:
    """Gaussian binomial coefficient ``[n choose k]_4``."""
    if k < 0 or n < 0 or k > n:
        raise DomainError(f"need 0 <= k <= n, got n={n}, k={k}")
    num = den = 1
    for i in range(k):
        num *= 4 ** (n - i) - 1
        den *= 4 ** (i + 1) - 1
    return num // den


def pivot_subsets(n: int, k: int) -> list[tuple[int, ...]]:
    return sorted(itertools.combinations(range(n), k), key=lambda c: c[::-1])


def _free_positions(n: int, pivots: Sequence[int]) -> list[tuple[int, int]]:
    piv = set(pivots)
    return [(i, j) for i, p in enumerate(pivots) for j in range(p + 1, n) if j not in piv]


def shard_matrices(n: int, k: int, pivots: Sequence[int]) -> np.ndarray:
    """All canonical generators with the given pivot columns, shape ``(4**f, k, n)``."""
    free = _free_positions(n, pivots)
    f = len(free)
    m = 4**f
    g = np.zeros((m, k, n), dtype=np.uint8)
    for i, p in enumerate(pivots):
        g[:, i, p] = 1
    counter = np.arange(m, dtype=np.int64)
    for t, (i, j) in enumerate(free):
        g[:, i, j] = (counter >> (2 * (f - 1 - t))) & 3
    return g


def _check_budget(n: int, k: int, budget: int) -> None:
    if not 1 <= k <= n:
        raise DomainError(f"need 1 <= k <= n, got n={n}, k={k}")
    total = count_codes(n, k)
    if total > budget:
        raise CapacityError(f"{total} [{n},{k}] codes exceed the enumeration budget {budget}")


def enumerate_codes(n: int, k: int, budget: int = EXHAUSTIVE_LIMIT) -> Iterator[LinearCode]:
    """Yield every ``[n, k]`` code exactly once, in shard order."""
    _check_budget(n, k, budget)
    for pivots in pivot_subsets(n, k):
        free = _free_positions(n, pivots)
        base = [[0] * n for _ in range(k)]
        for i, p in enumerate(pivots):
            base[i][p] = 1
        for digits in itertools.product(range(4), repeat=len(free)):
            for (i, j), a in zip(free, digits):
                base[i][j] = a
            yield LinearCode(F4Matrix(tuple(tuple(r) for r in base), n))


def random_code(n: int, k: int, seed: int) -> LinearCode:
    """Row space of a uniform random ``k x n`` matrix, redrawn until it has rank ``k``.

    Deterministic in ``seed``; not uniform over codes.
    """
    if not 1 <= k <= n:
        raise DomainError(f"need 1 <= k <= n, got n={n}, k={k}")
    rng = random.Random(seed)
    while True:
        m = F4Matrix(tuple(tuple(rng.randrange(4) for _ in range(n)) for _ in range(k)), n)
        if rank(m) == k:
            return from_generator(m)


def _code_from_array(a: np.ndarray) -> LinearCode:
    return LinearCode(F4Matrix(tuple(tuple(r) for r in a.tolist()), a.shape[-1]))


def _run(fn: Callable, tasks: list, threads: int) -> list:
    if threads <= 1 or len(tasks) <= 1:
        return [fn(t) for t in tasks]
    ctx = multiprocessing.get_context("fork")
    with ProcessPoolExecutor(max_workers=threads, mp_context=ctx) as ex:
        return list(ex.map(fn, tasks))


def _dumps(record: dict) -> str:
    return json.dumps(record, sort_keys=True)


# --- tabulate -----------------------------------------------------------------


@dataclass
class SearchReport:
    n: int
    k: int
    codes_scanned: int
    lcd_codes: int
    best_d_dual_ge2: int
    best_d_dual_eq1: int
    best_d_any: int
    witnesses: dict[str, str | None]
    shards: int
    elapsed: float = 0.0

    def to_record(self, timing: bool = False) -> dict:
        rec = {"kind": "tabulate", "version": __version__, **asdict(self)}
        if not timing:
            rec.pop("elapsed")
        return rec

    def to_json(self, timing: bool = False) -> str:
        return _dumps(self.to_record(timing))


def _tabulate_shard(task: tuple[int, int, tuple[int, ...]]) -> dict:
    n, k, pivots = task
    g = shard_matrices(n, k, pivots)
    p = batch.pack_rows(g)
    lcd = batch.nonsingular(batch.gram(p, n))
    zero = batch.has_zero_column(p, n)
    out = {"scanned": len(g), "lcd": int(lcd.sum())}
    for name, sel in (("dual_ge2", lcd & ~zero), ("dual_eq1", lcd & zero)):
        idx = np.flatnonzero(sel)
        if len(idx) == 0:
            out[name] = (0, None)
            continue
        d = batch.min_weight(p[idx], n)
        best = int(d.max())
        first = idx[int(np.argmax(d == best))]
        out[name] = (best, format_matrix(_code_from_array(g[first]).gen))
    return out


def tabulate(n: int, k: int, threads: int = 1, budget: int = EXHAUSTIVE_LIMIT) -> SearchReport:
    """Best minimum weight of Hermitian LCD ``[n, k]`` codes, split by dual-distance class.

    Dual distance 1 is detected as an identically-zero coordinate.  The
    full code (k = n) has dual distance ``n + 1`` by convention and lands in
    the ``>= 2`` class.
    """
    _check_budget(n, k, budget)
    t0 = time.perf_counter()
    subsets = pivot_subsets(n, k)
    parts = _run(_tabulate_shard, [(n, k, s) for s in subsets], threads)
    best: dict[str, int] = {"dual_ge2": 0, "dual_eq1": 0}
    wit: dict[str, str | None] = {"dual_ge2": None, "dual_eq1": None}
    for part in parts:
        for name in best:
            d, w = part[name]
            if d > best[name]:
                best[name], wit[name] = d, w
    return SearchReport(
        n=n, k=k,
        codes_scanned=sum(p["scanned"] for p in parts),
        lcd_codes=sum(p["lcd"] for p in parts),
        best_d_dual_ge2=best["dual_ge2"],
        best_d_dual_eq1=best["dual_eq1"],
        best_d_any=max(best.values()),
        witnesses=wit,
        shards=len(subsets),
        elapsed=time.perf_counter() - t0,
    )


# --- verification of the constructions ------------------------------------------


@dataclass
class VerifyReport:
    name: str
    n: int
    k: int
    codes_scanned: int
    codes_checked: int
    violations: int
    counterexample: str | None
    stats: dict = field(default_factory=dict)
    shards: int = 0
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return self.violations == 0

    def to_record(self, timing: bool = False) -> dict:
        rec = {"kind": "verify", "version": __version__, **asdict(self), "passed": self.passed}
        if not timing:
            rec.pop("elapsed")
        return rec

    def to_json(self, timing: bool = False) -> str:
        return _dumps(self.to_record(timing))


def _merge_verify(name: str, n: int, k: int, parts: list[dict], shards: int, t0: float,
                  extra_violation: str | None = None) -> VerifyReport:
    stats: dict[str, int] = {}
    for p in parts:
        for key, v in p["stats"].items():
            stats[key] = stats.get(key, 0) + v
    violations = sum(p["violations"] for p in parts)
    cex = next((p["counterexample"] for p in parts if p["counterexample"]), None)
    if extra_violation:
        violations += 1
        cex = cex or extra_violation
    return VerifyReport(
        name=name, n=n, k=k,
        codes_scanned=sum(p["scanned"] for p in parts),
        codes_checked=sum(p["checked"] for p in parts),
        violations=violations,
        counterexample=cex,
        stats=dict(sorted(stats.items())),
        shards=shards,
        elapsed=time.perf_counter() - t0,
    )


def _lemma2_shard(task: tuple[int, int, tuple[int, ...]]) -> dict:
    n, k, pivots = task
    g = shard_matrices(n, k, pivots)
    p = batch.pack_rows(g)
    sel = np.flatnonzero(batch.nonsingular(batch.gram(p, n)) & ~batch.has_zero_column(p, n))
    d0 = batch.min_weight(p[sel], n)
    bad: list[str] = []
    stats = {"d_same": 0, "d_plus_one": 0, "det_identity": 0}
    ext_rows = np.zeros((len(sel), k, n + 1), dtype=np.uint8)
    ext_ok = np.ones(len(sel), dtype=bool)
    for t, i in enumerate(sel):
        c0 = _code_from_array(g[i])
        try:
            eg, dec = extension_generator(c0)
        except (PreconditionError, DomainError) as e:
            bad.append(f"{format_matrix(c0.gen)}: extension refused: {e}")
            ext_ok[t] = False
            continue
        problems = dec.violations()
        want = 1 if k == 2 else det(hermitian_gram(dec.rest))
        if det(hermitian_gram(eg)) == want:
            stats["det_identity"] += 1
        else:
            problems.append(f"det Gram = {det(hermitian_gram(eg))}, expected {want}")
        ext = from_generator(eg)
        if ext.n != n + 1 or ext.k != k:
            problems.append(f"parameters [{ext.n},{ext.k}]")
        else:
            ext_rows[t] = ext.gen.rows
        if problems:
            bad.append(f"{format_matrix(c0.gen)}: " + "; ".join(problems))
            ext_ok[t] = False
    pe = batch.pack_rows(ext_rows)
    lcd = batch.nonsingular(batch.gram(pe, n + 1))
    zero = batch.has_zero_column(pe, n + 1)
    d = batch.min_weight(pe, n + 1)
    for t in range(len(sel)):
        if not ext_ok[t]:
            continue
        problems = []
        if not lcd[t]:
            problems.append("extension not LCD")
        if zero[t]:
            problems.append("extension has dual distance 1")
        if d[t] == d0[t]:
            stats["d_same"] += 1
        elif d[t] == d0[t] + 1:
            stats["d_plus_one"] += 1
        else:
            problems.append(f"d = {d[t]} not in {{{d0[t]}, {d0[t] + 1}}}")
        if problems:
            bad.append(f"{format_matrix(_code_from_array(g[sel[t]]).gen)}: " + "; ".join(problems))
    return {"scanned": len(g), "checked": len(sel), "violations": len(bad),
            "counterexample": bad[0] if bad else None, "stats": stats}


def verify_lemma2(n: int, k: int, threads: int = 1, budget: int = EXHAUSTIVE_LIMIT) -> VerifyReport:
    """Extend every Hermitian LCD ``[n, k]`` code with dual distance >= 2 and check the result."""
    if k < 2:
        raise DomainError("the extension needs k >= 2")
    _check_budget(n, k, budget)
    t0 = time.perf_counter()
    subsets = pivot_subsets(n, k)
    parts = _run(_lemma2_shard, [(n, k, s) for s in subsets], threads)
    return _merge_verify("lemma2", n, k, parts, len(subsets), t0)


def _theorem3_shard(task: tuple[int, int, tuple[int, ...]]) -> dict:
    n, k, pivots = task
    g = shard_matrices(n, k, pivots)
    p = batch.pack_rows(g)
    sel = np.flatnonzero(batch.nonsingular(batch.gram(p, n)) & batch.has_zero_column(p, n))
    d0 = batch.min_weight(p[sel], n)
    bad: list[str] = []
    stats = {"d_kept": 0, "d_raised": 0}
    for t, i in enumerate(sel):
        c = _code_from_array(g[i])
        try:
            out = promote_dual_distance(c)
        except (InvariantViolation, PreconditionError, DomainError) as e:
            bad.append(f"{format_matrix(c.gen)}: promotion failed: {e}")
            continue
        problems = []
        if (out.n, out.k) != (n, k):
            problems.append(f"parameters [{out.n},{out.k}]")
        if not is_hermitian_lcd(out):
            problems.append("not LCD")
        if has_dual_distance_one(out):
            problems.append("dual distance 1")
        d = minimum_weight(out)
        if d < d0[t]:
            problems.append(f"d' = {d} < d = {d0[t]}")
        stats["d_kept" if d == d0[t] else "d_raised"] += 1
        if problems:
            bad.append(f"{format_matrix(c.gen)}: " + "; ".join(problems))
    return {"scanned": len(g), "checked": len(sel), "violations": len(bad),
            "counterexample": bad[0] if bad else None, "stats": stats}


def verify_theorem3(n: int, k: int, threads: int = 1, budget: int = EXHAUSTIVE_LIMIT) -> VerifyReport:
    """Promote every Hermitian LCD ``[n, k]`` code with dual distance 1 and check the result.

    Also requires ``best_d_dual_eq1 <= best_d_dual_ge2`` in the tabulated report.
    """
    if k < 2:
        raise DomainError("the promotion needs k >= 2")
    _check_budget(n, k, budget)
    t0 = time.perf_counter()
    subsets = pivot_subsets(n, k)
    parts = _run(_theorem3_shard, [(n, k, s) for s in subsets], threads)
    rep = tabulate(n, k, threads, budget)
    extra = None
    if rep.best_d_dual_eq1 > rep.best_d_dual_ge2:
        extra = (f"tabulate: best_d_dual_eq1 = {rep.best_d_dual_eq1} > "
                 f"best_d_dual_ge2 = {rep.best_d_dual_ge2}")
    res = _merge_verify("theorem3", n, k, parts, len(subsets), t0, extra)
    res.stats["best_d_dual_eq1"] = rep.best_d_dual_eq1
    res.stats["best_d_dual_ge2"] = rep.best_d_dual_ge2
    return res


# --- witness search -------------------------------------------------------------


@dataclass
class SearchResult:
    n: int
    k: int
    d_min: int
    dual_min: int
    witness: LinearCode | None
    exhaustive: bool
    scanned: int
    seed: int | None
    shards: int

    @property
    def found(self) -> bool:
        return self.witness is not None

    @property
    def conclusion(self) -> str:
        if self.found:
            return "witness found"
        return "nonexistence proven (exhaustive)" if self.exhaustive else "no witness found (not a proof)"

    def to_record(self) -> dict:
        return {
            "kind": "search", "version": __version__,
            "n": self.n, "k": self.k, "d_min": self.d_min, "dual_min": self.dual_min,
            "found": self.found,
            "witness": None if self.witness is None else format_matrix(self.witness.gen).split("\n"),
            "exhaustive": self.exhaustive, "scanned": self.scanned,
            "seed": self.seed, "shards": self.shards, "conclusion": self.conclusion,
        }

    def to_json(self) -> str:
        return _dumps(self.to_record())


def _first_witness(g: np.ndarray, n: int, d_min: int, dual_min: int) -> LinearCode | None:
    p = batch.pack_rows(g)
    cand = np.flatnonzero((batch.row_weights(p, n) >= d_min).all(axis=1))
    if dual_min >= 2 and len(cand):
        cand = cand[~batch.has_zero_column(p[cand], n)]
    if len(cand):
        cand = cand[batch.nonsingular(batch.gram(p[cand], n))]
    if len(cand):
        cand = cand[batch.min_weight(p[cand], n) >= d_min]
    for i in cand:
        c = from_generator(F4Matrix.from_rows(g[i].tolist()))
        if dual_min <= 2 or hermitian_dual_distance(c) >= dual_min:
            return c
    return None


def _exhaustive_shard(task: tuple) -> LinearCode | None:
    n, k, pivots, d_min, dual_min = task
    return _first_witness(shard_matrices(n, k, pivots), n, d_min, dual_min)


def _random_shard(task: tuple) -> LinearCode | None:
    n, k, size, seed, chunk, d_min, dual_min = task
    rng = np.random.default_rng([seed, chunk])
    g = rng.integers(0, 4, size=(size, k, n), dtype=np.uint8)
    return _first_witness(g, n, d_min, dual_min)


def search_lcd(n: int, k: int, d_min: int = 1, dual_min: int = 1, budget: int | None = None,
               seed: int | None = None, threads: int = 1, exhaustive: bool | None = None) -> SearchResult:
    """Look for a Hermitian LCD ``[n, k, >= d_min]`` code with dual distance >= ``dual_min``.

    With ``exhaustive=None`` the scan is exhaustive when the number of codes
    is at most ``EXHAUSTIVE_LIMIT``; otherwise ``budget`` random generator
    matrices are drawn (seeded per chunk, so results do not depend on
    ``threads``).  Rank-deficient draws count against the budget.  Only an
    exhaustive scan that finds nothing proves nonexistence.
    """
    if not 1 <= k <= n:
        raise DomainError(f"need 1 <= k <= n, got n={n}, k={k}")
    if exhaustive is None:
        exhaustive = count_codes(n, k) <= EXHAUSTIVE_LIMIT
    if exhaustive:
        _check_budget(n, k, EXHAUSTIVE_LIMIT if budget is None else max(budget, 1))
        subsets = pivot_subsets(n, k)
        results = _run(_exhaustive_shard, [(n, k, s, d_min, dual_min) for s in subsets], threads)
        hit = next((i for i, r in enumerate(results) if r is not None), None)
        scanned = sum(4 ** len(_free_positions(n, s)) for s in (subsets if hit is None else subsets[:hit + 1]))
        return SearchResult(n, k, d_min, dual_min, None if hit is None else results[hit],
                            True, scanned, None, len(subsets))
    if budget is None or seed is None:
        raise CapacityError(f"{count_codes(n, k)} [{n},{k}] codes: a random search needs explicit budget and seed")
    sizes = [min(RANDOM_CHUNK, budget - s) for s in range(0, budget, RANDOM_CHUNK)]
    tasks = [(n, k, size, seed, c, d_min, dual_min) for c, size in enumerate(sizes)]
    results = _run(_random_shard, tasks, threads)
    hit = next((i for i, r in enumerate(results) if r is not None), None)
    scanned = sum(sizes if hit is None else sizes[:hit + 1])
    return SearchResult(n, k, d_min, dual_min, None if hit is None else results[hit],
                        False, scanned, seed, len(sizes))
