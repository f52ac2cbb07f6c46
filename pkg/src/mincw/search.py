"""Searches over systematic generators [I | A].

Every [n, k] code is equivalent under a coordinate permutation to one with
generator ``[I | A]``, and permuting the columns of ``A`` is again a
coordinate permutation.  Since M, intersection and minimum distance only
depend on supports, walking all ``A`` with columns in nondecreasing numeric
order covers every code up to equivalence.

``row_canonical=True`` additionally keeps only ``A`` whose rows are
nondecreasing.  Any 0/1 matrix can be brought to a form with both rows and
columns sorted, and permuting the rows of ``A`` together with the identity
part is again an equivalence, so this is still complete.
"""

from __future__ import annotations

import logging
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from math import comb
from pathlib import Path

import numpy as np

from . import _kernels
from .codes import LinearCode, count_minimal, minimal_codewords, minimal_codewords_oracle
from .codes import ORACLE_MAX_K, _content_lines
from .errors import BadParameter, BudgetExceeded, ParseError, RankDeficient
from .gf2 import BitMatrix

log = logging.getLogger(__name__)

CHUNK = 20_000


def default_workers() -> int:
    env = os.environ.get("MINCW_WORKERS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            log.warning("ignoring non-integer MINCW_WORKERS=%r", env)
    return 1


@dataclass(frozen=True)
class SearchBudget:
    max_candidates: int = 10**15
    max_time: float = float("inf")
    workers: int = field(default_factory=default_workers)
    restarts: int = 20
    seed: int = 0

    def __post_init__(self):
        if self.max_candidates <= 0 or self.max_time <= 0 or self.workers <= 0 or self.restarts <= 0:
            raise BadParameter("budget fields must be positive")
        if self.seed < 0:
            raise BadParameter("seed must be nonnegative")


@dataclass(frozen=True)
class SearchCertificate:
    n: int
    k: int
    generator: BitMatrix
    claimed_m: int
    method: str
    candidates_examined: int = 0
    seed: int = 0
    wall_time: float = 0.0

    def code(self) -> LinearCode:
        return LinearCode(self.generator)

    def to_text(self) -> str:
        head = f"{self.n} {self.k} {self.claimed_m} {self.method} {self.seed} {self.candidates_examined}"
        return "\n".join([head, *self.generator.to_strings()]) + "\n"

    @classmethod
    def from_text(cls, text: str) -> SearchCertificate:
        lines = _content_lines(text)
        if not lines:
            raise ParseError("empty certificate")
        parts = lines[0].split()
        if len(parts) != 6:
            raise ParseError("header must be 'n k claimed_m method seed candidates_examined'")
        try:
            n, k, m = int(parts[0]), int(parts[1]), int(parts[2])
            seed, examined = int(parts[4]), int(parts[5])
        except ValueError:
            raise ParseError(f"bad certificate header {lines[0]!r}") from None
        method = parts[3]
        if method not in ("exhaustive", "heuristic"):
            raise ParseError(f"unknown method {method!r}")
        rows = lines[1:]
        if len(rows) != k or any(len(r) != n or set(r) - {"0", "1"} for r in rows):
            raise ParseError(f"expected {k} rows of {n} 0/1 characters")
        gen = BitMatrix.from_strings(rows) if rows else BitMatrix(n, ())
        return cls(n, k, gen, m, method, examined, seed)


def read_certificate(path: str | Path) -> SearchCertificate:
    return SearchCertificate.from_text(Path(path).read_text())


def write_certificate(cert: SearchCertificate, path: str | Path) -> None:
    Path(path).write_text(cert.to_text())


def systematic_generator(n: int, k: int, cols) -> BitMatrix:
    """Generator [I | A] for A given by its columns (k-bit ints)."""
    out = np.empty(k, np.uint64)
    _kernels.systematic_rows(np.asarray(cols, dtype=np.uint64), k, out)
    return BitMatrix(n, tuple(int(x) for x in out))


def _check(n: int, k: int) -> None:
    if not 1 <= k <= n or n > 64:
        raise BadParameter(f"need 1 <= k <= n <= 64, got ({n}, {k})")


def _count_with_first(first: int, r: int, top: int) -> int:
    # nondecreasing tuples of length r over range(top) starting with `first`
    return comb(top - first + r - 2, r - 1)


def partition_first_column(r: int, top: int, parts: int) -> list[tuple[int, int]]:
    """Contiguous ranges of the first column value with roughly equal work."""
    if r == 0:
        return [(0, 1)]
    weights = [_count_with_first(v, r, top) for v in range(top)]
    total = sum(weights)
    ranges = []
    start = 0
    acc = 0
    for v, w in enumerate(weights):
        acc += w
        if len(ranges) < parts - 1 and acc * parts >= total * (len(ranges) + 1):
            ranges.append((start, v + 1))
            start = v + 1
    if start < top:
        ranges.append((start, top))
    return ranges


def _scan_range(args):
    n, k, mode, lo, hi, max_examined, deadline, row_canonical = args
    r = n - k
    cols = np.full(r, lo, dtype=np.uint64)
    best_cols = cols.copy()
    best = 0
    examined = 0
    finished = False
    while not finished:
        if examined >= max_examined or time.monotonic() > deadline:
            break
        step = min(CHUNK, max_examined - examined)
        best, got, finished = _kernels.scan(
            n, k, cols, np.uint64(hi), step, mode, best, best_cols, row_canonical
        )
        examined += got
        if mode == _kernels.MODE_INTERSECTING and best > 0:
            finished = True
    return int(best), [int(c) for c in best_cols], int(examined), bool(finished)


def _run_scan(n, k, mode, budget: SearchBudget, row_canonical: bool):
    r = n - k
    top = 1 << k
    ranges = partition_first_column(r, top, budget.workers)
    deadline = time.monotonic() + budget.max_time if budget.max_time != float("inf") else float("inf")
    per = -(-budget.max_candidates // len(ranges))
    jobs = [(n, k, mode, lo, hi, per, deadline, row_canonical) for lo, hi in ranges]
    if budget.workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=budget.workers) as pool:
            results = list(pool.map(_scan_range, jobs))
    else:
        results = []
        for job in jobs:
            results.append(_scan_range(job))
            if mode == _kernels.MODE_INTERSECTING and results[-1][0] > 0:
                break
    best = max(res[0] for res in results)
    # ranges are in walk order, so the first maximal range holds the least witness
    winner = next(res for res in results if res[0] == best)
    examined = sum(res[2] for res in results)
    finished = all(res[3] for res in results) or (
        mode == _kernels.MODE_INTERSECTING and best > 0
    )
    return best, winner[1], examined, finished


def exhaustive_max_M(
    n: int, k: int, budget: SearchBudget | None = None, row_canonical: bool = False
) -> SearchCertificate:
    """Largest M over all [n, k] codes, with a witness generator.

    Raises BudgetExceeded when the budget runs out; its ``partial``
    attribute holds the best-so-far certificate labelled heuristic.
    """
    _check(n, k)
    budget = budget or SearchBudget()
    t0 = time.monotonic()
    best, cols, examined, finished = _run_scan(n, k, _kernels.MODE_MAX_M, budget, row_canonical)
    cert = SearchCertificate(
        n, k, systematic_generator(n, k, cols), best, "exhaustive", examined, budget.seed,
        time.monotonic() - t0,
    )
    log.info("exhaustive (%d,%d): M=%d after %d candidates in %.2fs",
             n, k, best, examined, cert.wall_time)
    if not finished:
        raise BudgetExceeded(f"search of ({n},{k}) stopped after {examined} candidates",
                             partial=replace(cert, method="heuristic"))
    return cert


def _climb(n: int, k: int, cols: list[int], max_evals: int, deadline: float):
    r = n - k
    rows = np.empty(k, np.uint64)

    def score(c, floor):
        _kernels.systematic_rows(np.asarray(c, dtype=np.uint64), k, rows)
        return int(_kernels.count_minimal(rows, k, n, floor))

    current = score(cols, -1)
    evals = 1
    while evals < max_evals and time.monotonic() < deadline:
        best_val, best_move = current, None
        for j in range(r):
            for i in range(k):
                cols[j] ^= 1 << i
                val = score(cols, best_val)
                cols[j] ^= 1 << i
                evals += 1
                if val > best_val:
                    best_val, best_move = val, (j, i)
        if best_move is None:
            break
        cols[best_move[0]] ^= 1 << best_move[1]
        current = best_val
    return current, list(cols), evals


def _restart(args):
    n, k, seed, index, max_evals, deadline = args
    rng = np.random.default_rng([seed, index])
    cols = [int(x) for x in rng.integers(0, 1 << k, size=n - k)]
    return _climb(n, k, cols, max_evals, deadline)


def heuristic_max_M(n: int, k: int, budget: SearchBudget | None = None) -> SearchCertificate:
    """Steepest-ascent hill climbing over single-bit flips of A with restarts.

    Restart ``i`` draws its starting matrix from ``default_rng([seed, i])``,
    so the result depends only on the seed and the restart count.
    """
    _check(n, k)
    budget = budget or SearchBudget()
    t0 = time.monotonic()
    deadline = t0 + budget.max_time if budget.max_time != float("inf") else float("inf")
    if k == n:
        return SearchCertificate(n, k, BitMatrix.identity(n), n, "heuristic", 1, budget.seed)
    per = max(1, budget.max_candidates // budget.restarts)
    jobs = [(n, k, budget.seed, i, per, deadline) for i in range(budget.restarts)]
    if budget.workers > 1:
        with ProcessPoolExecutor(max_workers=budget.workers) as pool:
            results = list(pool.map(_restart, jobs))
    else:
        results = [_restart(job) for job in jobs]
    best = max(res[0] for res in results)
    winner = next(res for res in results if res[0] == best)
    examined = sum(res[2] for res in results)
    cert = SearchCertificate(
        n, k, systematic_generator(n, k, winner[1]), best, "heuristic", examined, budget.seed,
        time.monotonic() - t0,
    )
    log.info("heuristic (%d,%d) seed %d: M=%d", n, k, budget.seed, best)
    return cert


def find_intersecting(
    n: int, k: int, budget: SearchBudget | None = None, row_canonical: bool = True
) -> LinearCode | None:
    """An intersecting [n, k] code, or None if none exists.

    Raises BudgetExceeded if the space was not fully searched.
    """
    _check(n, k)
    budget = budget or SearchBudget()
    best, cols, _, finished = _run_scan(n, k, _kernels.MODE_INTERSECTING, budget, row_canonical)
    if best:
        return LinearCode(systematic_generator(n, k, cols))
    if not finished:
        raise BudgetExceeded(f"intersecting search ({n},{k}) incomplete")
    return None


def compute_g(n: int, budget: SearchBudget | None = None) -> int:
    """Largest k for which an intersecting [n, k] code exists.

    Subcodes of intersecting codes are intersecting, so k is raised from 1
    until the first k without a witness.  On budget exhaustion raises
    BudgetExceeded with ``partial`` set to the verified lower estimate.
    """
    if n < 1:
        raise BadParameter("n must be positive")
    g = 1
    for k in range(2, n + 1):
        try:
            witness = find_intersecting(n, k, budget)
        except BudgetExceeded as exc:
            raise BudgetExceeded(f"g({n}) >= {g}, search for k={k} incomplete", partial=g) from exc
        if witness is None:
            break
        g = k
    return g


def compute_d(n: int, k: int, budget: SearchBudget | None = None,
              row_canonical: bool = True) -> int:
    """Largest minimum distance of an [n, k] code.

    On budget exhaustion raises BudgetExceeded with the best distance seen
    as ``partial``.
    """
    _check(n, k)
    budget = budget or SearchBudget()
    best, _, _, finished = _run_scan(n, k, _kernels.MODE_MAX_D, budget, row_canonical)
    if not finished:
        raise BudgetExceeded(f"d({n},{k}) search incomplete", partial=best)
    return best


def verify_certificate(cert: SearchCertificate) -> bool:
    """Rebuild the code and recompute M with both minimality algorithms."""
    try:
        code = cert.code()
    except (RankDeficient, BadParameter):
        return False
    if (code.n, code.k) != (cert.n, cert.k):
        return False
    sieve = minimal_codewords(code)
    if sieve.count != cert.claimed_m or count_minimal(code) != cert.claimed_m:
        return False
    if code.k <= ORACLE_MAX_K:
        return minimal_codewords_oracle(code).bitsets() == sieve.bitsets()
    return True
