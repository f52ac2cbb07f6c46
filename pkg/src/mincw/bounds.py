"""Upper and lower bounds on M(n, k) and assembly of the bounds table.

All arithmetic is exact (ints and Fractions).  Upper-bound labels are
``trivial``, ``refined_trivial``, ``matroid``, ``agrell`` and ``recursion``;
lower-bound labels are ``search``, ``construction``, ``superadditive``,
``monotone``, ``abch`` and ``random_coding``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, floor
from typing import Iterable, Mapping, NamedTuple

from .errors import BadParameter, UnknownG
from .published import G_VALUES, TABLE_M

UPPER_ORDER = ("trivial", "refined_trivial", "matroid", "agrell", "recursion")
LOWER_ORDER = ("search", "construction", "superadditive", "monotone", "abch", "random_coding")


def _check_nk(n: int, k: int) -> None:
    if not 1 <= k <= n:
        raise BadParameter(f"need 1 <= k <= n, got n={n}, k={k}")


@dataclass(frozen=True)
class GTable:
    """Values of g(n), the largest k admitting an intersecting [n, k] code."""

    values: Mapping[int, int]
    sources: Mapping[int, str] = field(default_factory=dict)

    @classmethod
    def embedded(cls) -> GTable:
        return cls(dict(G_VALUES), {n: "embedded" for n in G_VALUES})

    def with_computed(self, computed: Mapping[int, int]) -> GTable:
        values = dict(self.values)
        sources = dict(self.sources)
        for n, g in computed.items():
            values[n] = g
            sources[n] = "computed"
        return GTable(values, sources)

    def __contains__(self, n: int) -> bool:
        return n in self.values

    def __getitem__(self, n: int) -> int:
        try:
            return self.values[n]
        except KeyError:
            raise UnknownG(f"g({n}) is neither embedded nor computed") from None

    def key(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(self.values.items()))


EMBEDDED_G = GTable.embedded()


@dataclass(frozen=True)
class BoundsCell:
    n: int
    k: int
    lower: int
    lower_src: str
    upper: int
    upper_src: str

    def __post_init__(self):
        if not 1 <= self.lower <= self.upper <= 2**self.k - 1:
            raise BadParameter(
                f"inconsistent bounds at ({self.n},{self.k}): {self.lower}..{self.upper}"
            )

    @property
    def exact(self) -> bool:
        return self.lower == self.upper

    def tsv(self) -> str:
        return "\t".join(
            str(x)
            for x in (self.n, self.k, self.lower, self.lower_src, self.upper, self.upper_src,
                      int(self.exact))
        )


# upper bounds


def trivial_upper(n: int, k: int) -> int:
    _check_nk(n, k)
    return 2**k - 1


def refined_trivial_upper(n: int, k: int, g: GTable = EMBEDDED_G) -> int:
    """2^k - 1 when an intersecting [n, k] code exists, otherwise 2^k - 2."""
    _check_nk(n, k)
    return 2**k - 1 if k <= g[n] else 2**k - 2


def matroid_upper(n: int, k: int) -> int:
    _check_nk(n, k)
    return comb(n, k - 1)


def agrell_upper(n: int, k: int) -> int | None:
    """floor(2^k n / (2(k-1) - n)^2), defined only when (k-1)/n > 1/2."""
    gap = 2 * (k - 1) - n
    if gap <= 0:
        return None
    return (2**k * n) // (gap * gap)


def _pick(cands: Iterable[tuple[int, str]], order: tuple[str, ...], best) -> tuple[int, str]:
    cands = list(cands)
    target = best(v for v, _ in cands)
    return min(((v, s) for v, s in cands if v == target), key=lambda c: order.index(c[1]))


@lru_cache(maxsize=32)
def _upper_table(N: int, K: int, gkey) -> dict[tuple[int, int], tuple[int, str]]:
    g = dict(gkey)
    table: dict[tuple[int, int], tuple[int, str]] = {}
    binom = [[comb(n, k) for k in range(N + 1)] for n in range(N + 1)]
    for n in range(1, N + 1):
        for k in range(1, min(n, K) + 1):
            # candidates arrive in UPPER_ORDER, so strict < keeps the earliest label on ties
            best = 2**k - 1
            src = "trivial"
            if n in g and k > g[n]:
                best, src = best - 1, "refined_trivial"
            if binom[n][k - 1] < best:
                best, src = binom[n][k - 1], "matroid"
            gap = 2 * (k - 1) - n
            if gap > 0 and (2**k * n) // (gap * gap) < best:
                best, src = (2**k * n) // (gap * gap), "agrell"
            if 1 < k < n:
                rec = table[(n - 1, k - 1)][0] + binom[n - 1][k - 1]
                if rec < best:
                    best, src = rec, "recursion"
            table[(n, k)] = (best, src)
    return table


def labeled_upper_table(N: int, K: int, g: GTable = EMBEDDED_G):
    """Same DP as ``recursion_upper_table`` but each value carries its source label."""
    if N < 1 or K < 1:
        raise BadParameter("N and K must be positive")
    return dict(_upper_table(N, K, g.key()))


def recursion_upper_table(N: int, K: int, g: GTable = EMBEDDED_G) -> dict[tuple[int, int], int]:
    """U(n, k) = min of every closed-form upper bound and U(n-1, k-1) + C(n-1, k-1).

    Base cases U(n, 1) = 1 and U(n, n) = n fall out of the trivial and
    matroid bounds.
    """
    return {key: v for key, (v, _) in labeled_upper_table(N, K, g).items()}


# lower bounds


def random_coding_value(n: int, k: int) -> Fraction:
    """(sum_{j=0}^{n-k+1} C(n,j) prod_{i=0}^{j-2} (1 - 2^-(n-k-i))) / 2^(n-k), exactly."""
    _check_nk(n, k)
    if k == n:
        raise BadParameter("the random-coding bound is not valid for k = n")
    r = n - k
    total = Fraction(0)
    prod = Fraction(1)
    for j in range(0, r + 2):
        if j >= 2:
            prod *= 1 - Fraction(1, 2 ** (r - (j - 2)))
        total += comb(n, j) * prod
    return total / 2**r


def random_coding_lower(n: int, k: int) -> int:
    """Ceiling of ``random_coding_value``, capped at 2^k - 1.

    At low rates the raw value exceeds 2^k - 1 (e.g. 8 at (12, 3)), which no
    [n, k] code can reach, hence the cap.
    """
    value = random_coding_value(n, k)
    return min(-((-value.numerator) // value.denominator), 2**k - 1)


def abch_lower(n: int, k: int, d: int) -> int:
    """Smallest M with sum_{i=1}^{floor(n/d)} C(M, i) >= 2^k - 1."""
    _check_nk(n, k)
    if not 1 <= d <= n:
        raise BadParameter(f"need 1 <= d <= n, got d={d}")
    parts = n // d
    target = 2**k - 1
    m = 0
    while sum(comb(m, i) for i in range(1, parts + 1)) < target:
        m += 1
    return m


def construction_lower(n: int, k: int, g: GTable = EMBEDDED_G) -> int | None:
    """Values realised by explicit codes: repetition, universe, parity and
    intersecting codes."""
    _check_nk(n, k)
    if k == 1:
        return 1
    if k == n:
        return n
    vals = []
    if k == n - 1 and n >= 3:
        vals.append(comb(n, 2))
    if n in g and k <= g[n]:
        vals.append(2**k - 1)
    return max(vals) if vals else None


def _closure(
    cells: Mapping[tuple[int, int], tuple[int, str]],
) -> dict[tuple[int, int], tuple[int, str]]:
    out = dict(cells)
    keys = sorted(out)
    changed = True
    while changed:
        changed = False
        for (n, k) in keys:
            v = out[(n, k)][0]
            up = (n + 1, k)
            if up in out and out[up][0] < v:
                out[up] = (v, "monotone")
                changed = True
        for i, (n, k) in enumerate(keys):
            for (m, j) in keys[i:]:
                tgt = (n + m, k + j)
                if tgt in out:
                    v = out[(n, k)][0] + out[(m, j)][0]
                    if out[tgt][0] < v:
                        out[tgt] = (v, "superadditive")
                        changed = True
    return out


def closure_lower(cells: Mapping[tuple[int, int], int]) -> dict[tuple[int, int], int]:
    """Close lower bounds under M(n+1,k) >= M(n,k) and
    M(n+m, k+j) >= M(n,k) + M(m,j), to a fixpoint.  Never lowers a value."""
    closed = _closure({key: (v, "") for key, v in cells.items()})
    return {key: v for key, (v, _) in closed.items()}


# graphs


class CycleBounds(NamedTuple):
    new: int | None
    old: int


def graph_cycle_upper(p: int, q: int) -> CycleBounds:
    """Cycle-count bounds for a connected graph with p vertices and q edges.

    ``new`` is floor(q 2^(q-p+1) / (q-2p)^2), defined for q > 2p; ``old``
    is floor(15/16 * 2^(q-p+1)).
    """
    e = q - p + 1
    old = floor(Fraction(15, 16) * Fraction(2) ** e)
    if q <= 2 * p:
        return CycleBounds(None, old)
    new = floor(Fraction(q) * Fraction(2) ** e / (q - 2 * p) ** 2)
    return CycleBounds(new, old)


# table assembly


def best_bounds(
    n: int,
    k: int,
    g: GTable = EMBEDDED_G,
    search_lower: int | None = None,
    d: int | None = None,
    closed_lower: tuple[int, str] | None = None,
) -> BoundsCell:
    """Best available lower and upper bound for one cell, with source labels."""
    _check_nk(n, k)
    lowers: list[tuple[int, str]] = []
    if search_lower is not None:
        lowers.append((search_lower, "search"))
    c = construction_lower(n, k, g)
    if c is not None:
        lowers.append((c, "construction"))
    if closed_lower is not None:
        lowers.append(closed_lower)
    if d is not None:
        lowers.append((abch_lower(n, k, d), "abch"))
    if k < n:
        lowers.append((random_coding_lower(n, k), "random_coding"))
    lower = _pick(lowers, LOWER_ORDER, max)
    upper = labeled_upper_table(n, k, g)[(n, k)]
    return BoundsCell(n, k, lower[0], lower[1], upper[0], upper[1])


def bounds_table(
    N: int,
    K: int,
    g: GTable = EMBEDDED_G,
    search_lower: Mapping[tuple[int, int], int] | None = None,
    d_table: Mapping[tuple[int, int], int] | None = None,
) -> list[BoundsCell]:
    """Every cell 1 <= k <= min(n, K), n <= N, sorted by (n, k).

    Per-cell lower bounds are closed under monotonicity and
    superadditivity before being compared with the upper bounds.
    """
    search_lower = search_lower or {}
    d_table = d_table or {}
    first = {
        (n, k): best_bounds(n, k, g, search_lower.get((n, k)), d_table.get((n, k)))
        for n in range(1, N + 1)
        for k in range(1, min(n, K) + 1)
    }
    closed = _closure({key: (c.lower, c.lower_src) for key, c in first.items()})
    out = []
    for key in sorted(first):
        c = first[key]
        lo, src = closed[key]
        if lo > c.upper:
            raise AssertionError(f"lower {lo} exceeds upper {c.upper} at {key}")
        out.append(BoundsCell(c.n, c.k, lo, src, c.upper, c.upper_src))
    return out


def matroid_discrepancies(N: int = 15, K: int = 13) -> list[tuple[int, int, int, int]]:
    """Cells where the published table prints C(n, k-1) - 1 as its matroid bound.

    Returns ``(n, k, printed, matroid_upper(n, k))`` tuples.
    """
    out = []
    for (n, k), (_, hi, label) in sorted(TABLE_M.items()):
        if n <= N and k <= K and label == "m" and hi == matroid_upper(n, k) - 1:
            out.append((n, k, hi, matroid_upper(n, k)))
    return out


TSV_HEADER = "# n\tk\tlower\tlower_src\tupper\tupper_src\texact"


def format_table(cells: Iterable[BoundsCell], notes: bool = True) -> str:
    cells = list(cells)
    lines = [TSV_HEADER]
    lines += [c.tsv() for c in cells]
    if notes and cells:
        N = max(c.n for c in cells)
        K = max(c.k for c in cells)
        for n, k, printed, ours in matroid_discrepancies(N, K):
            lines.append(
                f"# note ({n},{k}): published matroid entry {printed} = C({n},{k - 1}) - 1;"
                f" the matroid bound is {ours}"
            )
    return "\n".join(lines) + "\n"
