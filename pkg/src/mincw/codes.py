"""Binary linear codes and their minimal codewords.

A codeword is *minimal* when its support contains the support of no other
nonzero codeword.  ``minimal_codewords`` computes the full set with a
weight-ascending sieve; ``minimal_codewords_oracle`` recomputes it straight
from the definition and exists only to cross-check the sieve.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import cached_property
from math import comb
from pathlib import Path
from typing import Iterator, Sequence

import numpy as np

from . import _kernels
from .errors import (
    BadParameter,
    BadPermutation,
    LengthOverflow,
    NotACodeword,
    ParseError,
    RankDeficient,
    TooLarge,
    ZeroWord,
)
from .gf2 import MAX_LENGTH, BitMatrix, BitVec, rank, support_of

ORACLE_MAX_K = 16


@dataclass(frozen=True)
class Codeword:
    """A codeword together with its weight and support."""

    vector: BitVec

    @classmethod
    def from_int(cls, n: int, bits: int) -> Codeword:
        return cls(BitVec(n, bits))

    @classmethod
    def from_str(cls, s: str) -> Codeword:
        return cls(BitVec.from_str(s))

    @property
    def n(self) -> int:
        return self.vector.length

    @property
    def bits(self) -> int:
        return self.vector.bits

    @cached_property
    def weight(self) -> int:
        return self.vector.weight

    @cached_property
    def support(self) -> frozenset[int]:
        return frozenset(support_of(self.vector.bits))

    def __str__(self) -> str:
        return str(self.vector)


@dataclass(frozen=True)
class LinearCode:
    """An [n, k] binary code given by a full-rank k x n generator matrix.

    Zero columns are allowed.
    """

    generator: BitMatrix

    def __post_init__(self):
        g = self.generator
        if g.cols < 1 or g.cols > MAX_LENGTH:
            raise LengthOverflow(f"length {g.cols} outside 1..{MAX_LENGTH}")
        if g.rows < 1:
            raise BadParameter("dimension must be at least 1")
        if rank(g) != g.rows:
            raise RankDeficient(f"generator has rank {rank(g)} < {g.rows} rows")

    @classmethod
    def from_rows(cls, n: int, rows: Sequence[int]) -> LinearCode:
        return cls(BitMatrix(n, tuple(rows)))

    @classmethod
    def from_strings(cls, rows: Sequence[str]) -> LinearCode:
        return cls(BitMatrix.from_strings(rows))

    @property
    def n(self) -> int:
        return self.generator.cols

    @property
    def k(self) -> int:
        return self.generator.rows

    @property
    def rows(self) -> tuple[int, ...]:
        return self.generator.row_data

    @cached_property
    def _row_array(self) -> np.ndarray:
        return np.array(self.rows, dtype=np.uint64)

    def codeword_array(self) -> np.ndarray:
        """All 2^k codewords as uint64 bitsets in Gray-code order."""
        return _kernels.gray_words(self._row_array, self.k)

    def contains(self, bits: int) -> bool:
        if bits >> self.n:
            return False
        return rank(list(self.rows) + [bits]) == self.k

    def __str__(self) -> str:
        return f"[{self.n},{self.k}] code\n{self.generator}"


@dataclass(frozen=True)
class MinimalSet:
    """The minimal codewords of a code, ordered by weight then numeric value."""

    code: LinearCode
    members: tuple[Codeword, ...] = field(repr=False)

    @property
    def count(self) -> int:
        return len(self.members)

    def bitsets(self) -> list[int]:
        return [w.bits for w in self.members]

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)


def enumerate_codewords(c: LinearCode) -> Iterator[Codeword]:
    """Yield every codeword once, starting from zero.

    Successive words differ by exactly one generator row (Gray-code order
    over messages).
    """
    w = 0
    yield Codeword.from_int(c.n, 0)
    rows = c.rows
    for i in range(1, 1 << c.k):
        w ^= rows[(i & -i).bit_length() - 1]
        yield Codeword.from_int(c.n, w)


def _as_bits(c: LinearCode, w: Codeword | BitVec | int) -> int:
    if isinstance(w, Codeword):
        w = w.vector
    if isinstance(w, BitVec):
        if w.length != c.n:
            raise NotACodeword("length mismatch")
        w = w.bits
    return int(w)


def _check_nonzero_codeword(c: LinearCode, bits: int) -> None:
    if bits == 0:
        raise ZeroWord("the zero word is never minimal")
    if not c.contains(bits):
        raise NotACodeword(f"{bits:#x} is not in the code")


def is_minimal(c: LinearCode, w: Codeword | BitVec | int) -> bool:
    """Rank test for one word.

    ``w`` is minimal iff the generator restricted to the coordinates
    outside ``supp(w)`` has rank k - 1, i.e. the only codewords living
    inside ``supp(w)`` are 0 and ``w``.
    """
    bits = _as_bits(c, w)
    _check_nonzero_codeword(c, bits)
    outside = ~bits
    return rank([r & outside for r in c.rows]) == c.k - 1


def _wrap(c: LinearCode, words) -> tuple[Codeword, ...]:
    return tuple(Codeword.from_int(c.n, int(x)) for x in words)


def minimal_codewords(c: LinearCode) -> MinimalSet:
    """All minimal codewords via a weight-ascending sieve."""
    words = _kernels.minimal_words(c._row_array, c.k, c.n)
    return MinimalSet(c, _wrap(c, words))


def count_minimal(c: LinearCode) -> int:
    """M(C) without materialising Codeword objects."""
    return int(_kernels.count_minimal(c._row_array, c.k, c.n, -1))


def minimal_codewords_oracle(c: LinearCode) -> MinimalSet:
    """Minimal codewords by testing every ordered pair of nonzero words.

    Quadratic in 2^k; refuses k > 16.
    """
    if c.k > ORACLE_MAX_K:
        raise TooLarge(f"oracle limited to k <= {ORACLE_MAX_K}")
    words = np.unique(c.codeword_array())
    words = words[words != 0]
    keep = []
    for x in words:
        inside = (words & ~x) == 0
        # x itself is always inside its own support
        if int(inside.sum()) == 1:
            keep.append(int(x))
    keep.sort(key=lambda v: (v.bit_count(), v))
    return MinimalSet(c, _wrap(c, keep))


def is_intersecting(c: LinearCode) -> bool:
    """True iff every two nonzero codewords share a coordinate."""
    return bool(_kernels.is_intersecting_words(c.codeword_array()))


def min_distance(c: LinearCode) -> int:
    return int(_kernels.min_weight(c.codeword_array(), 0))


def weight_distribution(c: LinearCode) -> list[int]:
    counts = np.bincount(np.bitwise_count(c.codeword_array()), minlength=c.n + 1)
    return [int(x) for x in counts]


def direct_sum(c: LinearCode, d: LinearCode) -> LinearCode:
    """Block-diagonal sum: C on the first coordinates, D on the rest."""
    n = c.n + d.n
    if n > MAX_LENGTH:
        raise LengthOverflow(f"direct sum length {n} > {MAX_LENGTH}")
    rows = list(c.rows) + [r << c.n for r in d.rows]
    return LinearCode(BitMatrix(n, tuple(rows)))


def extend_zero_column(c: LinearCode) -> LinearCode:
    if c.n >= MAX_LENGTH:
        raise LengthOverflow("no room for another coordinate")
    return LinearCode(BitMatrix(c.n + 1, c.rows))


def permute_coordinates(c: LinearCode, perm: Sequence[int]) -> LinearCode:
    """Code whose coordinate ``j`` is coordinate ``perm[j]`` of ``c``."""
    perm = list(perm)
    if sorted(perm) != list(range(c.n)):
        raise BadPermutation(f"not a permutation of 0..{c.n - 1}: {perm}")
    return LinearCode(c.generator.permute_columns(perm))


def decompose_into_minimal(
    c: LinearCode, w: Codeword | BitVec | int, minimal: MinimalSet | None = None
) -> list[Codeword]:
    """Split ``w`` into support-disjoint minimal codewords.

    Greedy: repeatedly remove the lightest minimal codeword (smallest value
    on ties) whose support sits inside what is left.
    """
    bits = _as_bits(c, w)
    _check_nonzero_codeword(c, bits)
    if minimal is None:
        minimal = minimal_codewords(c)
    candidates = minimal.bitsets()
    parts = []
    rest = bits
    while rest:
        m = next(x for x in candidates if x & ~rest == 0)
        parts.append(m)
        rest ^= m
    return list(_wrap(c, parts))


def components(c: LinearCode, minimal: MinimalSet | None = None) -> list[frozenset[int]]:
    """Blocks of coordinates linked by minimal-codeword supports.

    The code is the direct sum of its restrictions to these blocks.  Zero
    coordinates belong to no block.
    """
    if minimal is None:
        minimal = minimal_codewords(c)
    parent = list(range(c.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    used = 0
    for w in minimal.bitsets():
        used |= w
        sup = support_of(w)
        for j in sup[1:]:
            parent[find(j)] = find(sup[0])
    blocks: dict[int, set[int]] = {}
    for j in support_of(used):
        blocks.setdefault(find(j), set()).add(j)
    return sorted((frozenset(b) for b in blocks.values()), key=min)


def is_decomposable(c: LinearCode) -> bool:
    """True iff the code is, up to coordinate order, a direct sum of two
    codes of positive dimension."""
    return len(components(c)) > 1


# constructions


def universe_code(y: int) -> LinearCode:
    """U_y, the whole space of length y."""
    if y < 1:
        raise BadParameter("universe code needs y >= 1")
    return LinearCode(BitMatrix.identity(y))


def parity_code(x: int) -> LinearCode:
    """P_x, all even-weight words of length x."""
    if x < 2:
        raise BadParameter("parity code needs x >= 2")
    last = 1 << (x - 1)
    return LinearCode(BitMatrix(x, tuple((1 << i) | last for i in range(x - 1))))


def repetition_code(n: int) -> LinearCode:
    if n < 1:
        raise BadParameter("repetition code needs n >= 1")
    return LinearCode(BitMatrix(n, ((1 << n) - 1,)))


def extended_hamming() -> LinearCode:
    """The self-dual [8,4,4] extended Hamming code."""
    return LinearCode.from_strings(["11110000", "00111100", "00001111", "01010101"])


def random_code(n: int, k: int, rng: random.Random | None = None) -> LinearCode:
    """Uniform random full-rank generator (rejection sampling)."""
    if not 1 <= k <= n <= MAX_LENGTH:
        raise BadParameter(f"need 1 <= k <= n <= {MAX_LENGTH}")
    rng = rng or random.Random()
    while True:
        rows = [rng.getrandbits(n) for _ in range(k)]
        if rank(rows) == k:
            return LinearCode.from_rows(n, rows)


def matroid_cap(c: LinearCode) -> int:
    return comb(c.n, c.k - 1)


# code files: "n k" then k rows of 0/1 characters; '#' comments and blanks skipped


def _content_lines(text: str) -> list[str]:
    out = []
    for ln in text.splitlines():
        s = ln.strip()
        if s and not s.startswith("#"):
            out.append(s)
    return out


def parse_code(text: str) -> LinearCode:
    lines = _content_lines(text)
    if not lines:
        raise ParseError("empty code file")
    try:
        n, k = (int(t) for t in lines[0].split())
    except ValueError:
        raise ParseError(f"bad header line {lines[0]!r}, expected 'n k'") from None
    rows = lines[1:]
    if len(rows) != k:
        raise ParseError(f"header says k={k} but found {len(rows)} rows")
    for r in rows:
        if len(r) != n or set(r) - {"0", "1"}:
            raise ParseError(f"row {r!r} is not a 0/1 string of length {n}")
    try:
        return LinearCode.from_strings(rows)
    except (RankDeficient, BadParameter, LengthOverflow) as exc:
        raise ParseError(str(exc)) from exc


def format_code(c: LinearCode) -> str:
    return "\n".join([f"{c.n} {c.k}", *c.generator.to_strings()]) + "\n"


def read_code(path: str | Path) -> LinearCode:
    return parse_code(Path(path).read_text())


def write_code(c: LinearCode, path: str | Path) -> None:
    Path(path).write_text(format_code(c))
