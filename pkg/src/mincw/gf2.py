"""Bit-packed linear algebra over GF(2).

Vectors are Python ints used as bitsets: bit ``j`` holds coordinate ``j``.
String renderings list coordinate 0 first, so ``"1100"`` is the int ``0b0011``.
Lengths are capped at 64 so every vector fits one machine word in the
compiled kernels.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import BadParameter, RankDeficient

MAX_LENGTH = 64


def popcount(x: int) -> int:
    return x.bit_count()


def support_of(x: int) -> tuple[int, ...]:
    out = []
    while x:
        low = x & -x
        out.append(low.bit_length() - 1)
        x ^= low
    return tuple(out)


def bits_to_str(x: int, length: int) -> str:
    return "".join("1" if (x >> j) & 1 else "0" for j in range(length))


def str_to_bits(s: str) -> int:
    x = 0
    for j, ch in enumerate(s):
        if ch == "1":
            x |= 1 << j
        elif ch != "0":
            raise BadParameter(f"not a 0/1 string: {s!r}")
    return x


@dataclass(frozen=True)
class BitVec:
    """A binary vector of fixed length packed into one int."""

    length: int
    bits: int = 0

    def __post_init__(self):
        if not 0 <= self.length <= MAX_LENGTH:
            raise BadParameter(f"length {self.length} outside 0..{MAX_LENGTH}")
        if self.bits < 0 or self.bits >> self.length:
            raise BadParameter("bits set beyond vector length")

    @classmethod
    def from_str(cls, s: str) -> BitVec:
        s = s.strip()
        return cls(len(s), str_to_bits(s))

    @classmethod
    def from_support(cls, length: int, support: Iterable[int]) -> BitVec:
        x = 0
        for j in support:
            x |= 1 << j
        return cls(length, x)

    @property
    def weight(self) -> int:
        return self.bits.bit_count()

    @property
    def support(self) -> tuple[int, ...]:
        return support_of(self.bits)

    def is_zero(self) -> bool:
        return self.bits == 0

    def __len__(self) -> int:
        return self.length

    def __getitem__(self, j: int) -> int:
        if not 0 <= j < self.length:
            raise IndexError(j)
        return (self.bits >> j) & 1

    def _check(self, other: BitVec) -> None:
        if self.length != other.length:
            raise BadParameter("length mismatch")

    def __xor__(self, other: BitVec) -> BitVec:
        self._check(other)
        return BitVec(self.length, self.bits ^ other.bits)

    __add__ = __xor__

    def __and__(self, other: BitVec) -> BitVec:
        self._check(other)
        return BitVec(self.length, self.bits & other.bits)

    def __or__(self, other: BitVec) -> BitVec:
        self._check(other)
        return BitVec(self.length, self.bits | other.bits)

    def dot(self, other: BitVec) -> int:
        self._check(other)
        return (self.bits & other.bits).bit_count() & 1

    def __str__(self) -> str:
        return bits_to_str(self.bits, self.length)


@dataclass(frozen=True)
class BitMatrix:
    """A dense GF(2) matrix stored as a tuple of row bitsets.

    Zero-row matrices are allowed and mean "no constraints".
    """

    cols: int
    row_data: tuple[int, ...] = ()

    def __post_init__(self):
        if not 0 <= self.cols <= MAX_LENGTH:
            raise BadParameter(f"cols {self.cols} outside 0..{MAX_LENGTH}")
        object.__setattr__(self, "row_data", tuple(int(r) for r in self.row_data))
        for r in self.row_data:
            if r < 0 or r >> self.cols:
                raise BadParameter("row has bits beyond the column count")

    @property
    def rows(self) -> int:
        return len(self.row_data)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @classmethod
    def from_strings(cls, lines: Sequence[str], cols: int | None = None) -> BitMatrix:
        lines = [ln.strip() for ln in lines]
        if cols is None:
            if not lines:
                raise BadParameter("cannot infer column count from zero rows")
            cols = len(lines[0])
        if any(len(ln) != cols for ln in lines):
            raise BadParameter("rows of unequal length")
        return cls(cols, tuple(str_to_bits(ln) for ln in lines))

    @classmethod
    def from_array(cls, a) -> BitMatrix:
        a = np.asarray(a, dtype=np.uint8) & 1
        if a.ndim != 2:
            raise BadParameter("expected a 2-d array")
        weights = np.left_shift(np.uint64(1), np.arange(a.shape[1], dtype=np.uint64))
        data = tuple(int(x) for x in (a.astype(np.uint64) * weights).sum(axis=1, dtype=np.uint64))
        return cls(a.shape[1], data)

    @classmethod
    def identity(cls, n: int) -> BitMatrix:
        return cls(n, tuple(1 << i for i in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> BitMatrix:
        return cls(cols, (0,) * rows)

    def to_array(self) -> np.ndarray:
        out = np.zeros(self.shape, dtype=np.uint8)
        for i, r in enumerate(self.row_data):
            for j in support_of(r):
                out[i, j] = 1
        return out

    def to_strings(self) -> list[str]:
        return [bits_to_str(r, self.cols) for r in self.row_data]

    def row(self, i: int) -> BitVec:
        return BitVec(self.cols, self.row_data[i])

    def column(self, j: int) -> int:
        """Column ``j`` as a bitset over row indices."""
        c = 0
        for i, r in enumerate(self.row_data):
            if (r >> j) & 1:
                c |= 1 << i
        return c

    def column_data(self) -> tuple[int, ...]:
        return tuple(self.column(j) for j in range(self.cols))

    def transpose(self) -> BitMatrix:
        return BitMatrix(self.rows, self.column_data())

    def permute_columns(self, perm: Sequence[int]) -> BitMatrix:
        """New matrix whose column ``j`` is old column ``perm[j]``."""
        out = []
        for r in self.row_data:
            x = 0
            for j, src in enumerate(perm):
                if (r >> src) & 1:
                    x |= 1 << j
            out.append(x)
        return BitMatrix(len(perm), tuple(out))

    def hstack(self, other: BitMatrix) -> BitMatrix:
        if self.rows != other.rows:
            raise BadParameter("row count mismatch")
        return BitMatrix(
            self.cols + other.cols,
            tuple(a | (b << self.cols) for a, b in zip(self.row_data, other.row_data)),
        )

    def mul_transpose(self, other: BitMatrix) -> BitMatrix:
        """``self @ other.T`` over GF(2)."""
        if self.cols != other.cols:
            raise BadParameter("column count mismatch")
        return BitMatrix(
            other.rows,
            tuple(
                sum(((a & b).bit_count() & 1) << j for j, b in enumerate(other.row_data))
                for a in self.row_data
            ),
        )

    def __str__(self) -> str:
        return "\n".join(self.to_strings())


def _as_rows(m: BitMatrix | Sequence[int]) -> list[int]:
    return list(m.row_data) if isinstance(m, BitMatrix) else [int(r) for r in m]


def rank(m: BitMatrix | Sequence[int]) -> int:
    """Dimension of the row space."""
    basis: list[int] = []
    for r in _as_rows(m):
        for b in basis:
            r = min(r, r ^ b)
        if r:
            basis.append(r)
            basis.sort(reverse=True)
    return len(basis)


def rref(m: BitMatrix) -> tuple[BitMatrix, list[int]]:
    """Reduced row echelon form with lowest-index pivots.

    The row count is preserved; dependent rows come back as zero rows at
    the bottom.
    """
    rows = list(m.row_data)
    pivots: list[int] = []
    r = 0
    for col in range(m.cols):
        if r == len(rows):
            break
        bit = 1 << col
        piv = next((i for i in range(r, len(rows)) if rows[i] & bit), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i] & bit:
                rows[i] ^= rows[r]
        pivots.append(col)
        r += 1
    return BitMatrix(m.cols, tuple(rows)), pivots


def kernel_basis(m: BitMatrix) -> BitMatrix:
    """Basis of ``{x : m x^T = 0}``, one row per free column in increasing order."""
    red, pivots = rref(m)
    pivot_rows = list(zip(pivots, red.row_data))
    pivot_set = set(pivots)
    basis = []
    for f in range(m.cols):
        if f in pivot_set:
            continue
        v = 1 << f
        for p, row in pivot_rows:
            if (row >> f) & 1:
                v |= 1 << p
        basis.append(v)
    return BitMatrix(m.cols, tuple(basis))


def systematic_form(g: BitMatrix) -> tuple[BitMatrix, list[int]]:
    """Return ``(s, perm)`` with ``s = [I | A]`` and column j of ``s`` taken
    from column ``perm[j]`` of the row-reduced ``g``.

    Raises RankDeficient when the rows of ``g`` are dependent.
    """
    red, pivots = rref(g)
    if len(pivots) < g.rows:
        raise RankDeficient(f"rank {len(pivots)} < {g.rows} rows")
    pivot_set = set(pivots)
    perm = pivots + [j for j in range(g.cols) if j not in pivot_set]
    return red.permute_columns(perm), perm


def invert_permutation(perm: Sequence[int]) -> list[int]:
    inv = [0] * len(perm)
    for j, p in enumerate(perm):
        inv[p] = j
    return inv


def parity_check_from_generator(g: BitMatrix) -> BitMatrix:
    """An (n-k) x n parity-check matrix for the code generated by ``g``.

    For ``g = [I | A]`` the result is ``[A^T | I]``.
    """
    if rank(g) < g.rows:
        raise RankDeficient("generator rows are dependent")
    return kernel_basis(g)


def span(rows: Sequence[int]) -> list[int]:
    """All linear combinations of ``rows``, in Gray-code order starting from 0."""
    out = [0]
    w = 0
    for i in range(1, 1 << len(rows)):
        w ^= rows[(i & -i).bit_length() - 1]
        out.append(w)
    return out
