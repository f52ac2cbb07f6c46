import random

import numpy as np
import pytest
from hypothesis import given, settings

from conftest import matrices, span_set
from mincw.errors import BadParameter, RankDeficient
from mincw.gf2 import (
    BitMatrix,
    BitVec,
    invert_permutation,
    kernel_basis,
    parity_check_from_generator,
    rank,
    rref,
    span,
    systematic_form,
)

M = BitMatrix.from_strings


def test_bitvec_basics():
    v = BitVec.from_str("1101")
    assert v.bits == 0b1011
    assert v.weight == 3
    assert v.support == (0, 1, 3)
    assert str(v) == "1101"
    assert (v ^ v).is_zero()
    assert v[2] == 0 and v[3] == 1
    with pytest.raises(BadParameter):
        BitVec(3, 0b1000)
    with pytest.raises(BadParameter):
        BitVec(65, 0)


def test_bitmatrix_roundtrips():
    m = M(["1100", "0110"])
    assert m.shape == (2, 4)
    assert m.to_strings() == ["1100", "0110"]
    assert BitMatrix.from_array(m.to_array()) == m
    assert m.transpose().transpose() == m
    assert m.column(1) == 0b11


@pytest.mark.parametrize(
    "m, expected",
    [
        (BitMatrix.identity(3), 3),
        (BitMatrix.zeros(4, 5), 0),
        (M(["1100", "0110", "1010"]), 2),
    ],
)
def test_rank_examples(m, expected):
    assert rank(m) == expected
    # brute-force check: |span| = 2^rank
    assert len(span_set(m.row_data)) == 2**expected


def test_rref_examples():
    red, piv = rref(BitMatrix.identity(3))
    assert red == BitMatrix.identity(3) and piv == [0, 1, 2]
    red, piv = rref(M(["11", "11"]))
    assert red.to_strings() == ["11", "00"] and piv == [0]
    red, piv = rref(M(["011", "110"]))
    assert red.to_strings() == ["101", "011"] and piv == [0, 1]
    assert span_set(red.row_data) == span_set(M(["011", "110"]).row_data)


@given(matrices())
def test_rref_properties(m):
    red, piv = rref(m)
    assert rank(m) == rank(red) == len(piv)
    assert piv == sorted(set(piv))
    assert span_set(red.row_data) == span_set(m.row_data)
    # reduced: each pivot column has a single one, in its own row
    for i, p in enumerate(piv):
        assert red.row_data[i] & ((1 << p) - 1) == 0
        assert [(r >> p) & 1 for r in red.row_data].count(1) == 1
    assert all(r == 0 for r in red.row_data[len(piv):])


def test_rank_random_row_operations():
    rnd = random.Random(7)
    for _ in range(200):
        cols = rnd.randint(1, 12)
        rows = [rnd.getrandbits(cols) for _ in range(rnd.randint(1, 8))]
        base = rank(rows)
        for _ in range(10):
            i, j = rnd.randrange(len(rows)), rnd.randrange(len(rows))
            if rnd.random() < 0.5:
                rows[i], rows[j] = rows[j], rows[i]
            elif i != j:
                rows[i] ^= rows[j]
        assert rank(rows) == base


def test_kernel_examples():
    assert kernel_basis(BitMatrix.identity(4)).rows == 0
    k = kernel_basis(M(["111"]))
    assert k.rows == 2
    assert all(r.bit_count() % 2 == 0 for r in k.row_data)
    triangle = M(["110", "011", "101"])  # vertex rows, edge columns
    assert kernel_basis(triangle).to_strings() == ["111"]


@given(matrices())
def test_kernel_properties(m):
    kb = kernel_basis(m)
    assert kb.rows + rank(m) == m.cols
    assert rank(kb) == kb.rows
    for x in kb.row_data:
        assert all((x & r).bit_count() % 2 == 0 for r in m.row_data)
    # completeness by brute force on small widths
    if m.cols <= 10:
        null = {x for x in range(1 << m.cols) if all((x & r).bit_count() % 2 == 0 for r in m.row_data)}
        assert span_set(kb.row_data) == null


def test_systematic_form_examples():
    g = M(["1011", "0101"])
    s, perm = systematic_form(g)
    assert s == g and perm == [0, 1, 2, 3]

    s, perm = systematic_form(M(["0010", "0001"]))
    assert perm[:2] == [2, 3]
    assert s.to_strings() == ["1000", "0100"]

    g = M(["1110", "0111"])
    s, perm = systematic_form(g)
    assert s.to_strings()[0][:2] == "10" and s.to_strings()[1][:2] == "01"
    # deterministic lowest-index pivots give A = {01, 11} with the identity permutation
    assert perm == [0, 1, 2, 3]
    assert [row[2:] for row in s.to_strings()] == ["01", "11"]
    back = s.permute_columns(invert_permutation(perm))
    assert span_set(back.row_data) == span_set(g.row_data)


@given(matrices(max_rows=5, max_cols=9))
@settings(max_examples=150)
def test_systematic_form_properties(m):
    if rank(m) < m.rows:
        with pytest.raises(RankDeficient):
            systematic_form(m)
        return
    s, perm = systematic_form(m)
    k = m.rows
    assert all(((r >> k) << k) ^ r == 1 << i for i, r in enumerate(s.row_data))
    assert sorted(perm) == list(range(m.cols))
    back = s.permute_columns(invert_permutation(perm))
    assert span_set(back.row_data) == span_set(m.row_data)


def test_parity_check_examples(hamming):
    g = M(["10011", "01010"])  # [I | A] with A = {011, 010}
    h = parity_check_from_generator(g)
    assert h.to_strings() == ["00100", "11010", "10001"]  # [A^T | I]
    assert parity_check_from_generator(BitMatrix.identity(5)).rows == 0

    h = parity_check_from_generator(hamming.generator)
    assert h.rows == 4 and rank(h) == 4
    for c in span(hamming.rows):
        assert all((c & r).bit_count() % 2 == 0 for r in h.row_data)
    with pytest.raises(RankDeficient):
        parity_check_from_generator(M(["11", "11"]))


@given(matrices(max_rows=5, max_cols=10))
def test_parity_check_orthogonal(m):
    if m.rows == 0 or rank(m) < m.rows:
        return
    h = parity_check_from_generator(m)
    assert h.rows == m.cols - m.rows
    assert rank(h) == h.rows
    assert all(r == 0 for r in m.mul_transpose(h).row_data)


def test_span_gray_order():
    rows = [0b001, 0b010, 0b100]
    words = span(rows)
    assert len(set(words)) == 8
    assert words[0] == 0
    assert all((a ^ b) in rows for a, b in zip(words, words[1:]))


def test_from_array_width_64():
    a = np.zeros((1, 64), dtype=np.uint8)
    a[0, 63] = 1
    assert BitMatrix.from_array(a).row_data == (1 << 63,)
