from itertools import product

import pytest
from hypothesis import given, strategies as st

from fglmcodes.gf2 import (
    BitMatrix, BitVector, DimensionError, left_nullspace, rank, vec_add, vec_mat_mul, weight,
)

from conftest import PAPER_H

H6 = BitMatrix.from_rows(PAPER_H)


def bv(text):
    return BitVector.from_string(text)


def test_vec_add_paper_codeword():
    assert vec_add(bv("111010"), bv("001000")) == bv("110010")


def test_vec_add_self_and_zero():
    v = bv("101101")
    assert (v + v) == BitVector.zero(6)
    assert v + BitVector.zero(6) == v


def test_vec_add_length_mismatch():
    with pytest.raises(DimensionError):
        vec_add(bv("101"), bv("1010"))


@pytest.mark.parametrize("text, w", [("001000", 1), ("000000", 0), ("110010", 3)])
def test_weight(text, w):
    assert weight(bv(text)) == w


def test_vec_mat_mul_paper_values():
    assert vec_mat_mul(bv("100000"), H6) == bv("111")
    assert vec_mat_mul(BitVector.zero(6), H6) == BitVector.zero(3)
    assert vec_mat_mul(bv("101100"), H6) == BitVector.zero(3)


def test_vec_mat_mul_dimension_error():
    with pytest.raises(DimensionError):
        vec_mat_mul(bv("10000"), H6)


def span_size(m: BitMatrix) -> int:
    """Brute-force oracle: number of distinct products y*M."""
    return len({vec_mat_mul(BitVector(m.nrows, y), m) for y in range(1 << m.nrows)})


def test_rank_of_paper_matrix_against_span_count():
    assert span_size(H6) == 1 << 3
    assert rank(H6) == 3


def test_rank_trivial_cases():
    assert rank(BitMatrix.zeros(4, 3)) == 0
    assert rank(BitMatrix.identity(5)) == 5


@given(st.integers(1, 6), st.integers(1, 6), st.data())
def test_rank_matches_span_count(nrows, ncols, data):
    rows = [data.draw(st.lists(st.integers(0, 1), min_size=ncols, max_size=ncols))
            for _ in range(nrows)]
    m = BitMatrix.from_rows(rows)
    assert 1 << rank(m) == span_size(m)


def test_rank_leaves_matrix_untouched():
    before = H6.packed_rows
    rank(H6)
    assert H6.packed_rows == before


def test_left_nullspace_of_paper_matrix():
    basis = left_nullspace(H6)
    assert len(basis) == 3
    for c in basis:
        assert vec_mat_mul(BitVector(6, c), H6).bits == 0


def test_str_and_string_forms():
    v = bv("111010")
    assert str(v) == "(1,1,1,0,1,0)"
    assert v.to_string() == "111010"
    assert v.to_list() == [1, 1, 1, 0, 1, 0]
    # coordinate 1 is the least significant bit
    assert v.bits == 0b010111


def test_transpose_roundtrip():
    assert H6.transpose().transpose() == H6
    assert H6.transpose()[0, 3] == 1


def test_from_string_rejects_garbage():
    with pytest.raises(ValueError):
        BitVector.from_string("10a1")


vectors32 = st.integers(1, 32).flatmap(
    lambda n: st.tuples(*(st.integers(0, (1 << n) - 1) for _ in range(3))).map(
        lambda t: tuple(BitVector(n, x) for x in t)))


@given(vectors32)
def test_add_group_laws(vs):
    a, b, c = vs
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert (a + a).bits == 0


@given(vectors32)
def test_weight_triangle(vs):
    a, b, _ = vs
    assert weight(a + b) <= weight(a) + weight(b)


@given(st.integers(0, 63), st.integers(0, 63))
def test_mul_distributes(a, b):
    va, vb = BitVector(6, a), BitVector(6, b)
    assert vec_mat_mul(va + vb, H6) == vec_mat_mul(va, H6) + vec_mat_mul(vb, H6)


def test_exhaustive_small_distributivity():
    m = BitMatrix.from_rows([[1, 0], [1, 1], [0, 1]])
    for a, b in product(range(8), repeat=2):
        lhs = vec_mat_mul(BitVector(3, a ^ b), m)
        assert lhs == vec_mat_mul(BitVector(3, a), m) + vec_mat_mul(BitVector(3, b), m)
