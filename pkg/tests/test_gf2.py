import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from priocode import BitVector, DimensionError, ParameterError, disjoint, leq, support, xor
from priocode.gf2 import MAX_LENGTH

from conftest import bv


def vectors(n):
    return st.integers(0, (1 << n) - 1).map(lambda v: BitVector.from_int(v, n))


def test_xor_examples():
    assert str(xor(bv("1010"), bv("0110"))) == "1100"
    v = bv("1011001")
    assert xor(v, v).is_zero()
    assert xor(v, BitVector.zeros(7)) == v


def test_xor_length_mismatch():
    with pytest.raises(DimensionError):
        xor(bv("101"), bv("10"))


def test_support_examples():
    assert support(bv("0000001")) == {7}
    assert support(bv("0100010")) == {2, 6}
    assert support(BitVector.zeros(5)) == frozenset()


def test_leq_examples():
    assert leq(bv("010"), bv("011"))
    assert not leq(bv("100"), bv("011"))
    assert bv("110") <= bv("110")
    with pytest.raises(DimensionError):
        leq(bv("1"), bv("10"))


def test_disjoint_examples():
    assert disjoint([{7}, {1}, {3}, {5}])
    assert not disjoint([{1, 2}, {2, 3}])
    assert disjoint([set(), set()])


def test_string_roundtrip_and_positions():
    v = bv("0100010")
    assert str(v) == "0100010"
    assert v.bit(2) == 1 and v.bit(1) == 0
    assert BitVector.from_support({2, 6}, 7) == v
    assert list(v) == [0, 1, 0, 0, 0, 1, 0]


def test_length_cap():
    BitVector.zeros(MAX_LENGTH)
    with pytest.raises(ParameterError):
        BitVector.zeros(MAX_LENGTH + 1)
    with pytest.raises(ParameterError):
        BitVector.from_string("01a")
    with pytest.raises(ParameterError):
        BitVector([0, 2])
    with pytest.raises(ParameterError):
        BitVector.from_support({8}, 7)


def test_immutable_and_hashable():
    v = bv("101")
    with pytest.raises(AttributeError):
        v._n = 4
    assert {v, bv("101")} == {v}


def test_xor_group_laws_exhaustive_n3():
    vs = [BitVector.from_int(k, 3) for k in range(8)]
    for a, b, c in itertools.product(vs, repeat=3):
        assert xor(a, b) == xor(b, a)
        assert xor(xor(a, b), c) == xor(a, xor(b, c))
        assert xor(a, a).is_zero()


@given(vectors(40), vectors(40))
def test_support_of_xor_is_symmetric_difference(a, b):
    assert support(xor(a, b)) == support(a) ^ support(b)


@given(vectors(30), vectors(30), vectors(30))
def test_leq_partial_order(a, b, c):
    assert leq(a, a)
    if leq(a, b) and leq(b, a):
        assert a == b
    if leq(a, b) and leq(b, c):
        assert leq(a, c)
