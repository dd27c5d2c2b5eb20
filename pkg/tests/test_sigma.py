import itertools

import pytest

from priocode import BitVector, DispatchGap, ParameterError, sigma_pair, sigma_quad, sigma_single, sigma_triple
from priocode.sigma import (
    MASKS,
    Permutation,
    QuadKind,
    TripleKind,
    check_sigma_pair,
    check_sigma_quad,
    check_sigma_single,
    check_sigma_triple,
    classify_quad,
    describe,
    layout,
)

from conftest import bv

# published layouts on sigma-positions, singleton first
PUBLISHED = {
    1: [(1,), (2, 3), (4, 5), (6, 7), (8, 9), (10, 11), (12, 13), (14, 15)],
    2: [(2,), (1, 3), (4, 6), (5, 7), (8, 10), (9, 11), (12, 14), (13, 15)],
    3: [(3,), (1, 2), (4, 7), (5, 6), (8, 11), (9, 10), (12, 15), (13, 14)],
    4: [(4,), (1, 5), (2, 6), (3, 7), (8, 12), (9, 13), (10, 14), (11, 15)],
    7: [(7,), (1, 6), (2, 5), (3, 4), (8, 15), (9, 14), (10, 13), (11, 12)],
    8: [(8,), (1, 9), (2, 10), (3, 11), (4, 12), (5, 13), (6, 14), (7, 15)],
}


@pytest.mark.parametrize("mask", sorted(PUBLISHED))
def test_layout_matches_published_listing(mask):
    assert layout(mask, 15) == PUBLISHED[mask]


def test_layout_small_code():
    assert layout(1, 7) == [(1,), (2, 3), (4, 5), (6, 7)]
    assert layout(2, 7) == [(2,), (1, 3), (4, 6), (5, 7)]


def test_single_examples(H3, H4):
    ident = Permutation(range(1, 8))
    assert check_sigma_single(H3, bv("100"), ident)
    p = sigma_single(H3, bv("011"))
    assert p(1) == 6
    assert {frozenset({p(2), p(3)}), frozenset({p(4), p(5)}), frozenset({p(6), p(7)})} == {
        frozenset({1, 7}), frozenset({2, 4}), frozenset({3, 5})}
    q = sigma_single(H4, bv("0001"))
    assert q(1) == 8 and check_sigma_single(H4, bv("0001"), q)


def test_pair_examples(H3, H4):
    p = sigma_pair(H3, bv("010"), bv("101"))
    assert p.images == (2, 5, 7, 1, 3, 4, 6)
    assert check_sigma_pair(H3, bv("010"), bv("101"), p)
    q = sigma_pair(H4, bv("0001"), bv("0010"))
    assert (q(1), q(2), q(3)) == (8, 4, 12)


def test_triple_examples(H4):
    _, kind = sigma_triple(H4, bv("0001"), bv("0010"), bv("0011"))
    assert kind is TripleKind.B
    p, kind = sigma_triple(H4, bv("0001"), bv("0010"), bv("0100"))
    assert kind is TripleKind.A and (p(1), p(2), p(4)) == (8, 4, 2)
    p, kind = sigma_triple(H4, bv("0001"), bv("0010"), bv("0011"))
    assert p(3) == 12 and {p(1), p(2)} == {8, 4}


def test_quad_examples(H4):
    _, kind = sigma_quad(H4, bv("1000"), bv("0100"), bv("0010"), bv("0001"))
    assert kind == QuadKind("A")
    _, kind = sigma_quad(H4, bv("0001"), bv("0010"), bv("0011"), bv("0100"))
    assert kind.variant == "B" and kind.tau == (1, 2, 3, 4)
    p, kind = sigma_quad(H4, bv("0001"), bv("0010"), bv("0100"), bv("0111"))
    assert kind == QuadKind("C")
    assert check_sigma_quad(H4, bv("0001"), bv("0010"), bv("0100"), bv("0111"), p, kind)


def test_quad_b_reports_tau(H4):
    s = [bv("0100"), bv("0001"), bv("0010"), bv("0011")]
    p, kind = sigma_quad(H4, *s)
    a, b, c, _ = (s[t - 1] for t in kind.tau)
    assert kind.variant == "B" and (a ^ b) == c
    assert check_sigma_quad(H4, *s, p, kind)


def test_validators_reject_wrong_permutation(H3, H4):
    ident = Permutation(range(1, 8))
    assert not check_sigma_single(H3, bv("011"), ident)
    p, kind = sigma_triple(H4, bv("0001"), bv("0010"), bv("0100"))
    assert not check_sigma_triple(H4, bv("0001"), bv("0010"), bv("0100"), p, TripleKind.B)


@pytest.mark.parametrize("r", [3, 4])
def test_single_and_pair_exhaustive(r):
    from priocode import build_parity_check

    H = build_parity_check(r)
    vals = [BitVector.from_int(v, r) for v in range(1, 1 << r)]
    for s in vals:
        assert check_sigma_single(H, s, sigma_single(H, s))
    for s1, s2 in itertools.permutations(vals, 2):
        assert check_sigma_pair(H, s1, s2, sigma_pair(H, s1, s2))


def test_quad_classification_exhaustive():
    counts = {"A": 0, "B": 0, "C": 0}
    for q in itertools.permutations(range(1, 16), 4):
        counts[classify_quad(q).variant] += 1
    assert sum(counts.values()) == 15 * 14 * 13 * 12
    # independent quadruples: 15*14*12*8 ordered bases of GF(2)^4
    assert counts["A"] == 15 * 14 * 12 * 8


def test_deterministic(H4):
    a = sigma_quad(H4, bv("0001"), bv("0110"), bv("1011"), bv("1100"))
    b = sigma_quad(H4, bv("0001"), bv("0110"), bv("1011"), bv("1100"))
    assert a == b


def test_preconditions(H3, H4):
    with pytest.raises(ParameterError):
        sigma_single(H3, bv("000"))
    with pytest.raises(ParameterError):
        sigma_pair(H3, bv("010"), bv("010"))
    with pytest.raises(ParameterError):
        sigma_triple(H3, bv("001"), bv("010"), bv("100"))
    with pytest.raises(ParameterError):
        sigma_quad(H4, bv("0001"), bv("0010"), bv("0001"), bv("0100"))
    with pytest.raises(ParameterError):
        Permutation((1, 1, 2))


def test_unclassifiable_quad_is_a_hard_error():
    with pytest.raises(DispatchGap):
        classify_quad((1, 1, 2, 4))  # repeated value: no kind applies


def test_describe(H4):
    info = describe(H4, [bv("0001"), bv("0010")])
    assert info["sigma"][:3] == [8, 4, 12]
    assert info["layouts"][0]["columns"][0] == [8]
    assert len(MASKS["quad-C"]) == 4
