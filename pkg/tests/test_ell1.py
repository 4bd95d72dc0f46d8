"""Finite fields, Reed-Solomon indicator codes, and l1-ball packings."""

import random
from fractions import Fraction
from itertools import combinations

import pytest

from seppack.ell1 import (
    BinaryCode,
    GF2m,
    L1Packing,
    rs_indicator_code,
    code_from_text,
    code_to_text,
    contact_degrees,
    min_distance,
    min_distance_neighbor_count,
    separating_functional,
    touching_pairs,
    verify_total_separability_l1,
)
from seppack.errors import DomainError, ParseError
from seppack.linalg import Vec


def test_field_axioms_small():
    for k in (1, 2, 3, 4):
        f = GF2m(k)
        q = f.q
        for a in range(q):
            assert f.mul(a, 1) == a
            assert f.mul(a, 0) == 0
        # every nonzero element is invertible
        for a in range(1, q):
            assert sorted(f.mul(a, b) for b in range(q)) == list(range(q))


def test_min_distance_examples():
    assert min_distance(BinaryCode.from_strings(["0000", "1111"])) == 4
    assert min_distance(BinaryCode.from_strings(["00", "01", "10"])) == 1
    with pytest.raises(DomainError):
        min_distance(BinaryCode.from_strings(["0101"]))


def test_rs_code_k1_degenerates_to_constants():
    code = rs_indicator_code(1)
    assert code.length == 4 and len(code) == 2
    assert min_distance(code) == 4


def test_rs_code_k2_structure():
    code = rs_indicator_code(2)
    assert code.length == 16
    assert len(code) == 16
    assert min_distance(code) == 6
    for w in code.words:
        assert min_distance_neighbor_count(code, w) == 12


def test_rs_code_k3_structure():
    code = rs_indicator_code(3)
    assert code.length == 64
    assert len(code) == 4096
    assert min_distance(code) == 10
    # neighbor count is the same for every word; spot check a few
    sample = [code.words[i] for i in (0, 1, 777, 4095)]
    for w in sample:
        assert min_distance_neighbor_count(code, w) == 392
    assert 392 >= 2 ** 8  # at least 2^sqrt(64)


def test_rs_code_symbol_linearity():
    # the symbol code is linear: symbolwise XOR-field-sum of two codewords
    # is again a codeword (polynomials are closed under addition)
    code = rs_indicator_code(2)
    q = 4

    def symbols(word):
        out = []
        for t in range(q):
            block = (word >> (t * q)) & (2 ** q - 1)
            out.append(block.bit_length() - 1)
        return out

    def encode(syms):
        word = 0
        for t, s in enumerate(syms):
            word |= 1 << (t * q + s)
        return word

    words = list(code.words)
    for a in words[:6]:
        for b in words[:6]:
            summed = [sa ^ sb for sa, sb in zip(symbols(a), symbols(b))]
            assert encode(summed) in code


def test_binary_distance_is_twice_symbol_distance():
    code = rs_indicator_code(2)
    q = 4

    def symbols(word):
        return [((word >> (t * q)) & (2 ** q - 1)).bit_length() - 1
                for t in range(q)]

    for a, b in combinations(code.words, 2):
        sym = sum(1 for x, y in zip(symbols(a), symbols(b)) if x != y)
        assert (a ^ b).bit_count() == 2 * sym


def test_separating_functional_examples():
    f = separating_functional([0, 0])
    assert f.coefficients == (Fraction(-1), Fraction(-1))
    assert f(Vec([0, 0])) == 0
    f = separating_functional([1, 1, 1, 1])
    assert f(Vec([1, 1, 1, 1])) == 4
    with pytest.raises(DomainError):
        separating_functional([0, 2])


def test_functional_gap_equals_hamming_exhaustively():
    d = 6
    for u in range(2 ** d):
        ubits = [(u >> i) & 1 for i in range(d)]
        f = separating_functional(ubits)
        fu = f(Vec(ubits))
        for w in (0, 1, 19, 63, 2 ** d - 1):
            wbits = [(w >> i) & 1 for i in range(d)]
            gap = fu - f(Vec(wbits))
            assert gap == (u ^ w).bit_count()


def test_total_separability_trivial_codes():
    code = BinaryCode.from_strings(["00", "11"])
    packing = L1Packing.from_code(code)
    assert packing.radius == 1
    assert verify_total_separability_l1(packing).accepted
    even = BinaryCode.from_strings(["000", "011", "101", "110"])
    assert verify_total_separability_l1(L1Packing.from_code(even)).accepted


def test_total_separability_rs_k2():
    packing = L1Packing.from_code(rs_indicator_code(2))
    assert verify_total_separability_l1(packing).accepted


def test_total_separability_radius_mismatch():
    code = BinaryCode.from_strings(["00", "11"])
    with pytest.raises(DomainError):
        verify_total_separability_l1(L1Packing(code, Fraction(2)))


def test_total_separability_random_codes():
    # the hyperplane property holds for every code at radius D/2, not just
    # the Reed-Solomon family
    rng = random.Random(11)
    for _ in range(25):
        d = rng.randint(4, 10)
        words = {rng.getrandbits(d) for _ in range(rng.randint(2, 12))}
        if len(words) < 2:
            continue
        code = BinaryCode(d, words)
        packing = L1Packing.from_code(code)
        assert verify_total_separability_l1(packing).accepted


def test_touching_pairs_examples():
    code = BinaryCode.from_strings(["00", "11"])
    packing = L1Packing(code, Fraction(1))
    assert touching_pairs(packing) == [(0, 1)]
    code = BinaryCode.from_strings(["0000", "1111"])
    packing = L1Packing(code, Fraction(1))
    assert touching_pairs(packing) == []


def test_contact_degrees_match_neighbor_counts():
    code = rs_indicator_code(2)
    packing = L1Packing.from_code(code)
    degrees = contact_degrees(packing)
    assert degrees == [
        min_distance_neighbor_count(code, w) for w in code.words
    ]


def test_neighbor_count_requires_membership():
    code = rs_indicator_code(2)
    with pytest.raises(DomainError):
        min_distance_neighbor_count(code, 12345678)


def test_code_text_roundtrip():
    code = rs_indicator_code(2)
    back = code_from_text(code_to_text(code))
    assert back.words == code.words and back.length == code.length
    with pytest.raises(ParseError):
        code_from_text("01\n0x\n")
