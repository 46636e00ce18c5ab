from itertools import product

import numpy as np
import pytest

from app.codes.bch import PRIMITIVE_POLYNOMIALS, bch_code, bch_generator
from app.codes.gf2 import (
    BinaryLinearCode,
    all_codewords,
    crc_code,
    crc_remainder,
    gf2_rank,
    minimum_distance,
    random_linear_code,
)
from app.exceptions import CodeConstructionError, DimensionMismatchError


def bits(text):
    return np.array([int(c) for c in text], dtype=np.uint8)


def to_text(word):
    return "".join(str(int(b)) for b in word)


# --------------------------
# Random linear codes
# --------------------------
def test_zero_message_gives_zero_codeword():
    code = random_linear_code(20, 9, seed=1)
    assert not code.encode(np.zeros(9, dtype=np.uint8)).any()
    assert code.is_codeword(np.zeros(20, dtype=np.uint8))


def test_rlc_is_systematic(rng):
    code = random_linear_code(64, 52, seed=5)
    message = rng.integers(0, 2, 52, dtype=np.uint8)
    codeword = code.encode(message)
    np.testing.assert_array_equal(codeword[:52], message)
    assert code.is_codeword(codeword)


def test_rlc_is_deterministic():
    a = random_linear_code(64, 52, seed=9)
    b = random_linear_code(64, 52, seed=9)
    np.testing.assert_array_equal(a.generator, b.generator)
    np.testing.assert_array_equal(a.parity, b.parity)
    assert a.columns == b.columns


def test_small_rlc_has_identity_block():
    code = random_linear_code(4, 2, seed=11)
    np.testing.assert_array_equal(code.generator[:, :2], np.eye(2, dtype=np.uint8))
    assert gf2_rank(code.generator) == 2


@pytest.mark.parametrize("n,k,seed", [(64, 52, 0), (32, 20, 4), (128, 110, 7)])
def test_rlc_invariants(n, k, seed):
    code = random_linear_code(n, k, seed)
    G = code.generator.astype(int)
    H = code.parity.astype(int)
    assert not ((G @ H.T) % 2).any()
    assert gf2_rank(G) == k
    assert gf2_rank(H) == n - k
    assert H.any(axis=0).all()


def test_rlc_parity_rows_are_uniform_over_non_zero_rows():
    rows = set()
    for seed in range(40):
        code = random_linear_code(12, 10, seed)
        P = code.generator[:, 10:]
        assert P.any(axis=1).all()
        rows.update(tuple(int(b) for b in row) for row in P)
    assert rows == {(0, 1), (1, 0), (1, 1)}


@pytest.mark.parametrize("n,k", [(4, 4), (4, 0), (3, 5)])
def test_rlc_rejects_bad_dimensions(n, k):
    with pytest.raises(CodeConstructionError):
        random_linear_code(n, k)


def test_linearity_exhaustive():
    code = random_linear_code(18, 6, seed=2)
    messages = [np.array(m, dtype=np.uint8) for m in product((0, 1), repeat=6)]
    codewords = [code.encode(m) for m in messages]
    for m1, c1 in zip(messages, codewords):
        for m2, c2 in zip(messages, codewords):
            np.testing.assert_array_equal(code.encode(m1 ^ m2), c1 ^ c2)


def test_single_flip_is_never_a_codeword(rng):
    for code in (random_linear_code(24, 12, seed=8), crc_code(7, 4, 0xB), bch_code(4, 2)):
        codeword = code.encode(rng.integers(0, 2, code.k, dtype=np.uint8))
        for j in range(code.n):
            word = codeword.copy()
            word[j] ^= 1
            assert not code.is_codeword(word)


def test_packed_syndrome_matches_bit_syndrome(rng, rlc_16_8):
    for _ in range(50):
        word = rng.integers(0, 2, 16, dtype=np.uint8)
        syndrome = rlc_16_8.syndrome_bits(word)
        packed = sum(int(b) << r for r, b in enumerate(syndrome.bits))
        assert rlc_16_8.syndrome(word) == packed
        assert syndrome.is_zero == rlc_16_8.is_codeword(word)


def test_length_mismatch_raises(rlc_16_8):
    with pytest.raises(DimensionMismatchError):
        rlc_16_8.encode(np.zeros(7, dtype=np.uint8))
    with pytest.raises(DimensionMismatchError):
        rlc_16_8.is_codeword(np.zeros(15, dtype=np.uint8))


def test_zero_parity_column_is_rejected():
    G = np.array([[0, 0, 1]])
    H = np.array([[1, 0, 0], [0, 1, 0]])
    with pytest.raises(CodeConstructionError, match="zero column"):
        BinaryLinearCode(n=3, k=1, generator=G, parity=H)


def test_inconsistent_matrices_are_rejected():
    G = np.array([[1, 1, 0]])
    H = np.array([[1, 0, 0], [0, 1, 1]])
    with pytest.raises(CodeConstructionError):
        BinaryLinearCode(n=3, k=1, generator=G, parity=H)


# --------------------------
# CRC codes
# --------------------------
@pytest.mark.parametrize("divisor", [0xB, "0xB", "b", [1, 0, 1, 1]])
def test_crc_worked_example(divisor):
    code = crc_code(7, 4, divisor)
    assert to_text(code.encode(bits("1101"))) == "1101001"
    assert code.is_codeword(bits("1101001"))
    assert not code.is_codeword(bits("1101000"))
    assert code.is_codeword(np.zeros(7, dtype=np.uint8))


def test_crc_remainder_long_division():
    np.testing.assert_array_equal(crc_remainder(bits("1101000"), 0xB), bits("001"))
    np.testing.assert_array_equal(crc_remainder(bits("1101001"), 0xB), bits("000"))


def test_crc_matrix_test_equals_polynomial_test(rng):
    divisor = 0b10011
    code = crc_code(12, 8, divisor)
    for codeword in all_codewords(code):
        assert not crc_remainder(codeword, divisor).any()
    for _ in range(300):
        word = rng.integers(0, 2, 12, dtype=np.uint8)
        assert code.is_codeword(word) == (not crc_remainder(word, divisor).any())


def test_crc_degree_mismatch():
    with pytest.raises(CodeConstructionError):
        crc_code(8, 4, 0xB)


def test_crc_needs_constant_term():
    with pytest.raises(CodeConstructionError):
        crc_code(7, 4, 0b1010)


def test_crc_bad_hex():
    with pytest.raises(CodeConstructionError):
        crc_code(7, 4, "0xZZ")


# --------------------------
# BCH codes
# --------------------------
def test_bch_single_error_generator_is_field_polynomial():
    generator, n, k = bch_generator(4, 1)
    assert (n, k) == (15, 11)
    assert generator == tuple(int(b) for b in format(PRIMITIVE_POLYNOMIALS[4], "b"))


def test_bch_15_7_generator():
    generator, n, k = bch_generator(4, 2)
    assert (n, k) == (15, 7)
    assert len(generator) - 1 == 8
    assert to_text(generator) == "111010001"


def test_bch_15_5_generator():
    generator, n, k = bch_generator(4, 3)
    assert (n, k) == (15, 5)
    assert to_text(generator) == "10100110111"


def test_bch_255_231():
    _, n, k = bch_generator(8, 3)
    assert (n, k) == (255, 231)


@pytest.mark.parametrize("m,t,distance", [(4, 2, 5), (4, 3, 7), (3, 1, 3)])
def test_bch_designed_distance(m, t, distance):
    assert minimum_distance(bch_code(m, t)) == distance


def test_bch_code_is_cyclic_crc(rng):
    code = bch_code(5, 2)
    assert code.label == "BCH[31,21]"
    codeword = code.encode(rng.integers(0, 2, code.k, dtype=np.uint8))
    assert code.is_codeword(np.roll(codeword, 3))


@pytest.mark.parametrize("m,t", [(1, 1), (11, 2), (4, 0), (4, 8)])
def test_bch_rejects_bad_parameters(m, t):
    with pytest.raises(CodeConstructionError):
        bch_generator(m, t)
