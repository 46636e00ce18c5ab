import math

import numpy as np
import pytest
from pydantic import ValidationError

from app.channel.awgn import (
    ReceivedBlock,
    bpsk_modulate,
    hard_flip_probability,
    posterior_flip_probability,
    rank_permutation,
    received_from_llr,
    sigma_from_snr_db,
    snr_db_from_sigma,
    transmit,
)
from app.exceptions import ChannelError
from app.schemas import ChannelConfig


def test_bpsk_modulate():
    np.testing.assert_array_equal(bpsk_modulate([0, 1, 1]), [-1.0, 1.0, 1.0])


def test_rank_permutation_example():
    np.testing.assert_array_equal(rank_permutation([0.9, 0.1, 0.5]), [1, 2, 0])


def test_rank_permutation_ties_keep_received_order():
    np.testing.assert_array_equal(rank_permutation(np.full(6, 0.7)), np.arange(6))


def test_rank_permutation_sorts(rng):
    reliability = np.abs(rng.standard_normal(1000))
    perm = rank_permutation(reliability)
    assert sorted(perm.tolist()) == list(range(1000))
    assert np.all(np.diff(reliability[perm]) >= 0)


def test_posterior_flip_probability():
    assert posterior_flip_probability(0.0) == pytest.approx(0.5)
    assert posterior_flip_probability(math.log(3)) == pytest.approx(0.25)
    assert posterior_flip_probability(50.0) < 1e-20
    values = posterior_flip_probability(np.linspace(0, 20, 200))
    assert np.all(np.diff(values) < 0)
    assert np.all((values > 0) & (values <= 0.5))


def test_posterior_flip_probability_rejects_negative():
    with pytest.raises(ValueError):
        posterior_flip_probability(-0.1)


def test_snr_convention():
    assert sigma_from_snr_db(0.0) == pytest.approx(1.0)
    assert snr_db_from_sigma(sigma_from_snr_db(9.8)) == pytest.approx(9.8)
    assert hard_flip_probability(9.8) == pytest.approx(1e-3, rel=0.02)
    assert ChannelConfig(snr_db=9.8).sigma == pytest.approx(sigma_from_snr_db(9.8))


def test_channel_config_requires_finite_snr():
    with pytest.raises(ValidationError):
        ChannelConfig(snr_db=float("inf"))


def test_block_invariants(rng):
    codeword = rng.integers(0, 2, 200, dtype=np.uint8)
    block = transmit(codeword, ChannelConfig(snr_db=3.0), rng)
    np.testing.assert_array_equal(block.hard, (block.soft >= 0).astype(np.uint8))
    np.testing.assert_array_equal(block.reliability, np.abs(block.soft))
    assert np.all(np.diff(block.sorted_reliability()) >= 0)
    assert block.n == 200


def test_zero_soft_value_is_bit_one():
    block = ReceivedBlock.from_soft([0.0, -0.5, 0.5])
    np.testing.assert_array_equal(block.hard, [1, 0, 1])


def test_noiseless_limit(rng):
    codeword = rng.integers(0, 2, 64, dtype=np.uint8)
    block = transmit(codeword, ChannelConfig(snr_db=200.0, seed=1))
    np.testing.assert_array_equal(block.hard, codeword)


def test_transmit_is_deterministic():
    codeword = np.zeros(32, dtype=np.uint8)
    a = transmit(codeword, ChannelConfig(snr_db=4.0, seed=42))
    b = transmit(codeword, ChannelConfig(snr_db=4.0, seed=42))
    np.testing.assert_array_equal(a.soft, b.soft)
    np.testing.assert_array_equal(a.perm, b.perm)


def test_flip_rate_at_9_8_db():
    rng = np.random.default_rng(98)
    cfg = ChannelConfig(snr_db=9.8)
    codeword = np.zeros(1_000_000, dtype=np.uint8)
    flips = sum(int(transmit(codeword, cfg, rng).hard.sum()) for _ in range(10))
    assert flips / 10_000_000 == pytest.approx(1e-3, rel=0.10)


@pytest.mark.parametrize("sigma", [0.5, 0.33, 0.25])
def test_hard_ber_matches_gaussian_tail(sigma):
    rng = np.random.default_rng(int(sigma * 1000))
    cfg = ChannelConfig(snr_db=snr_db_from_sigma(sigma))
    bits = 1_000_000
    errors = int(transmit(np.zeros(bits, dtype=np.uint8), cfg, rng).hard.sum())
    p = hard_flip_probability(cfg.snr_db)
    standard_error = math.sqrt(p * (1 - p) / bits)
    assert abs(errors / bits - p) < 3 * standard_error


def test_received_from_llr():
    block = received_from_llr([2.0, -0.1, 0.4])
    np.testing.assert_array_equal(block.hard, [1, 0, 1])
    np.testing.assert_array_equal(block.perm, [1, 2, 0])


def test_received_from_llr_rejects_nan():
    with pytest.raises(ChannelError):
        received_from_llr([0.5, float("nan"), -1.0])


def test_received_from_llr_keeps_infinite_values():
    block = received_from_llr([-np.inf, 0.2, np.inf])
    np.testing.assert_array_equal(block.hard, [0, 1, 1])
    np.testing.assert_array_equal(block.perm, [1, 0, 2])
