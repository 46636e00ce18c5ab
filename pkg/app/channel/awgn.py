# app/channel/awgn.py
"""
BPSK over AWGN, hard decisions and reliability ranking.

SNR convention: SNR_dB = 20·log10(1/σ) for unit-energy symbols, which puts
the hard-decision flip probability Q(1/σ) at about 1e-3 for 9.8 dB.
"""

from dataclasses import dataclass
from typing import Optional, Sequence, Union

import numpy as np
from scipy import special

from app.codes.gf2 import as_bits
from app.exceptions import ChannelError
from app.schemas import ChannelConfig

Reals = Union[np.ndarray, Sequence[float]]


def sigma_from_snr_db(snr_db: float) -> float:
    return 10.0 ** (-snr_db / 20.0)


def snr_db_from_sigma(sigma: float) -> float:
    if sigma <= 0:
        raise ValueError("sigma must be positive")
    return -20.0 * np.log10(sigma)


def hard_flip_probability(snr_db: float) -> float:
    """Q(1/σ): raw bit error rate of hard decisions at this SNR."""
    return float(0.5 * special.erfc(1.0 / (sigma_from_snr_db(snr_db) * np.sqrt(2.0))))


def posterior_flip_probability(llr_magnitude):
    """e^−x / (1 + e^−x); works elementwise on arrays."""
    x = np.asarray(llr_magnitude, dtype=float)
    if np.any(x < 0):
        raise ValueError("LLR magnitude must be non-negative")
    p = special.expit(-x)
    return float(p) if p.ndim == 0 else p


def bpsk_modulate(codeword) -> np.ndarray:
    return 2.0 * as_bits(codeword).astype(float) - 1.0


def rank_permutation(reliability: Reals) -> np.ndarray:
    """0-based indices of the bits from least to most reliable; ties keep received order."""
    return np.argsort(np.asarray(reliability, dtype=float), kind="stable")


@dataclass(frozen=True, eq=False)
class ReceivedBlock:
    """Channel output of one block with everything the decoders need."""

    soft: np.ndarray
    reliability: np.ndarray
    hard: np.ndarray
    perm: np.ndarray

    @classmethod
    def from_soft(cls, soft: Reals) -> "ReceivedBlock":
        y = np.asarray(soft, dtype=float).reshape(-1)
        reliability = np.abs(y)
        block = cls(
            soft=y,
            reliability=reliability,
            hard=(y >= 0).astype(np.uint8),
            perm=rank_permutation(reliability),
        )
        for arr in (block.soft, block.reliability, block.hard, block.perm):
            arr.setflags(write=False)
        return block

    @property
    def n(self) -> int:
        return int(self.soft.size)

    def sorted_reliability(self) -> np.ndarray:
        """Reliabilities in rank order (non-decreasing)."""
        return self.reliability[self.perm]


def received_from_llr(llr: Reals) -> ReceivedBlock:
    """Wrap an external LLR vector; positive LLR means bit 1. Infinite LLRs are kept."""
    values = np.asarray(llr, dtype=float).reshape(-1)
    missing = np.flatnonzero(np.isnan(values))
    if missing.size:
        raise ChannelError(f"LLR vector has NaN at position(s) {missing[:5].tolist()}")
    return ReceivedBlock.from_soft(values)


def transmit(
    codeword,
    cfg: ChannelConfig,
    rng: Optional[np.random.Generator] = None,
) -> ReceivedBlock:
    """
    Modulate and add white Gaussian noise of standard deviation σ.

    Args:
        codeword: n bits
        cfg: Channel configuration; its seed is used when no rng is given
        rng: Caller-owned generator (campaign trials pass their own stream)

    Returns:
        ReceivedBlock
    """
    if rng is None:
        rng = np.random.default_rng(cfg.seed)
    symbols = bpsk_modulate(codeword)
    noise = cfg.sigma * rng.standard_normal(symbols.size)
    return ReceivedBlock.from_soft(symbols + noise)
