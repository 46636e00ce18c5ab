# app/decoder/grand.py
"""
GRAND decoding: query putative noise effects in order until one leads to a
codeword, or give up after ``max_queries`` tests.
"""

import dataclasses

import numpy as np

from app.channel.awgn import ReceivedBlock, transmit
from app.codes.gf2 import BinaryLinearCode
from app.decoder.builder import StreamBuilder
from app.decoder.query import DecodeOutcome, query_codebook
from app.decoder.state import TrialRecord
from app.exceptions import DimensionMismatchError
from app.schemas import ChannelConfig, DecoderConfig


def grand_decode(code: BinaryLinearCode, block: ReceivedBlock, cfg: DecoderConfig) -> DecodeOutcome:
    """
    Decode one block with the configured variant.

    Abandonment is reported through ``DecodeOutcome.abandoned``; the hard
    decision is never returned as a guess.
    """
    if block.n != code.n:
        raise DimensionMismatchError(f"block has {block.n} bits, code length is {code.n}")

    built = StreamBuilder(cfg).build(block)
    outcome = query_codebook(code, block, built.patterns, cfg.max_queries)
    return dataclasses.replace(outcome, model=built.model, fit_seconds=built.fit_seconds)


def decode_campaign_trial(
    code: BinaryLinearCode,
    channel: ChannelConfig,
    decoder: DecoderConfig,
    rng: np.random.Generator,
) -> TrialRecord:
    """One Monte-Carlo trial: random message, AWGN, decode, compare."""
    message = rng.integers(0, 2, size=code.k, dtype=np.uint8)
    codeword = code.encode(message)
    block = transmit(codeword, channel, rng)
    outcome = grand_decode(code, block, decoder)
    block_error = outcome.abandoned or not np.array_equal(outcome.word, codeword)
    return TrialRecord(
        block_error=bool(block_error),
        queries=outcome.queries,
        abandoned=outcome.abandoned,
        fit_seconds=outcome.fit_seconds,
    )
