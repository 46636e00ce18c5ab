# app/decoder/query.py
from dataclasses import dataclass
from itertools import islice
from typing import Iterable, Optional

import numpy as np

from app.channel.awgn import ReceivedBlock
from app.codes.gf2 import BinaryLinearCode
from app.patterns.landslide import NoisePattern
from app.reliability.model import SegmentModel


@dataclass(frozen=True, eq=False)
class DecodeOutcome:
    """
    Result of one GRAND search.

    ``queries`` is D, the number of code-book tests including the first
    (empty pattern) one. On abandonment ``word`` and ``pattern`` are None.
    """

    word: Optional[np.ndarray]
    queries: int
    abandoned: bool
    pattern: Optional[NoisePattern] = None  # rank-domain noise effect that hit
    model: Optional[SegmentModel] = None
    fit_seconds: float = 0.0


def query_codebook(
    code: BinaryLinearCode,
    block: ReceivedBlock,
    patterns: Iterable[NoisePattern],
    max_queries: int,
) -> DecodeOutcome:
    """
    Test patterns in order until one turns the hard decision into a codeword.

    The syndrome of the hard decision is computed once; each query XORs in
    the H columns of the flipped ranks.
    """
    base = code.syndrome(block.hard)
    rank_columns = [code.columns[p] for p in block.perm.tolist()]

    queries = 0
    for pattern in islice(patterns, max_queries):
        queries += 1
        s = base
        for r in pattern:
            s ^= rank_columns[r - 1]
        if s == 0:
            word = block.hard.copy()
            if pattern:
                word[block.perm[np.asarray(pattern) - 1]] ^= 1
            return DecodeOutcome(word=word, queries=queries, abandoned=False, pattern=pattern)

    return DecodeOutcome(word=None, queries=queries, abandoned=True)
