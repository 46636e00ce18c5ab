# app/oracle/ml.py
"""
Reference decoders and enumerators used to check the ORBGRAND machinery.

``exact_ml_stream`` orders every pattern by its true reliability sum with a
priority queue; ``exhaustive_ml_decode`` scans the whole code-book. Both
are far slower than the ORBGRAND streams and meant for small codes and
paired comparisons.
"""

import heapq
from dataclasses import dataclass
from itertools import combinations_with_replacement, islice
from typing import Iterator, Optional, Set, Tuple

import numpy as np

from app.channel.awgn import ReceivedBlock
from app.codes.gf2 import BinaryLinearCode, all_codewords
from app.decoder.query import DecodeOutcome, query_codebook
from app.patterns.landslide import NoisePattern, Partition

MAX_BRUTE_FORCE_CELLS = 80


@dataclass(frozen=True)
class WeightedPattern:
    pattern: NoisePattern
    weight: float  # sum of sorted reliabilities over the flipped ranks


def brute_force_partitions(total: int, parts: int, cap: int) -> Set[Partition]:
    """All non-decreasing ``parts``-tuples from 0..cap summing to ``total``."""
    if parts * cap > MAX_BRUTE_FORCE_CELLS:
        raise ValueError(f"instance too large for brute force ({parts}×{cap} > {MAX_BRUTE_FORCE_CELLS})")
    if total < 0 or parts < 0 or cap < 0:
        return set()
    return {u for u in combinations_with_replacement(range(cap + 1), parts) if sum(u) == total}


def exact_ml_stream(reliability, limit: Optional[int] = None) -> Iterator[WeightedPattern]:
    """
    Every pattern in non-decreasing true reliability sum, each exactly once.

    Ranks come from a stable sort of ``reliability``. Popping a pattern whose
    largest rank is j pushes two successors: j replaced by j+1, and j+1
    appended.
    """
    values = np.sort(np.asarray(reliability, dtype=float), kind="stable").tolist()
    stream = _ml_patterns(values)
    return stream if limit is None else islice(stream, limit)


def _ml_patterns(values) -> Iterator[WeightedPattern]:
    n = len(values)
    # (weight, pattern, weight of pattern[:-1])
    heap: list[Tuple[float, NoisePattern, float]] = [(0.0, (), 0.0)]
    while heap:
        weight, pattern, prefix = heapq.heappop(heap)
        yield WeightedPattern(pattern, weight)
        last = pattern[-1] if pattern else 0
        if last == n:
            continue
        heapq.heappush(heap, (weight + values[last], pattern + (last + 1,), weight))
        if pattern:
            heapq.heappush(heap, (prefix + values[last], pattern[:-1] + (last + 1,), prefix))


def exact_ml_decode(code: BinaryLinearCode, block: ReceivedBlock, budget: int) -> DecodeOutcome:
    """First code-book hit along the exact reliability-sum order."""
    patterns = (item.pattern for item in exact_ml_stream(block.reliability))
    return query_codebook(code, block, patterns, budget)


def noise_weight(block: ReceivedBlock, word) -> float:
    """Sum of reliabilities where ``word`` disagrees with the hard decision."""
    return float(block.reliability[np.asarray(word, dtype=np.uint8) != block.hard].sum())


def exhaustive_ml_decode(code: BinaryLinearCode, block: ReceivedBlock) -> Tuple[np.ndarray, float]:
    """Codeword of smallest disagreement weight over the whole code-book (k ≤ 16)."""
    codewords = all_codewords(code)
    costs = (codewords != block.hard).astype(float) @ block.reliability
    best = int(np.argmin(costs))
    return codewords[best], float(costs[best])
