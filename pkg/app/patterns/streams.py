# app/patterns/streams.py
"""
Pull-based noise-pattern streams in the order each GRAND variant queries them.

All streams yield rank-domain NoisePatterns starting with the empty one and
stop after ``limit`` patterns when a limit is given.
"""

import heapq
from itertools import islice
from typing import Iterable, Iterator, Optional, Sequence, Tuple

from app.patterns.landslide import NoisePattern, landslide, logistic_weight, max_hamming_weight, shift_to_distinct
from app.patterns.splitting import SplitPattern, SplitValidator, integer_splitting
from app.reliability.model import SegmentModel


def _limited(patterns: Iterator[NoisePattern], limit: Optional[int]) -> Iterator[NoisePattern]:
    return patterns if limit is None else islice(patterns, limit)


# --------------------------
# Hard GRAND
# --------------------------
def hard_order(n: int, limit: Optional[int] = None) -> Iterator[NoisePattern]:
    """Increasing Hamming weight, then increasing logistic weight."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return _limited(_hard_patterns(n), limit)


def _hard_patterns(n: int) -> Iterator[NoisePattern]:
    for w in range(n + 1):
        yield from hamming_shard(n, w)


# --------------------------
# Basic ORBGRAND
# --------------------------
def basic_order(n: int, limit: Optional[int] = None) -> Iterator[NoisePattern]:
    """Increasing logistic weight; ties by Hamming weight then Landslide order."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return _limited(_basic_patterns(n), limit)


def _basic_patterns(n: int) -> Iterator[NoisePattern]:
    yield ()
    for weight in range(1, n * (n + 1) // 2 + 1):
        for w in range(1, min(max_hamming_weight(weight), n) + 1):
            for u in landslide(weight - w * (w + 1) // 2, w, n - w):
                yield shift_to_distinct(u)


def hamming_shard(n: int, w: int) -> Iterator[NoisePattern]:
    """All patterns of Hamming weight w in increasing logistic weight."""
    if w == 0:
        yield ()
        return
    for excess in range(w * (n - w) + 1):
        for u in landslide(excess, w, n - w):
            yield shift_to_distinct(u)


def merge_shards(shards: Iterable[Iterable[NoisePattern]]) -> Iterator[NoisePattern]:
    """Merge per-Hamming-weight shards back into the basic ORBGRAND order."""
    return heapq.merge(*shards, key=lambda p: (logistic_weight(p), len(p)))


def basic_order_sharded(n: int, limit: Optional[int] = None) -> Iterator[NoisePattern]:
    if n < 1:
        raise ValueError("n must be >= 1")
    return _limited(merge_shards(hamming_shard(n, w) for w in range(n + 1)), limit)


# --------------------------
# Full ORBGRAND
# --------------------------
def reliability_weight(pattern: NoisePattern, model: SegmentModel) -> int:
    return sum(model.evaluate(j) for j in pattern)


def full_order(
    n: int,
    model: SegmentModel,
    limit: Optional[int] = None,
    *,
    jump: bool = True,
) -> Iterator[NoisePattern]:
    """
    Increasing reliability weight under ``model``.

    Within one weight: splits in lexicographic order, then the Cartesian
    product of the per-segment partial patterns, each segment ordered by
    flip count and then Landslide order.
    """
    if model.n != n:
        raise ValueError(f"model covers {model.n} ranks, block has {n}")
    if not model.is_positive():
        raise ValueError("model must give every rank a weight >= 1")
    return _limited(_full_patterns(model, jump), limit)


def _full_patterns(model: SegmentModel, jump: bool) -> Iterator[NoisePattern]:
    validator = SplitValidator(model)
    for weight in range(validator.suffix_max[0] + 1):
        for split in integer_splitting(weight, model, jump=jump, validator=validator):
            yield from _split_patterns(model, split)


def _split_patterns(model: SegmentModel, split: SplitPattern) -> Iterator[NoisePattern]:
    active = [i for i, part in enumerate(split.parts) if part]
    choices: Sequence[Tuple[int, int, Tuple[int, ...]]] = [
        (i, split.parts[i], split.hamming_weights[i]) for i in active
    ]

    def expand(depth: int, prefix: NoisePattern) -> Iterator[NoisePattern]:
        if depth == len(choices):
            yield prefix
            return
        i, part, weights = choices[depth]
        for partial in _segment_partials(model, i, part, weights):
            yield from expand(depth + 1, prefix + partial)

    return expand(0, ())


def _segment_partials(
    model: SegmentModel, i: int, part: int, weights: Tuple[int, ...]
) -> Iterator[NoisePattern]:
    seg = model.segment(i)
    for w in weights:
        s = (part - w * seg.offset) // seg.slope
        for u in landslide(s - w * (w + 1) // 2, w, seg.length - w):
            yield tuple(seg.start + v for v in shift_to_distinct(u))
