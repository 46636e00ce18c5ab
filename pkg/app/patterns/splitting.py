# app/patterns/splitting.py
"""
Splitting a reliability weight W across the segments of a SegmentModel.

A split W^m assigns W_i to segment i; it is kept only if every non-zero
W_i can be realised by some number w of flips inside segment i. Segment i
contributes w·J + β·S where S is the logistic weight of the flips relative
to the segment start, so W_i − w·J must be a multiple of β and S must lie
between the lightest and heaviest w-subsets of the segment.
"""

from dataclasses import dataclass
from math import comb
from typing import Dict, Iterator, Optional, Tuple

from app.patterns.landslide import max_hamming_weight
from app.reliability.model import SegmentModel


@dataclass(frozen=True)
class SplitPattern:
    parts: Tuple[int, ...]
    hamming_weights: Tuple[Tuple[int, ...], ...]  # valid flip counts per segment, () where the part is 0

    @property
    def total(self) -> int:
        return sum(self.parts)


def valid_partial_hamming_weights(
    weight: int, offset: int, slope: int, length: int
) -> Optional[Tuple[int, ...]]:
    """
    Flip counts w able to produce ``weight`` inside one segment, or None (FAIL).

    Args:
        weight: Partial weight W_i ≥ 1
        offset: Segment offset J
        slope: Segment slope β ≥ 1
        length: Number of ranks in the segment
    """
    if weight < 1:
        raise ValueError("partial weight must be >= 1")
    found = []
    for w in range(1, max_hamming_weight(weight) + 1):
        excess = weight - w * offset
        if excess % slope:
            continue
        s = excess // slope
        lightest = w * (w + 1) // 2
        if lightest <= s <= (length + 1) * w - lightest:
            found.append(w)
    return tuple(found) or None


class SplitValidator:
    """Caches partial-Hamming-weight sets per (segment, W_i) for one model."""

    def __init__(self, model: SegmentModel):
        self.model = model
        self.segments = list(model.segments())
        self.max_parts = [
            seg.length * seg.offset + seg.slope * seg.length * (seg.length + 1) // 2
            for seg in self.segments
        ]
        # suffix_max[i]: heaviest weight segments i.. can absorb together
        self.suffix_max = [0] * (len(self.segments) + 1)
        for i in range(len(self.segments) - 1, -1, -1):
            self.suffix_max[i] = self.suffix_max[i + 1] + self.max_parts[i]
        self._cache: Dict[Tuple[int, int], Optional[Tuple[int, ...]]] = {}

    def check(self, i: int, weight: int) -> Optional[Tuple[int, ...]]:
        if weight == 0:
            return ()
        key = (i, weight)
        if key not in self._cache:
            seg = self.segments[i]
            self._cache[key] = valid_partial_hamming_weights(weight, seg.offset, seg.slope, seg.length)
        return self._cache[key]

    def candidates(self, i: int, low: int, high: int, jump: bool) -> Iterator[int]:
        """Values of W_i worth testing, ascending."""
        seg = self.segments[i]
        if low == 0:
            yield 0
        start = max(low, 1)
        if jump:
            # every flip in the segment weighs at least J + β
            start = max(start, seg.offset + seg.slope)
        step = 1
        if seg.offset % seg.slope == 0:
            step = seg.slope
            start += -start % step
        yield from range(start, high + 1, step)


def integer_splitting(
    weight: int,
    model: SegmentModel,
    *,
    jump: bool = True,
    validator: Optional[SplitValidator] = None,
) -> Iterator[SplitPattern]:
    """
    Valid splits of ``weight`` in ascending lexicographic order.

    W_1 is swept from 0 upward, then W_2 for each surviving W_1, and so on;
    the last segment takes the remainder. A part failing validation prunes
    its whole subtree. ``jump`` skips W_i values below the lightest
    non-empty segment weight.
    """
    if weight < 0:
        return
    validator = validator or SplitValidator(model)
    m = model.m

    def sweep(i: int, remaining: int, parts: tuple, weights: tuple) -> Iterator[SplitPattern]:
        if i == m - 1:
            if remaining > validator.max_parts[i]:
                return
            found = validator.check(i, remaining)
            if found is not None:
                yield SplitPattern(parts + (remaining,), weights + (found,))
            return
        low = max(0, remaining - validator.suffix_max[i + 1])
        high = min(remaining, validator.max_parts[i])
        for part in validator.candidates(i, low, high, jump):
            found = validator.check(i, part)
            if found is None:
                continue
            yield from sweep(i + 1, remaining - part, parts + (part,), weights + (found,))

    yield from sweep(0, weight, (), ())


def compositions(weight: int, parts: int) -> Iterator[Tuple[int, ...]]:
    """Every ordered way to write ``weight`` as ``parts`` non-negative integers."""
    if parts == 0:
        if weight == 0:
            yield ()
        return
    if parts == 1:
        yield (weight,)
        return
    for first in range(weight + 1):
        for rest in compositions(weight - first, parts - 1):
            yield (first,) + rest


def composition_count(weight: int, parts: int) -> int:
    return comb(weight + parts - 1, parts - 1)
