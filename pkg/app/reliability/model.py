# app/reliability/model.py
from dataclasses import dataclass
from typing import Iterator, NamedTuple, Tuple

import numpy as np


class Segment(NamedTuple):
    start: int   # I_{i-1}: ranks start+1 .. start+length belong to the segment
    length: int
    offset: int  # J_{i-1}
    slope: int   # β_i


@dataclass(frozen=True)
class SegmentModel:
    """
    Quantized piece-wise linear model of the rank-ordered reliability curve.

    For rank j in segment i (anchors[i-1] < j ≤ anchors[i]) the integer
    reliability estimate is offsets[i-1] + slopes[i-1]·(j − anchors[i-1]).
    ``q_step`` is the real value of one integer unit.
    """

    anchors: Tuple[int, ...]
    offsets: Tuple[int, ...]
    slopes: Tuple[int, ...]
    q_step: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, "anchors", tuple(int(a) for a in self.anchors))
        object.__setattr__(self, "offsets", tuple(int(j) for j in self.offsets))
        object.__setattr__(self, "slopes", tuple(int(b) for b in self.slopes))

        m = len(self.anchors) - 1
        if m < 1 or self.anchors[0] != 0:
            raise ValueError(f"anchors must start at 0 and hold at least two entries: {self.anchors}")
        if any(a >= b for a, b in zip(self.anchors, self.anchors[1:])):
            raise ValueError(f"anchors must be strictly increasing: {self.anchors}")
        if len(self.offsets) != m or len(self.slopes) != m:
            raise ValueError(f"expected {m} offsets and slopes")
        if any(b < 1 for b in self.slopes):
            raise ValueError(f"slopes must be >= 1: {self.slopes}")
        if not self.q_step > 0:
            raise ValueError("q_step must be positive")

    @classmethod
    def basic(cls, n: int) -> "SegmentModel":
        """One line through the origin: relest_j = j."""
        return cls(anchors=(0, n), offsets=(0,), slopes=(1,))

    @property
    def m(self) -> int:
        return len(self.slopes)

    @property
    def n(self) -> int:
        return self.anchors[-1]

    def segment(self, i: int) -> Segment:
        """Segment i, 0-based."""
        start = self.anchors[i]
        return Segment(start, self.anchors[i + 1] - start, self.offsets[i], self.slopes[i])

    def segments(self) -> Iterator[Segment]:
        return (self.segment(i) for i in range(self.m))

    def evaluate(self, j: int) -> int:
        if not 1 <= j <= self.n:
            raise ValueError(f"rank {j} outside 1..{self.n}")
        for seg in self.segments():
            if j <= seg.start + seg.length:
                return seg.offset + seg.slope * (j - seg.start)
        raise AssertionError("unreachable")

    def relest(self) -> np.ndarray:
        """Integer estimates for ranks 1..n."""
        return np.concatenate([
            seg.offset + seg.slope * np.arange(1, seg.length + 1, dtype=np.int64)
            for seg in self.segments()
        ])

    def max_weight(self) -> int:
        return int(self.relest().sum())

    def is_monotone(self) -> bool:
        return bool(np.all(np.diff(self.relest()) >= 0))

    def is_positive(self) -> bool:
        return int(self.relest().min()) >= 1


def evaluate_model(model: SegmentModel, j: int) -> int:
    return model.evaluate(j)
