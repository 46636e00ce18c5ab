# app/reliability/fitting.py
"""
Per-block fitting of the m-segment reliability model.

The sorted reliability curve L_1 ≤ … ≤ L_n is approximated by chords
between anchor points chosen in the least reliable half (where the curve
bends), the last chord being extended to the top rank. Slopes and offsets
are then quantized in units of the smallest chord slope.
"""

import bisect
import math
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from app.logg import logger
from app.reliability.model import SegmentModel

GAP_TOLERANCE = 1e-12


def round_half_up(x: float) -> int:
    return int(math.floor(x + 0.5))


def round_half_away(x: float) -> int:
    return int(math.copysign(math.floor(abs(x) + 0.5), x))


@dataclass(frozen=True)
class AnchorFit:
    anchors: Tuple[int, ...]  # segment boundaries, 0 < … < n
    center: int               # rank the last chord is drawn to before extension
    degenerate: bool = False  # fewer segments than requested

    @property
    def m(self) -> int:
        return len(self.anchors) - 1


def _curve(sorted_reliability) -> np.ndarray:
    L = np.asarray(sorted_reliability, dtype=float).reshape(-1)
    if L.size == 0:
        raise ValueError("empty reliability vector")
    if np.isposinf(L).any():
        # saturate infinite reliabilities at the largest finite one
        finite = L[np.isfinite(L)]
        L = np.minimum(L, finite.max() if finite.size else 1.0)
    if np.any(np.diff(L) < 0):
        raise ValueError("reliabilities must be sorted non-decreasing")
    return L


def fit_anchors(sorted_reliability, m: int) -> AnchorFit:
    """
    Choose segment boundaries by repeated maximum-gap refinement.

    Chord end points start as {1, ⌊n/2⌋}. Each refinement inserts the rank
    below ⌊n/2⌋ where the curve is farthest (vertically) from the chord of
    its interval. Stops early, flagging ``degenerate``, when no gap is left.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    L = _curve(sorted_reliability)
    n = L.size
    if n < 2:
        return AnchorFit((0, n), center=n, degenerate=m > 1)

    center = max(n // 2, 2)
    points = [1, center]
    tolerance = GAP_TOLERANCE * max(1.0, float(np.max(np.abs(L))))
    while len(points) - 1 < m:
        best_gap, best_rank = 0.0, None
        for a, b in zip(points, points[1:]):
            if b - a < 2:
                continue
            ranks = np.arange(a + 1, b)
            chord = L[a - 1] + (L[b - 1] - L[a - 1]) * (ranks - a) / (b - a)
            gaps = np.abs(L[ranks - 1] - chord)
            idx = int(np.argmax(gaps))
            if gaps[idx] > best_gap:
                best_gap, best_rank = float(gaps[idx]), int(ranks[idx])
        if best_rank is None or best_gap <= tolerance:
            break
        bisect.insort(points, best_rank)

    anchors = (0, *points[1:-1], n)
    fit = AnchorFit(anchors, center=center, degenerate=len(anchors) - 1 < m)
    if fit.degenerate:
        logger.debug(f"Anchor fit collapsed to {fit.m} of {m} segments")
    return fit


def quantize(sorted_reliability, fit: AnchorFit) -> SegmentModel:
    """
    Integer model in units of Q, the smallest rising chord slope.

    β_i = max(1, round(slope_i / Q)); J_0 = round(L_1 / Q) − β_1 and
    J_i = round(L_{I_i} / Q). Offsets are then raised where needed so
    rank 1 weighs at least 1 and the model never decreases at a boundary.
    Flat chords get slope 1. Falls back to the basic model when no chord
    rises.
    """
    L = _curve(sorted_reliability)
    n = L.size
    if fit.anchors[-1] != n:
        raise ValueError(f"anchors end at {fit.anchors[-1]}, curve has {n} ranks")
    if n < 2 or fit.center < 2:
        return SegmentModel.basic(n)

    inner = list(fit.anchors[1:-1])
    starts = [1] + inner
    ends = inner + [fit.center]
    slopes = [(L[e - 1] - L[s - 1]) / (e - s) for s, e in zip(starts, ends)]

    rising = [s for s in slopes if math.isfinite(s) and s > 0]
    if not rising:
        logger.debug("Flat reliability curve, using the basic model")
        return SegmentModel.basic(n)
    q = min(rising)
    for i, slope in enumerate(slopes):
        if slope <= 0:
            logger.debug(f"Segment {i + 1} is flat, giving it slope 1")

    betas = [max(1, round_half_up(s / q)) for s in slopes]
    offsets = [round_half_away(L[0] / q) - betas[0]]
    offsets += [round_half_up(L[i - 1] / q) for i in inner]

    if offsets[0] + betas[0] < 1:
        offsets[0] = 1 - betas[0]
    anchors = fit.anchors
    for i in range(1, len(offsets)):
        previous_end = offsets[i - 1] + betas[i - 1] * (anchors[i] - anchors[i - 1])
        if offsets[i] + betas[i] < previous_end:
            logger.debug(f"Raising J_{i} from {offsets[i]} to {previous_end - betas[i]} for monotonicity")
            offsets[i] = previous_end - betas[i]

    return SegmentModel(anchors=anchors, offsets=tuple(offsets), slopes=tuple(betas), q_step=q)


def enforce_divisibility(model: SegmentModel) -> SegmentModel:
    """
    Round every J_{i−1} to the nearest multiple of β_i.

    A rounded offset that would break positivity or monotonicity is moved
    up by whole multiples of β_i instead.
    """
    offsets = list(model.offsets)
    for i, beta in enumerate(model.slopes):
        rounded = round_half_away(offsets[i] / beta) * beta
        if i == 0:
            floor = 1
        else:
            floor = offsets[i - 1] + model.slopes[i - 1] * (model.anchors[i] - model.anchors[i - 1])
        while rounded + beta < floor:
            rounded += beta
        if rounded != offsets[i]:
            logger.debug(f"J_{i}: {offsets[i]} -> {rounded} (multiple of {beta})")
        offsets[i] = rounded
    return SegmentModel(model.anchors, tuple(offsets), model.slopes, model.q_step)


def fit_block_model(sorted_reliability, m: int, divisibility: bool = False) -> SegmentModel:
    """Anchors, quantization and (optionally) divisibility in one call."""
    model = quantize(sorted_reliability, fit_anchors(sorted_reliability, m))
    return enforce_divisibility(model) if divisibility else model


def fit_deviation(model: SegmentModel, sorted_reliability, upto: Optional[int] = None) -> float:
    """
    Largest |Q·relest_j − L_j| over ranks 1..upto, relative to L_upto.

    ``upto`` defaults to ⌊n/2⌋, the region the model is fitted on.
    """
    L = _curve(sorted_reliability)
    upto = upto or max(1, L.size // 2)
    approx = model.q_step * model.relest()[:upto]
    scale = L[upto - 1] if L[upto - 1] > 0 else 1.0
    return float(np.max(np.abs(approx - L[:upto])) / scale)
