# app/patterns/landslide.py
"""
Partition enumeration for logistic-weight ordered noise patterns.

A noise pattern is the strictly increasing tuple of rank-domain indices
(1-based, least reliable first) to flip. Its logistic weight is the sum of
those indices. Patterns of Hamming weight w and logistic weight W are in
one-to-one correspondence with partitions of W − w(w+1)/2 into w
non-decreasing parts bounded by n − w, which is what Landslide walks.
"""

from math import isqrt
from typing import Iterator, List, Tuple

NoisePattern = Tuple[int, ...]
Partition = Tuple[int, ...]


def logistic_weight(pattern: NoisePattern) -> int:
    return sum(pattern)


def max_hamming_weight(weight: int) -> int:
    """Largest w whose lightest pattern (1, …, w) has logistic weight ≤ weight."""
    return (isqrt(1 + 8 * weight) - 1) // 2


def shift_to_distinct(partition: Partition) -> NoisePattern:
    return tuple(u + i for i, u in enumerate(partition, start=1))


def validate_pattern(pattern: NoisePattern, n: int) -> NoisePattern:
    if any(not 1 <= v <= n for v in pattern):
        raise ValueError(f"pattern {pattern} has indices outside 1..{n}")
    if any(a >= b for a, b in zip(pattern, pattern[1:])):
        raise ValueError(f"pattern {pattern} is not strictly increasing")
    return pattern


class Landslide:
    """
    Iterates every partition of ``total`` into ``parts`` non-decreasing
    parts no larger than ``cap``, each exactly once.

    The walk starts from the mountain built on an empty base, then while the
    drop between the last and first part is at least 2 it raises the last
    part that sits at least 2 below the peak and rebuilds everything to its
    right. Infeasible inputs give an empty iteration with ``feasible`` False.

    Usage:
        for u in Landslide(8, 4, 4):
            ...
    """

    def __init__(self, total: int, parts: int, cap: int):
        self.total = total
        self.parts = parts
        self.cap = cap
        self.feasible = total >= 0 and parts >= 0 and cap >= 0 and total <= parts * cap
        self.builds = 0  # Build-mountain invocations so far

    def __iter__(self) -> Iterator[Partition]:
        if not self.feasible:
            return
        w = self.parts
        if w == 0:
            yield ()
            return

        # u[0] is a dummy base part fixed at 0; the partition is u[1:]
        u = [0] * (w + 1)
        self._build_mountain(u, 0)
        yield tuple(u[1:])

        while u[w] - u[1] >= 2:
            k = w - 1
            while u[w] - u[k] < 2:
                k -= 1
            u[k] += 1
            self._build_mountain(u, k)
            yield tuple(u[1:])

    def _build_mountain(self, u: List[int], k: int) -> None:
        """Flatten parts right of k to u[k], then push the unallocated cells to the right."""
        self.builds += 1
        w = self.parts
        for i in range(k + 1, w + 1):
            u[i] = u[k]
        unallocated = self.total - sum(u[1:])
        room = self.cap - u[k]
        if room == 0:
            return
        q, r = divmod(unallocated, room)
        for i in range(w - q + 1, w + 1):
            u[i] = self.cap
        u[w - q] += r


def landslide(total: int, parts: int, cap: int) -> Landslide:
    return Landslide(total, parts, cap)
