# app/codes/gf2.py
"""
Binary linear block codes over GF(2).

A code carries its generator G and parity-check matrix H as uint8 arrays
and, for the query loop, every column of H packed into a Python int so a
syndrome is just the XOR of the columns at the set positions.
"""

from dataclasses import dataclass, field
from functools import reduce
from itertools import product
from operator import xor
from typing import Optional, Sequence, Tuple, Union

import galois
import numpy as np

from app.exceptions import CodeConstructionError, DimensionMismatchError

GF2 = galois.GF(2)

Bits = Union[np.ndarray, Sequence[int]]


def as_bits(word: Bits, length: Optional[int] = None, what: str = "word") -> np.ndarray:
    """Coerce to a uint8 0/1 vector, optionally checking its length."""
    bits = np.asarray(word, dtype=np.uint8).reshape(-1)
    if length is not None and bits.size != length:
        raise DimensionMismatchError(f"{what} has length {bits.size}, expected {length}")
    return bits & 1


def gf2_rank(matrix: np.ndarray) -> int:
    return int(np.linalg.matrix_rank(GF2(np.asarray(matrix, dtype=np.uint8))))


@dataclass(frozen=True)
class Syndrome:
    """H·wᵀ as an (n−k)-bit vector."""

    bits: np.ndarray

    @property
    def is_zero(self) -> bool:
        return not self.bits.any()


@dataclass(frozen=True, eq=False)
class BinaryLinearCode:
    """
    An [n, k] binary linear code.

    Validated at construction: G·Hᵀ = 0, rank(G) = k, rank(H) = n − k and
    no all-zero column in H.
    """

    n: int
    k: int
    generator: np.ndarray
    parity: np.ndarray
    label: str = ""
    divisor: Optional[Tuple[int, ...]] = None  # generator polynomial of cyclic / CRC codes
    columns: Tuple[int, ...] = field(init=False, repr=False, default=())

    def __post_init__(self):
        if not 0 < self.k < self.n:
            raise CodeConstructionError(f"Need 0 < k < n, got n={self.n}, k={self.k}")

        G = np.asarray(self.generator, dtype=np.uint8) & 1
        H = np.asarray(self.parity, dtype=np.uint8) & 1
        if G.shape != (self.k, self.n):
            raise CodeConstructionError(f"G has shape {G.shape}, expected {(self.k, self.n)}")
        if H.shape != (self.n - self.k, self.n):
            raise CodeConstructionError(f"H has shape {H.shape}, expected {(self.n - self.k, self.n)}")
        if ((G.astype(np.int64) @ H.T.astype(np.int64)) % 2).any():
            raise CodeConstructionError("G·Hᵀ is not zero over GF(2)")
        if gf2_rank(G) != self.k:
            raise CodeConstructionError(f"rank(G) != {self.k}")
        if gf2_rank(H) != self.n - self.k:
            raise CodeConstructionError(f"rank(H) != {self.n - self.k}")
        if not H.any(axis=0).all():
            zero = int(np.flatnonzero(~H.any(axis=0))[0])
            raise CodeConstructionError(f"H has an all-zero column at position {zero}")

        G.setflags(write=False)
        H.setflags(write=False)
        object.__setattr__(self, "generator", G)
        object.__setattr__(self, "parity", H)
        object.__setattr__(self, "columns", _pack_columns(H))
        if not self.label:
            object.__setattr__(self, "label", f"[{self.n},{self.k}]")

    @property
    def rate(self) -> float:
        return self.k / self.n

    def encode(self, message: Bits) -> np.ndarray:
        m = as_bits(message, self.k, "message")
        return ((m.astype(np.int64) @ self.generator.astype(np.int64)) % 2).astype(np.uint8)

    def syndrome(self, word: Bits) -> int:
        """Packed syndrome: bit r is row r of H·wordᵀ."""
        w = as_bits(word, self.n)
        return reduce(xor, (self.columns[j] for j in np.flatnonzero(w)), 0)

    def syndrome_bits(self, word: Bits) -> Syndrome:
        w = as_bits(word, self.n)
        return Syndrome(((self.parity.astype(np.int64) @ w.astype(np.int64)) % 2).astype(np.uint8))

    def is_codeword(self, word: Bits) -> bool:
        return self.syndrome(word) == 0


def _pack_columns(H: np.ndarray) -> Tuple[int, ...]:
    weights = [1 << r for r in range(H.shape[0])]
    return tuple(int(sum(w for w, bit in zip(weights, col) if bit)) for col in H.T.tolist())


def systematic_code(parity_part: np.ndarray, label: str = "", divisor=None) -> BinaryLinearCode:
    """Build G = [I_k | P], H = [Pᵀ | I_{n−k}] from a k×(n−k) block P."""
    P = np.asarray(parity_part, dtype=np.uint8) & 1
    k, r = P.shape
    G = np.hstack([np.eye(k, dtype=np.uint8), P])
    H = np.hstack([P.T, np.eye(r, dtype=np.uint8)])
    return BinaryLinearCode(n=k + r, k=k, generator=G, parity=H, label=label, divisor=divisor)


def random_linear_code(n: int, k: int, seed: int = 0) -> BinaryLinearCode:
    """
    Systematic random linear code G = [I | P].

    Each row of P is uniform over the non-zero (n−k)-bit rows, so P is not
    uniform over all k×(n−k) matrices: an all-zero row would give H a zero
    column (an undetectable single flip) and is redrawn.
    """
    if not 0 < k < n:
        raise CodeConstructionError(f"Need 0 < k < n, got n={n}, k={k}")

    rng = np.random.default_rng(seed)
    P = rng.integers(0, 2, size=(k, n - k), dtype=np.uint8)
    for i in range(k):
        while not P[i].any():
            P[i] = rng.integers(0, 2, size=n - k, dtype=np.uint8)
    return systematic_code(P, label=f"RLC[{n},{k}]")


# --------------------------
# CRC codes
# --------------------------
def divisor_bits(divisor: Union[int, str, Bits]) -> Tuple[int, ...]:
    """Normalise a divisor given as int, hex string or bit sequence (highest degree first)."""
    if isinstance(divisor, str):
        try:
            divisor = int(divisor, 16)
        except ValueError as e:
            raise CodeConstructionError(f"Bad hex divisor {divisor!r}") from e
    if isinstance(divisor, (int, np.integer)):
        if divisor <= 0:
            raise CodeConstructionError("CRC divisor must be non-zero")
        return tuple(int(b) for b in format(int(divisor), "b"))
    bits = tuple(int(b) & 1 for b in np.asarray(divisor).reshape(-1))
    while bits and bits[0] == 0:
        bits = bits[1:]
    if not bits:
        raise CodeConstructionError("CRC divisor must be non-zero")
    return bits


def divisor_hex(divisor: Tuple[int, ...]) -> str:
    return hex(int("".join(map(str, divisor)), 2))


def _poly_bits(poly: galois.Poly, width: int) -> np.ndarray:
    bits = np.zeros(width, dtype=np.uint8)
    coeffs = np.asarray(poly.coeffs, dtype=np.uint8)
    if poly.degree >= 0 and coeffs.any():
        bits[width - coeffs.size:] = coeffs
    return bits


def crc_remainder(word: Bits, divisor: Union[int, str, Bits]) -> np.ndarray:
    """Remainder of word(x) modulo the divisor, as deg(divisor) bits."""
    g = galois.Poly(divisor_bits(divisor), field=GF2)
    w = galois.Poly(as_bits(word).tolist(), field=GF2)
    return _poly_bits(w % g, g.degree)


def crc_code(n: int, k: int, divisor: Union[int, str, Bits], label: str = "") -> BinaryLinearCode:
    """
    Systematic CRC code: codeword = m(x)·x^(n−k) + rem(m(x)·x^(n−k), g).

    Bits are listed highest degree first, so the message occupies the
    first k positions.
    """
    bits = divisor_bits(divisor)
    degree = len(bits) - 1
    if not 0 < k < n:
        raise CodeConstructionError(f"Need 0 < k < n, got n={n}, k={k}")
    if degree != n - k:
        raise CodeConstructionError(f"Divisor degree {degree} != n - k = {n - k}")
    if bits[-1] != 1:
        raise CodeConstructionError("Divisor must have a non-zero constant term")

    g = galois.Poly(bits, field=GF2)
    P = np.vstack([
        _poly_bits(galois.Poly.Degrees([n - 1 - i], field=GF2) % g, n - k)
        for i in range(k)
    ])
    return systematic_code(P, label=label or f"CRC[{n},{k}]", divisor=bits)


# --------------------------
# Small-code helpers
# --------------------------
def all_codewords(code: BinaryLinearCode) -> np.ndarray:
    """Every codeword as a 2^k × n array (k ≤ 16)."""
    if code.k > 16:
        raise CodeConstructionError(f"Refusing to enumerate 2^{code.k} codewords")
    messages = np.array(list(product((0, 1), repeat=code.k)), dtype=np.int64)
    return ((messages @ code.generator.astype(np.int64)) % 2).astype(np.uint8)


def minimum_distance(code: BinaryLinearCode) -> int:
    weights = all_codewords(code).sum(axis=1)
    return int(weights[weights > 0].min())
