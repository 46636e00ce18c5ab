# app/codes/bch.py
"""
Narrow-sense primitive binary BCH codes.

GF(2^m) is built from a fixed primitive polynomial per m (table below);
the generator is the lcm of the minimal polynomials of α, α³, …, α^(2t−1).
"""

from functools import reduce
from typing import Tuple

import galois

from app.codes.gf2 import BinaryLinearCode, crc_code
from app.exceptions import CodeConstructionError
from app.logg import logger

# Primitive polynomials, highest degree first as an int (x^4 + x + 1 -> 0b10011).
PRIMITIVE_POLYNOMIALS = {
    2: 0b111,
    3: 0b1011,
    4: 0b10011,
    5: 0b100101,
    6: 0b1000011,
    7: 0b10001001,
    8: 0b100011101,
    9: 0b1000010001,
    10: 0b10000001001,
}


def bch_generator(m: int, t: int) -> Tuple[Tuple[int, ...], int, int]:
    """
    Generator polynomial of the narrow-sense BCH code of length 2^m − 1.

    Args:
        m: Field degree, 2 ≤ m ≤ 10
        t: Designed correction capability, 2t < 2^m − 1

    Returns:
        (generator bits highest degree first, n, k)
    """
    if m not in PRIMITIVE_POLYNOMIALS:
        raise CodeConstructionError(f"BCH field degree m={m} outside 2..10")
    n = 2**m - 1
    if t < 1 or 2 * t >= n:
        raise CodeConstructionError(f"BCH capability t={t} invalid for n={n}")

    field = galois.GF(2**m, irreducible_poly=PRIMITIVE_POLYNOMIALS[m])
    alpha = field(2)
    minimal = [(alpha**i).minimal_poly() for i in range(1, 2 * t, 2)]
    generator = reduce(galois.lcm, minimal)

    k = n - generator.degree
    if k <= 0:
        raise CodeConstructionError(f"BCH(m={m}, t={t}) has no message bits")
    bits = tuple(int(c) for c in generator.coeffs)
    logger.debug(f"BCH[{n},{k}] generator degree {generator.degree}")
    return bits, n, k


def bch_code(m: int, t: int) -> BinaryLinearCode:
    bits, n, k = bch_generator(m, t)
    return crc_code(n, k, bits, label=f"BCH[{n},{k}]")
