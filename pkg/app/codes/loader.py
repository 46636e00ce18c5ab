# app/codes/loader.py
"""
Plain-text code files and code-spec strings.

File format: first line ``n k`` followed by n−k lines of n characters
from {0,1} (the rows of H), or a single line ``crc n k <hex divisor>``.
Blank lines and lines starting with ``#`` are ignored.
"""

from pathlib import Path
from typing import Union

import numpy as np

from app.codes.bch import bch_code
from app.codes.gf2 import GF2, BinaryLinearCode, crc_code, divisor_hex, random_linear_code
from app.exceptions import CodeConstructionError, CodeSpecError
from app.logg import logger
from app.schemas import CodeSpec


def _dimensions(fields) -> tuple:
    try:
        return int(fields[0]), int(fields[1])
    except ValueError as e:
        raise CodeSpecError(f"Bad code dimensions {fields}: {e}") from e


def parse_code_text(text: str, label: str = "") -> BinaryLinearCode:
    lines = [line.strip() for line in text.splitlines()]
    lines = [line for line in lines if line and not line.startswith("#")]
    if not lines:
        raise CodeSpecError("Empty code file")

    header = lines[0].split()
    if header[0].lower() == "crc":
        if len(header) != 4 or len(lines) != 1:
            raise CodeSpecError("CRC line must read 'crc n k <hex divisor>'")
        n, k = _dimensions(header[1:3])
        return crc_code(n, k, header[3], label=label)

    if len(header) != 2:
        raise CodeSpecError("First line must read 'n k'")
    n, k = _dimensions(header)

    rows = lines[1:]
    if len(rows) != n - k:
        raise CodeSpecError(f"Expected {n - k} rows of H, found {len(rows)}")
    if any(len(row) != n or set(row) - {"0", "1"} for row in rows):
        raise CodeSpecError(f"H rows must be {n} characters from {{0,1}}")

    H = np.array([[int(c) for c in row] for row in rows], dtype=np.uint8)
    G = GF2(H).null_space().view(np.ndarray).astype(np.uint8)
    if G.shape[0] != k:
        raise CodeConstructionError(f"H has rank {n - G.shape[0]}, expected {n - k}")
    return BinaryLinearCode(n=n, k=k, generator=G, parity=H, label=label)


def load_code_file(path: Union[str, Path]) -> BinaryLinearCode:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as e:
        raise CodeSpecError(f"Cannot read code file {path}: {e}") from e
    code = parse_code_text(text, label=path.stem)
    logger.info(f"📄 Loaded {code.label} (n={code.n}, k={code.k}) from {path}")
    return code


def format_code(code: BinaryLinearCode) -> str:
    """Serialise a code; polynomial codes use the one-line CRC form."""
    if code.divisor is not None:
        return f"crc {code.n} {code.k} {divisor_hex(code.divisor)}\n"
    rows = ["".join(str(int(b)) for b in row) for row in code.parity]
    return "\n".join([f"{code.n} {code.k}", *rows]) + "\n"


def write_code_file(code: BinaryLinearCode, path: Union[str, Path]) -> Path:
    path = Path(path)
    path.write_text(format_code(code))
    logger.info(f"💾 Wrote {code.label} to {path}")
    return path


def build_code(spec: Union[CodeSpec, str]) -> BinaryLinearCode:
    """Construct the code a spec string (or parsed CodeSpec) describes."""
    if isinstance(spec, str):
        spec = CodeSpec.parse(spec)
    if spec.kind == "rlc":
        return random_linear_code(spec.n, spec.k, spec.seed)
    if spec.kind == "crc":
        return crc_code(spec.n, spec.k, spec.divisor)
    if spec.kind == "bch":
        return bch_code(spec.m, spec.t)
    return load_code_file(spec.path)
