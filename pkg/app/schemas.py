import math
import re
from enum import Enum
from pathlib import Path
from typing import List, Literal, Optional

from pydantic import BaseModel, Field, field_serializer, field_validator, model_validator

from app.config import get_settings
from app.exceptions import CodeSpecError


def _split_list(value):
    """Accept comma-separated strings wherever a list is expected."""
    if isinstance(value, str):
        return [item.strip() for item in value.split(",") if item.strip()]
    if isinstance(value, (int, float)):
        return [value]
    return value


# Decoder Schemas
class DecoderVariant(str, Enum):
    hard = "hard"
    basic = "basic"
    full = "full"
    oracle = "oracle"


class DecoderConfig(BaseModel):
    variant: DecoderVariant = DecoderVariant.basic
    segments: int = Field(default_factory=lambda: get_settings().DEFAULT_SEGMENTS, ge=1)
    divisibility_opt: bool = False
    max_queries: int = Field(default_factory=lambda: get_settings().DEFAULT_MAX_QUERIES, ge=1)

    model_config = {"frozen": True}


# Channel Schemas
class ChannelConfig(BaseModel):
    """BPSK over AWGN; SNR_dB = 20·log10(1/σ) for unit-energy symbols."""

    snr_db: float
    seed: int = 0

    model_config = {"frozen": True}

    @field_validator("snr_db")
    @classmethod
    def _finite(cls, value: float) -> float:
        if not math.isfinite(value):
            raise ValueError("snr_db must be finite so that sigma > 0")
        return value

    @property
    def sigma(self) -> float:
        return 10.0 ** (-self.snr_db / 20.0)


# Code Schemas
_HEX = re.compile(r"^(0x)?[0-9a-fA-F]+$")


class CodeSpec(BaseModel):
    """
    Code selection as used on the command line.

    Forms: ``rlc:n:k[:seed]``, ``crc:n:k:hex``, ``bch:m:t``, ``file:path``.
    """

    kind: Literal["rlc", "crc", "bch", "file"]
    n: Optional[int] = None
    k: Optional[int] = None
    seed: int = 0
    divisor: Optional[str] = None
    m: Optional[int] = None
    t: Optional[int] = None
    path: Optional[Path] = None

    model_config = {"frozen": True}

    @model_validator(mode="after")
    def _check_fields(self):
        if self.kind in ("rlc", "crc") and (self.n is None or self.k is None):
            raise ValueError(f"{self.kind} code needs n and k")
        if self.kind == "crc" and (self.divisor is None or not _HEX.match(self.divisor)):
            raise ValueError("crc code needs a hex divisor")
        if self.kind == "bch" and (self.m is None or self.t is None):
            raise ValueError("bch code needs m and t")
        if self.kind == "file" and self.path is None:
            raise ValueError("file code needs a path")
        return self

    @classmethod
    def parse(cls, text: str) -> "CodeSpec":
        kind, _, rest = text.strip().partition(":")
        fields = rest.split(":") if rest else []
        try:
            if kind == "rlc" and len(fields) in (2, 3):
                seed = int(fields[2]) if len(fields) == 3 else 0
                return cls(kind="rlc", n=int(fields[0]), k=int(fields[1]), seed=seed)
            if kind == "crc" and len(fields) == 3:
                return cls(kind="crc", n=int(fields[0]), k=int(fields[1]), divisor=fields[2])
            if kind == "bch" and len(fields) == 2:
                return cls(kind="bch", m=int(fields[0]), t=int(fields[1]))
            if kind == "file" and rest:
                return cls(kind="file", path=Path(rest))
        except ValueError as e:
            raise CodeSpecError(f"Invalid code spec {text!r}: {e}") from e
        raise CodeSpecError(f"Invalid code spec {text!r}")

    def __str__(self) -> str:
        if self.kind == "rlc":
            return f"rlc:{self.n}:{self.k}:{self.seed}"
        if self.kind == "crc":
            return f"crc:{self.n}:{self.k}:{self.divisor}"
        if self.kind == "bch":
            return f"bch:{self.m}:{self.t}"
        return f"file:{self.path}"


# Campaign Schemas
class CampaignConfig(BaseModel):
    code: CodeSpec
    snr_db: List[float] = Field(min_length=1)
    trials: int = Field(default=1000, ge=1)
    min_errors: Optional[int] = Field(default=None, ge=1)
    variants: List[DecoderVariant] = Field(default_factory=lambda: [DecoderVariant.basic], min_length=1)
    segments: int = Field(default_factory=lambda: get_settings().DEFAULT_SEGMENTS, ge=1)
    div_opt: bool = False
    max_queries: int = Field(default_factory=lambda: get_settings().DEFAULT_MAX_QUERIES, ge=1)
    seed: int = Field(default_factory=lambda: get_settings().DEFAULT_SEED)
    workers: int = Field(default_factory=lambda: get_settings().DEFAULT_WORKERS, ge=1)
    paired_noise: bool = False
    out: Optional[Path] = None

    @field_validator("code", mode="before")
    @classmethod
    def _parse_code(cls, value):
        if isinstance(value, str):
            return CodeSpec.parse(value)
        return value

    @field_serializer("code")
    def _code_text(self, code: CodeSpec) -> str:
        return str(code)

    @field_validator("snr_db", "variants", mode="before")
    @classmethod
    def _parse_list(cls, value):
        return _split_list(value)

    def decoder_config(self, variant: DecoderVariant) -> DecoderConfig:
        return DecoderConfig(
            variant=variant,
            segments=self.segments,
            divisibility_opt=self.div_opt,
            max_queries=self.max_queries,
        )


class SweepConfig(BaseModel):
    """RLC rate/length grid at a single SNR."""

    lengths: List[int] = Field(min_length=1)
    redundancies: List[int] = Field(min_length=1)
    snr_db: float = 9.8
    code_seed: int = 0
    trials: int = Field(default=1000, ge=1)
    min_errors: Optional[int] = Field(default=None, ge=1)
    variants: List[DecoderVariant] = Field(default_factory=lambda: [DecoderVariant.basic], min_length=1)
    segments: int = Field(default_factory=lambda: get_settings().DEFAULT_SEGMENTS, ge=1)
    div_opt: bool = False
    max_queries: int = Field(default_factory=lambda: get_settings().DEFAULT_MAX_QUERIES, ge=1)
    seed: int = Field(default_factory=lambda: get_settings().DEFAULT_SEED)
    workers: int = Field(default_factory=lambda: get_settings().DEFAULT_WORKERS, ge=1)
    paired_noise: bool = False
    out: Optional[Path] = None

    @field_validator("lengths", "redundancies", "variants", mode="before")
    @classmethod
    def _parse_list(cls, value):
        return _split_list(value)

    @model_validator(mode="after")
    def _check_grid(self):
        for n in self.lengths:
            for r in self.redundancies:
                if not 0 < r < n:
                    raise ValueError(f"redundancy {r} invalid for length {n}")
        return self

    def campaign_config(self, n: int, r: int) -> CampaignConfig:
        return CampaignConfig(
            code=CodeSpec(kind="rlc", n=n, k=n - r, seed=self.code_seed),
            snr_db=[self.snr_db],
            trials=self.trials,
            min_errors=self.min_errors,
            variants=self.variants,
            segments=self.segments,
            div_opt=self.div_opt,
            max_queries=self.max_queries,
            seed=self.seed,
            workers=self.workers,
            paired_noise=self.paired_noise,
        )


# Result Schemas
class CampaignRow(BaseModel):
    variant: DecoderVariant
    n: int
    k: int
    snr_db: float
    trials: int
    block_errors: int
    bler: float
    mean_queries: float
    p99_queries: float
    max_queries_observed: int
    abandonment_rate: float
    mean_fit_seconds: float = 0.0
    seconds: float
    bler_ci_low: float
    bler_ci_high: float


class CampaignResult(BaseModel):
    code_label: str
    rows: List[CampaignRow] = []

    def row(self, variant: DecoderVariant, snr_db: float) -> CampaignRow:
        for row in self.rows:
            if row.variant == variant and row.snr_db == snr_db:
                return row
        raise KeyError((variant, snr_db))
