# app/simulation/campaign.py
"""
Seeded Monte-Carlo campaigns over codes, SNR points and decoder variants.

Trial t of (variant v, point s) always draws from
SeedSequence(master_seed, spawn_key=(v, s, t)), trials are grouped into
fixed-size chunks, and an early stop (min_errors) is decided on the
ordered chunk sequence, so results do not depend on the worker count.
"""

import csv
import math
import time
from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional, Tuple, Union

import numpy as np
from scipy.stats import binomtest
from tqdm import tqdm

from app.codes.gf2 import BinaryLinearCode, random_linear_code
from app.codes.loader import build_code
from app.config import get_settings
from app.decoder.grand import decode_campaign_trial
from app.decoder.state import TrialRecord
from app.infrastructure.workers import WorkerPool
from app.logg import logger
from app.schemas import (
    CampaignConfig,
    CampaignResult,
    CampaignRow,
    ChannelConfig,
    DecoderConfig,
    DecoderVariant,
    SweepConfig,
)

CSV_COLUMNS = [
    "variant", "n", "k", "snr_db", "trials", "block_errors", "bler",
    "mean_queries", "p99_queries", "abandonment_rate", "seconds",
    "mean_fit_seconds",
]

# Config fields that do not influence results stay out of the CSV header.
_NOT_ECHOED = {"workers", "out"}


def trial_rng(seed: int, variant_key: int, point: int, trial: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(variant_key, point, trial)))


@dataclass(frozen=True)
class WorkItem:
    code: BinaryLinearCode
    channel: ChannelConfig
    decoder: DecoderConfig
    seed: int
    variant_key: int
    point: int
    start: int
    stop: int


def run_chunk(item: WorkItem) -> List[TrialRecord]:
    return [
        decode_campaign_trial(
            item.code, item.channel, item.decoder,
            trial_rng(item.seed, item.variant_key, item.point, t),
        )
        for t in range(item.start, item.stop)
    ]


def summarize(
    records: List[TrialRecord],
    variant: DecoderVariant,
    code: BinaryLinearCode,
    snr_db: float,
    seconds: float,
) -> CampaignRow:
    trials = len(records)
    errors = sum(r["block_error"] for r in records)
    abandoned = sum(r["abandoned"] for r in records)
    queries = np.array([r["queries"] for r in records], dtype=np.int64)
    fit_seconds = math.fsum(r["fit_seconds"] for r in records)
    ci = binomtest(errors, trials).proportion_ci(confidence_level=0.95, method="exact")
    return CampaignRow(
        variant=variant,
        n=code.n,
        k=code.k,
        snr_db=snr_db,
        trials=trials,
        block_errors=errors,
        bler=errors / trials,
        mean_queries=float(queries.mean()),
        p99_queries=float(np.percentile(queries, 99)),
        max_queries_observed=int(queries.max()),
        abandonment_rate=abandoned / trials,
        mean_fit_seconds=fit_seconds / trials,
        seconds=seconds,
        bler_ci_low=float(ci.low),
        bler_ci_high=float(ci.high),
    )


def run_point(
    pool: WorkerPool,
    code: BinaryLinearCode,
    snr_db: float,
    decoder: DecoderConfig,
    *,
    seed: int,
    variant_key: int,
    point: int,
    trials: int,
    min_errors: Optional[int] = None,
) -> CampaignRow:
    """Run one (variant, SNR) point, stopping early once min_errors is reached."""
    settings = get_settings()
    channel = ChannelConfig(snr_db=snr_db, seed=seed)
    chunk = max(1, settings.TRIAL_CHUNK)
    bounds = [(s, min(s + chunk, trials)) for s in range(0, trials, chunk)]

    records: List[TrialRecord] = []
    errors = 0
    started = time.perf_counter()
    with tqdm(
        total=trials,
        desc=f"{decoder.variant.value} @ {snr_db:g} dB",
        disable=not settings.PROGRESS_BAR,
        leave=False,
    ) as bar:
        for first in range(0, len(bounds), pool.workers):
            items = [
                WorkItem(code, channel, decoder, seed, variant_key, point, start, stop)
                for start, stop in bounds[first:first + pool.workers]
            ]
            stopped = False
            # chunks are consumed in order, later ones in the wave are dropped on a stop
            for chunk_records in pool.map(run_chunk, items):
                records.extend(chunk_records)
                errors += sum(r["block_error"] for r in chunk_records)
                bar.update(len(chunk_records))
                if min_errors is not None and errors >= min_errors:
                    stopped = True
                    break
            if stopped:
                logger.info(f"⏹️  {errors} block errors after {len(records)} trials, stopping point")
                break
    seconds = time.perf_counter() - started

    row = summarize(records, decoder.variant, code, snr_db, seconds)
    logger.info(
        f"📈 {code.label} {row.variant.value} @ {snr_db:g} dB: "
        f"BLER={row.bler:.3e} ({row.block_errors}/{row.trials}), "
        f"mean D={row.mean_queries:.1f}, abandoned={row.abandonment_rate:.2e}"
    )
    return row


def run_campaign(cfg: CampaignConfig, code: Optional[BinaryLinearCode] = None) -> CampaignResult:
    """
    BLER curve(s) for one code over an SNR grid and a list of decoder variants.

    Args:
        cfg: Campaign configuration
        code: Pre-built code; built from ``cfg.code`` when omitted

    Returns:
        CampaignResult with one row per (variant, SNR); written as CSV when cfg.out is set
    """
    code = code or build_code(cfg.code)
    logger.info("=" * 60)
    logger.info(f"🚀 Campaign on {code.label}: variants={[v.value for v in cfg.variants]}, SNR={cfg.snr_db}")
    logger.info("=" * 60)

    result = CampaignResult(code_label=code.label)
    with WorkerPool(cfg.workers) as pool:
        for vi, variant in enumerate(cfg.variants):
            decoder = cfg.decoder_config(variant)
            for si, snr_db in enumerate(cfg.snr_db):
                result.rows.append(run_point(
                    pool, code, snr_db, decoder,
                    seed=cfg.seed,
                    variant_key=0 if cfg.paired_noise else vi,
                    point=si,
                    trials=cfg.trials,
                    min_errors=cfg.min_errors,
                ))

    if cfg.out is not None:
        write_csv(result, cfg, cfg.out)
    logger.info(f"✅ Campaign complete ({len(result.rows)} points)")
    return result


def run_sweep(cfg: SweepConfig) -> CampaignResult:
    """Rate/length grid of random linear codes at one SNR."""
    logger.info("=" * 60)
    logger.info(f"🚀 Sweep: n={cfg.lengths}, n-k={cfg.redundancies} @ {cfg.snr_db:g} dB")
    logger.info("=" * 60)

    result = CampaignResult(code_label="RLC sweep")
    cells: List[Tuple[int, int]] = [(n, r) for n in cfg.lengths for r in cfg.redundancies]
    with WorkerPool(cfg.workers) as pool:
        for vi, variant in enumerate(cfg.variants):
            for ci, (n, r) in enumerate(cells):
                code = random_linear_code(n, n - r, cfg.code_seed)
                decoder = cfg.campaign_config(n, r).decoder_config(variant)
                result.rows.append(run_point(
                    pool, code, cfg.snr_db, decoder,
                    seed=cfg.seed,
                    variant_key=0 if cfg.paired_noise else vi,
                    point=ci,
                    trials=cfg.trials,
                    min_errors=cfg.min_errors,
                ))

    if cfg.out is not None:
        write_csv(result, cfg, cfg.out)
    logger.info(f"✅ Sweep complete ({len(result.rows)} cells)")
    return result


def _format_row(row: CampaignRow, timing: bool) -> List[str]:
    return [
        row.variant.value,
        str(row.n),
        str(row.k),
        f"{row.snr_db:g}",
        str(row.trials),
        str(row.block_errors),
        f"{row.bler:.6g}",
        f"{row.mean_queries:.6g}",
        f"{row.p99_queries:.6g}",
        f"{row.abandonment_rate:.6g}",
        f"{row.seconds:.3f}" if timing else "0",
        f"{row.mean_fit_seconds:.3g}" if timing else "0",
    ]


def write_csv(
    result: CampaignResult,
    cfg: Union[CampaignConfig, SweepConfig],
    path: Union[str, Path],
) -> Path:
    """Write rows with the configuration echoed as '#' comment lines."""
    path = Path(path)
    timing = get_settings().CSV_TIMING
    echo = cfg.model_dump(mode="json", exclude=_NOT_ECHOED)
    try:
        with path.open("w", newline="") as fh:
            fh.write(f"# label = {result.code_label}\n")
            for key, value in echo.items():
                fh.write(f"# {key} = {value}\n")
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(CSV_COLUMNS)
            for row in result.rows:
                writer.writerow(_format_row(row, timing))
    except OSError as e:
        logger.error(f"❌ Failed to write {path}: {e}")
        raise
    logger.info(f"💾 Wrote {len(result.rows)} rows to {path}")
    return path
