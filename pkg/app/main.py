# app/main.py
"""
Command-line entry point.

    python -m app.main simulate --code rlc:64:52 --snr 8,9,10 --variant basic,full
    python -m app.main sweep --lengths 32,64 --redundancy 4,8 --snr 9.8
    python -m app.main decode --code bch:4:2 --llr block.txt --variant full
    python -m app.main gencode --code crc:7:4:0xB --out crc74.txt

Exit status: 0 decoded / done, 2 abandoned (decode), 1 error.
"""

import argparse
import sys
from pathlib import Path
from typing import Dict, List, Optional

import numpy as np
from dotenv import dotenv_values

from app.channel.awgn import received_from_llr
from app.codes.loader import build_code, write_code_file
from app.config import get_settings
from app.decoder.grand import grand_decode
from app.exceptions import InputFileError
from app.logg import logger
from app.schemas import CampaignConfig, DecoderConfig, SweepConfig
from app.simulation.campaign import run_campaign, run_sweep

settings = get_settings()

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_ABANDONED = 2


# --------------------------
# Input helpers
# --------------------------
def read_llr_file(path: Path) -> np.ndarray:
    """One real per line; blank lines are ignored."""
    try:
        lines = Path(path).read_text().splitlines()
    except OSError as e:
        raise InputFileError(f"Cannot read LLR file {path}: {e}") from e
    values = []
    for number, line in enumerate(lines, start=1):
        if not line.strip():
            continue
        try:
            values.append(float(line))
        except ValueError as e:
            raise InputFileError(f"{path}:{number}: not a number: {line.strip()!r}") from e
    if not values:
        raise InputFileError(f"{path} holds no LLR values")
    return np.array(values)


def load_config_file(path: Optional[Path]) -> Dict[str, str]:
    """KEY=VALUE campaign file; keys are matched case-insensitively to config fields."""
    if path is None:
        return {}
    if not Path(path).is_file():
        raise InputFileError(f"Config file {path} not found")
    return {key.lower(): value for key, value in dotenv_values(path).items() if value is not None}


def _overrides(args: argparse.Namespace, names: List[str]) -> Dict[str, object]:
    values = {name: getattr(args, name, None) for name in names}
    return {name: value for name, value in values.items() if value is not None}


# --------------------------
# Subcommands
# --------------------------
def cmd_simulate(args: argparse.Namespace) -> int:
    merged = load_config_file(args.config)
    merged.update(_overrides(args, [
        "code", "snr_db", "trials", "min_errors", "variants", "segments", "div_opt",
        "max_queries", "seed", "workers", "paired_noise", "out",
    ]))
    cfg = CampaignConfig.model_validate(merged)
    run_campaign(cfg)
    return EXIT_OK


def cmd_sweep(args: argparse.Namespace) -> int:
    merged = load_config_file(args.config)
    merged.update(_overrides(args, [
        "lengths", "redundancies", "snr_db", "code_seed", "trials", "min_errors", "variants",
        "segments", "div_opt", "max_queries", "seed", "workers", "paired_noise", "out",
    ]))
    cfg = SweepConfig.model_validate(merged)
    run_sweep(cfg)
    return EXIT_OK


def cmd_decode(args: argparse.Namespace) -> int:
    code = build_code(args.code)
    block = received_from_llr(read_llr_file(args.llr))
    cfg = DecoderConfig.model_validate(_overrides(args, ["segments", "max_queries"]) | {
        "variant": args.variant,
        "divisibility_opt": bool(args.div_opt),
    })

    outcome = grand_decode(code, block, cfg)
    if outcome.abandoned:
        print("decoded: -")
    else:
        print(f"decoded: {''.join(str(int(b)) for b in outcome.word)}")
    print(f"queries: {outcome.queries}")
    print(f"abandoned: {str(outcome.abandoned).lower()}")
    return EXIT_ABANDONED if outcome.abandoned else EXIT_OK


def cmd_gencode(args: argparse.Namespace) -> int:
    code = build_code(args.code)
    write_code_file(code, args.out)
    return EXIT_OK


# --------------------------
# Parser
# --------------------------
def _add_decoder_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--segments", type=int, help="model segments m for the full variant")
    parser.add_argument("--div-opt", dest="div_opt", action="store_true", default=None,
                        help="round model offsets to multiples of the slopes")
    parser.add_argument("--max-queries", dest="max_queries", type=int,
                        help=f"abandonment budget (default {settings.DEFAULT_MAX_QUERIES})")


def _add_campaign_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", type=Path, help="KEY=VALUE campaign file")
    parser.add_argument("--trials", type=int, help="trials per point")
    parser.add_argument("--min-errors", dest="min_errors", type=int, help="stop a point after this many block errors")
    parser.add_argument("--variant", dest="variants", help="comma list of hard,basic,full,oracle")
    parser.add_argument("--seed", type=int, help="master seed")
    parser.add_argument("--workers", type=int, help="worker processes")
    parser.add_argument("--paired", dest="paired_noise", action="store_true", default=None,
                        help="same noise realisations for every variant")
    parser.add_argument("--out", type=Path, help="CSV output path")
    _add_decoder_flags(parser)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="orbgrand", description=f"{settings.APP_NAME} command line")
    sub = parser.add_subparsers(dest="command", required=True)

    p_sim = sub.add_parser("simulate", help="BLER versus SNR campaign")
    p_sim.add_argument("--code", help="rlc:n:k[:seed] | crc:n:k:hex | bch:m:t | file:path")
    p_sim.add_argument("--snr", dest="snr_db", help="comma list of SNR points in dB")
    _add_campaign_flags(p_sim)
    p_sim.set_defaults(handler=cmd_simulate)

    p_sweep = sub.add_parser("sweep", help="rate/length grid of random linear codes")
    p_sweep.add_argument("--lengths", help="comma list of code lengths n")
    p_sweep.add_argument("--redundancy", dest="redundancies", help="comma list of n-k values")
    p_sweep.add_argument("--snr", dest="snr_db", type=float, help="SNR in dB (default 9.8)")
    p_sweep.add_argument("--code-seed", dest="code_seed", type=int, help="seed of the random codes")
    _add_campaign_flags(p_sweep)
    p_sweep.set_defaults(handler=cmd_sweep)

    p_dec = sub.add_parser("decode", help="decode one block of LLRs")
    p_dec.add_argument("--code", required=True)
    p_dec.add_argument("--llr", type=Path, required=True, help="file with one LLR per line")
    p_dec.add_argument("--variant", default="basic", choices=["hard", "basic", "full", "oracle"])
    _add_decoder_flags(p_dec)
    p_dec.set_defaults(handler=cmd_decode)

    p_gen = sub.add_parser("gencode", help="write a code file")
    p_gen.add_argument("--code", required=True)
    p_gen.add_argument("--out", type=Path, required=True)
    p_gen.set_defaults(handler=cmd_gencode)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except (ValueError, OSError) as e:
        logger.error(f"❌ {args.command} failed: {e}")
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
