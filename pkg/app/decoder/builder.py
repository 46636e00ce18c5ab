# app/decoder/builder.py
import time
from typing import Iterator, NamedTuple, Optional

from app.channel.awgn import ReceivedBlock
from app.oracle.ml import exact_ml_stream
from app.patterns.landslide import NoisePattern
from app.patterns.streams import basic_order, full_order, hard_order
from app.reliability.fitting import fit_block_model
from app.reliability.model import SegmentModel
from app.schemas import DecoderConfig, DecoderVariant


class BuiltStream(NamedTuple):
    patterns: Iterator[NoisePattern]
    model: Optional[SegmentModel]
    fit_seconds: float


class StreamBuilder:
    """Builds the pattern stream a decoder variant queries for one block."""

    def __init__(self, cfg: DecoderConfig):
        self.cfg = cfg

    def build(self, block: ReceivedBlock) -> BuiltStream:
        """
        Construct the stream for ``block``.

        The full variant fits its model to this block first; the time spent
        fitting is reported separately from the query count.

        Args:
            block: Received block (its reliabilities drive full and oracle)

        Returns:
            BuiltStream with the patterns, the fitted model if any and the fit time
        """
        n = block.n
        limit = self.cfg.max_queries
        variant = self.cfg.variant

        if variant == DecoderVariant.hard:
            return BuiltStream(hard_order(n, limit), None, 0.0)

        if variant == DecoderVariant.basic:
            return BuiltStream(basic_order(n, limit), None, 0.0)

        if variant == DecoderVariant.oracle:
            stream = (item.pattern for item in exact_ml_stream(block.reliability, limit))
            return BuiltStream(stream, None, 0.0)

        started = time.perf_counter()
        model = fit_block_model(
            block.sorted_reliability(),
            self.cfg.segments,
            divisibility=self.cfg.divisibility_opt,
        )
        fit_seconds = time.perf_counter() - started
        return BuiltStream(full_order(n, model, limit), model, fit_seconds)
