# app/exceptions.py
"""
Error hierarchy for the toolkit.

Every error subclasses ValueError so callers that only care about
"bad input" can catch one type. Abandoning a decode is not an error.
"""


class GrandError(ValueError):
    """Base class for toolkit errors."""


class CodeConstructionError(GrandError):
    """A code cannot be built from the given parameters or matrices."""


class DimensionMismatchError(GrandError):
    """A vector does not have the length the code or block expects."""


class CodeSpecError(GrandError):
    """A code spec string or code file cannot be parsed."""


class InputFileError(GrandError):
    """An input data file (e.g. an LLR vector) is malformed."""


class ChannelError(GrandError):
    """Received values cannot be turned into a block (e.g. NaN LLRs)."""
