from typing import TypedDict


class TrialRecord(TypedDict):
    block_error: bool
    queries: int
    abandoned: bool
    fit_seconds: float  # model fitting time, kept apart from queries
