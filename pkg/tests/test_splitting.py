from itertools import combinations

import pytest

from app.patterns.splitting import (
    SplitValidator,
    composition_count,
    compositions,
    integer_splitting,
    valid_partial_hamming_weights,
)
from app.reliability.model import SegmentModel

MODELS = [
    SegmentModel.basic(8),
    SegmentModel(anchors=(0, 3, 8), offsets=(0, 6), slopes=(1, 3)),
    SegmentModel(anchors=(0, 3, 8), offsets=(0, 7), slopes=(1, 3)),
    SegmentModel(anchors=(0, 2, 6), offsets=(-1, 4), slopes=(2, 1)),
    SegmentModel(anchors=(0, 2, 5, 9), offsets=(0, 2, 8), slopes=(1, 2, 4)),
]


def achievable_counts(weight, offset, slope, length):
    values = [offset + slope * t for t in range(1, length + 1)]
    return {
        w
        for w in range(1, length + 1)
        if any(sum(c) == weight for c in combinations(values, w))
    }


def test_examples():
    assert valid_partial_hamming_weights(3, 0, 1, 4) == (1, 2)
    assert valid_partial_hamming_weights(1, 5, 1, 4) is None
    assert valid_partial_hamming_weights(4, 0, 2, 8) == (1,)


def test_rejects_zero_weight():
    with pytest.raises(ValueError):
        valid_partial_hamming_weights(0, 0, 1, 4)


def test_matches_subset_enumeration():
    for length in range(1, 7):
        for slope in range(1, 4):
            for offset in range(1 - slope, 5):
                for weight in range(1, 45):
                    found = valid_partial_hamming_weights(weight, offset, slope, length)
                    expected = achievable_counts(weight, offset, slope, length)
                    assert set(found or ()) == expected, (weight, offset, slope, length)


def test_zero_weight_gives_all_zero_split():
    for model in MODELS:
        splits = list(integer_splitting(0, model))
        assert [s.parts for s in splits] == [(0,) * model.m]


def test_two_into_two_segments():
    model = SegmentModel(anchors=(0, 4, 8), offsets=(0, 0), slopes=(1, 1))
    assert [s.parts for s in integer_splitting(2, model)] == [(0, 2), (1, 1), (2, 0)]


@pytest.mark.parametrize("model", MODELS)
def test_splits_equal_filtered_compositions(model):
    validator = SplitValidator(model)
    for weight in range(0, 60):
        expected = [
            c for c in compositions(weight, model.m)
            if all(validator.check(i, part) is not None for i, part in enumerate(c))
        ]
        emitted = [s.parts for s in integer_splitting(weight, model, validator=validator)]
        assert emitted == expected
        assert [s.parts for s in integer_splitting(weight, model, jump=False)] == expected
        for split in integer_splitting(weight, model):
            assert split.total == weight


def test_composition_count():
    for weight in range(0, 9):
        for parts in range(1, 5):
            assert len(list(compositions(weight, parts))) == composition_count(weight, parts)
    assert len(set(compositions(6, 3))) == composition_count(6, 3)
