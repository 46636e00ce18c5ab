import pytest

from app.oracle.ml import brute_force_partitions
from app.patterns.landslide import Landslide, landslide, logistic_weight, max_hamming_weight, shift_to_distinct, validate_pattern

WALK_8_4_4 = [
    (0, 0, 4, 4),
    (0, 1, 3, 4),
    (0, 2, 2, 4),
    (0, 2, 3, 3),
    (1, 1, 2, 4),
    (1, 1, 3, 3),
    (1, 2, 2, 3),
    (2, 2, 2, 2),
]


def test_eight_into_four_parts_of_at_most_four():
    walk = landslide(8, 4, 4)
    partitions = list(walk)
    assert partitions == WALK_8_4_4
    assert walk.builds == len(partitions)
    last = partitions[-1]
    assert last[-1] - last[0] <= 1


def test_zero_total_gives_single_zero_partition():
    assert list(landslide(0, 5, 3)) == [(0, 0, 0, 0, 0)]


def test_saturated_total_gives_single_full_partition():
    assert list(landslide(12, 4, 3)) == [(3, 3, 3, 3)]


def test_zero_cap():
    assert list(landslide(0, 3, 0)) == [(0, 0, 0)]
    assert list(landslide(1, 3, 0)) == []


def test_no_parts():
    assert list(landslide(0, 0, 5)) == [()]
    assert list(landslide(2, 0, 5)) == []


@pytest.mark.parametrize("total,parts,cap", [(13, 3, 4), (-1, 2, 3), (2, -1, 3), (2, 2, -1)])
def test_infeasible_inputs(total, parts, cap):
    walk = Landslide(total, parts, cap)
    assert not walk.feasible
    assert list(walk) == []


def test_matches_brute_force():
    for parts in range(1, 7):
        for cap in range(0, 13):
            for total in range(0, 31):
                walk = landslide(total, parts, cap)
                emitted = list(walk)
                expected = brute_force_partitions(total, parts, cap)
                assert len(emitted) == len(set(emitted)) == len(expected), (total, parts, cap)
                assert set(emitted) == expected
                assert walk.builds == len(emitted)
                for u in emitted:
                    assert sum(u) == total
                    assert all(0 <= a <= b <= cap for a, b in zip(u, u[1:]))
                if emitted:
                    assert emitted[-1][-1] - emitted[-1][0] <= 1


def test_shift_to_distinct():
    assert shift_to_distinct((0, 0, 4, 4)) == (1, 2, 7, 8)
    assert logistic_weight(shift_to_distinct((0, 0, 4, 4))) == 18
    assert shift_to_distinct((0, 0, 0)) == (1, 2, 3)
    assert shift_to_distinct((2, 2, 2, 2)) == (3, 4, 5, 6)
    for u in WALK_8_4_4:
        v = shift_to_distinct(u)
        assert logistic_weight(v) == 8 + 4 * 5 // 2
        assert validate_pattern(v, 8) == v


def test_logistic_weight():
    assert logistic_weight(()) == 0
    assert logistic_weight(tuple(range(1, 11))) == 55
    assert logistic_weight((1, 4)) == 5


def test_max_hamming_weight():
    assert [max_hamming_weight(w) for w in range(11)] == [0, 1, 1, 2, 2, 2, 3, 3, 3, 3, 4]


@pytest.mark.parametrize("pattern", [(0, 2), (2, 2), (3, 1), (1, 9)])
def test_validate_pattern_rejects(pattern):
    with pytest.raises(ValueError):
        validate_pattern(pattern, 8)
