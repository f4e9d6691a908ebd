from fractions import Fraction

import pytest

from ramsey_turan.base import (
    format_fraction,
    iter_bits,
    lowest_bit,
    mask_of,
    members,
    popcount,
)


def test_popcount():
    assert popcount(0) == 0
    assert popcount(0b1011) == 3
    assert popcount(1 << 63) == 1


def test_iter_bits_is_ascending():
    assert list(iter_bits(0b10110)) == [1, 2, 4]
    assert members(0) == []


def test_mask_of_round_trips_members():
    assert mask_of([0, 3]) == 9
    assert members(mask_of([5, 1, 7])) == [1, 5, 7]


def test_lowest_bit():
    assert lowest_bit(0b1000) == 3
    assert lowest_bit(0b1010) == 1


@pytest.mark.parametrize('value, expected', [
    (Fraction(27, 2), '27/2'),
    (Fraction(4), '4'),
    (Fraction(-1, 3), '-1/3'),
    (5, 5),
    (None, None),
])
def test_format_fraction(value, expected):
    assert format_fraction(value) == expected
