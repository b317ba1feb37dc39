from hypothesis import given, strategies as st

from gtspace.bitset import (
    all_subsets,
    complement,
    count_bits,
    intersect_all,
    is_subset,
    iter_indexes,
    make_bitset,
    permute,
    singletons,
    union_all,
)


def test_make_bitset_and_indexes():
    assert make_bitset([0, 2]) == 0b101
    assert list(iter_indexes(0b1010)) == [1, 3]
    assert count_bits(0b1011) == 3


def test_subset_and_complement():
    assert is_subset(0b001, 0b011)
    assert not is_subset(0b100, 0b011)
    assert complement(0b0101, 4) == 0b1010


def test_empty_intersection_is_full_set():
    assert intersect_all([], 3) == 0b111
    assert intersect_all([0b110, 0b011], 3) == 0b010
    assert union_all([]) == 0


def test_enumeration_helpers():
    assert list(all_subsets(2)) == [0, 1, 2, 3]
    assert singletons(3) == [1, 2, 4]


def test_permute_moves_bits():
    # bit 0 -> 2, bit 1 -> 0, bit 2 -> 1
    assert permute(0b011, (2, 0, 1)) == 0b101


@given(st.integers(min_value=0, max_value=255))
def test_indexes_rebuild_value(value):
    assert make_bitset(iter_indexes(value)) == value
    assert count_bits(value) == len(list(iter_indexes(value)))
