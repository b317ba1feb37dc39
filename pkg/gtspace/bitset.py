"""Integer bitset helpers: a Subset of an indexed ground set is a plain int."""
from __future__ import annotations

from collections.abc import Iterable, Iterator

Subset = int


def make_bitset(indexes: Iterable[int]) -> Subset:
    value = 0
    for idx in indexes:
        value |= 1 << idx
    return value


def full_set(n: int) -> Subset:
    return (1 << n) - 1


def count_bits(value: Subset) -> int:
    return bin(value).count('1')


def iter_indexes(value: Subset) -> Iterator[int]:
    index = 0
    while value:
        if value & 1:
            yield index
        value >>= 1
        index += 1


def is_subset(inner: Subset, outer: Subset) -> bool:
    return inner & ~outer == 0


def complement(value: Subset, n: int) -> Subset:
    return full_set(n) & ~value


def all_subsets(n: int) -> range:
    """Every subset of an n-point ground set, in canonical (numeric) order."""
    return range(1 << n)


def singletons(n: int) -> list[Subset]:
    return [1 << i for i in range(n)]


def intersect_all(values: Iterable[Subset], n: int) -> Subset:
    """Intersection of `values`; the empty intersection is the whole ground set."""
    result = full_set(n)
    for value in values:
        result &= value
    return result


def union_all(values: Iterable[Subset]) -> Subset:
    result = 0
    for value in values:
        result |= value
    return result


def permute(value: Subset, perm: tuple[int, ...]) -> Subset:
    """Move bit i to position perm[i]."""
    return make_bitset(perm[i] for i in iter_indexes(value))
