import pytest
from hypothesis import given

from gtspace.bitset import all_subsets, union_all
from gtspace.core import SetFamily
from gtspace.covers import (
    Cover,
    closure_of_union,
    find_subcover,
    fip_compact,
    fip_witness,
    has_fip,
    is_compact,
    is_locally_finite,
    is_paracompact,
    is_refinement,
    open_covers,
    sg_closed_cover_trace,
    subcover_compact,
    subset_is_compact,
)
from gtspace.tests.strategies import gt_spaces


def test_cover_must_cover_target():
    Cover(SetFamily.of([0b011, 0b100]), 0b111)
    with pytest.raises(ValueError):
        Cover(SetFamily.of([0b011]), 0b111)


def test_refinement():
    assert is_refinement([0b001, 0b010], [0b011])
    assert not is_refinement([0b101], [0b011, 0b110])


def test_fip():
    assert has_fip([0b011, 0b110], 3)
    assert fip_witness([0b011, 0b110, 0b100], 3) == (0b011, 0b100)
    assert fip_witness([], 3) is None


def test_smallest_subcover():
    assert find_subcover([0b001, 0b010, 0b110, 0b111], 0b111) == (0b111,)
    assert find_subcover([0b001, 0b010], 0b111) is None
    assert find_subcover([0b001], 0) == ()


def test_every_finite_family_locally_finite(e1, e2):
    assert is_locally_finite(e1, list(e1.gamma))
    assert is_locally_finite(e2, list(e2.s_lambda_open))


def test_compact_by_both_routes(e0, e1):
    for space in (e0, e1):
        assert subcover_compact(space)
        assert fip_compact(space)
        assert is_compact(space)
        assert is_paracompact(space)


def test_open_covers_fallback_above_limit(e1):
    covers = list(open_covers(e1, limit=2))
    assert len(covers) == 2
    assert all(union_all(cover) == e1.full for cover in covers)


def test_subset_compactness(e1):
    assert subset_is_compact(e1, 0)
    assert subset_is_compact(e1, e1.ground.subset('abc'))


def test_sg_closed_cover_trace(e2):
    a = e2.ground.subset('a')
    assert sg_closed_cover_trace(e2, a) == (e2.ground.subset('ab'),)


@given(gt_spaces())
def test_finite_spaces_are_compact(space):
    assert is_compact(space)


@given(gt_spaces())
def test_closure_additive_on_closed_pairs(space):
    closed = list(space.s_lambda_closed)
    for first in closed:
        for second in closed:
            if first | second in space.s_lambda_closed:
                assert closure_of_union(space, [first, second])


@given(gt_spaces())
def test_finite_families_are_locally_finite(space):
    assert space.full in space.s_lambda_open
    assert is_locally_finite(space, list(all_subsets(space.n)))
