import pytest
from hypothesis import given

from gtspace.bitset import all_subsets, is_subset
from gtspace.core import (
    closure_in_family,
    gamma_closure,
    interior_in_family,
    make_space,
    s_lambda_closed_by_pairs,
    sker,
    subspace,
)
from gtspace.errors import DuplicatePoint, EmptyCarrier, NotUnionClosed, UnknownPoint
from gtspace.tests.strategies import gt_spaces


def subsets(space, *groups):
    return {space.ground.subset(group) for group in groups}


def test_make_space_adds_empty_set(e1):
    assert 0 in e1.gamma
    assert len(e1.gamma) == 4
    assert e1.full not in e1.gamma


def test_make_space_rejects_bad_input():
    with pytest.raises(DuplicatePoint):
        make_space(['a', 'a'], [])
    with pytest.raises(UnknownPoint):
        make_space(['a', 'b'], [['z']])
    with pytest.raises(EmptyCarrier):
        make_space([], [])


def test_union_gap_is_reported():
    with pytest.raises(NotUnionClosed) as info:
        make_space(['a', 'b', 'c'], [['a'], ['b']])
    assert info.value.union == ['a', 'b']
    assert "{a,b}" in str(info.value)


def test_gamma_closure_e1(e1):
    assert gamma_closure(e1, 0) == e1.ground.subset('d')
    assert gamma_closure(e1, e1.ground.subset('b')) == e1.full


def test_s_gamma_open_e1_includes_whole_space(e1):
    expected = subsets(e1, '', 'd', 'ab', 'abc', 'abd', 'abcd', 'bc', 'bcd')
    assert set(e1.s_gamma_open) == expected


def test_s_gamma_open_indiscrete(e0):
    assert list(e0.s_gamma_open) == [0, 1, 2, 3]


def test_sker_e1(e1):
    assert sker(e1, e1.ground.subset('a')) == e1.ground.subset('ab')
    assert sker(e1, e1.ground.subset('ac')) == e1.ground.subset('abc')


def test_closure_in_s_gamma_open_family(e1):
    family = e1.s_gamma_open
    assert closure_in_family(family, e1.ground.subset('a'), e1.ground) == e1.ground.subset('a')
    assert closure_in_family(family, e1.ground.subset('ac'), e1.ground) == e1.ground.subset('abc')


def test_interior_by_duality(e1):
    value = e1.ground.subset('ab')
    interior = interior_in_family(e1.s_lambda_open, value, e1.ground)
    assert is_subset(interior, value)
    assert interior in e1.s_lambda_open


def test_s_lambda_closed_e1(e1):
    closed = e1.s_lambda_closed
    for point in 'abcd':
        assert e1.ground.subset(point) in closed
    assert e1.ground.subset('ac') not in closed


def test_s_lambda_closed_e0_and_e2(e0, e2):
    assert list(e0.s_lambda_closed) == [0, 1, 2, 3]
    assert set(e2.s_lambda_closed) == subsets(e2, '', 'c', 'ab', 'abc')
    assert set(e2.s_lambda_open) == set(e2.s_lambda_closed)


def test_sg_closed_but_not_closed(e1, e2):
    a = e2.ground.subset('a')
    assert a in e2.sg_lambda_closed
    assert a not in e2.s_lambda_closed
    assert set(e1.s_lambda_closed) <= set(e1.sg_lambda_closed)


def test_subspace_traces(e1):
    assert subspace(e1, e1.ground.subset('ab')).gamma.members == (0, 2, 3)
    assert subspace(e1, e1.ground.subset('d')).gamma.members == (0,)
    assert subspace(e1, e1.ground.subset('ab')).ground.labels == ('a', 'b')
    with pytest.raises(EmptyCarrier):
        subspace(e1, 0)


@given(gt_spaces())
def test_whole_space_always_open(space):
    assert space.full in space.s_gamma_open
    assert space.full in space.s_lambda_open


@given(gt_spaces())
def test_s_gamma_open_matches_definition(space):
    closure = space.gamma_closure_table
    for value in all_subsets(space.n):
        expected = any(is_subset(v, value) and is_subset(value, closure[v]) for v in space.gamma)
        assert (value in space.s_gamma_open) == expected


@given(gt_spaces())
def test_kernel_formula_matches_pairs(space):
    assert space.s_lambda_closed == s_lambda_closed_by_pairs(space)


@given(gt_spaces())
def test_closure_laws(space):
    closure = space.s_lambda_closure_table
    interior = space.s_lambda_interior_table
    for value in all_subsets(space.n):
        assert is_subset(value, closure[value])
        assert closure[closure[value]] == closure[value]
        assert closure[value] in space.s_lambda_closed
        assert interior[value] == space.complement(closure[space.complement(value)])
        for bigger in all_subsets(space.n):
            if is_subset(value, bigger):
                assert is_subset(closure[value], closure[bigger])


@given(gt_spaces())
def test_g_delta_family(space):
    g_delta = space.s_lambda_g_delta
    assert set(space.s_lambda_open) <= set(g_delta)
    assert g_delta.is_intersection_closed()


@given(gt_spaces())
def test_closed_sets_are_sg_closed(space):
    assert set(space.s_lambda_closed) <= set(space.sg_lambda_closed)


@given(gt_spaces(max_points=4))
def test_sker_is_idempotent(space):
    for value in all_subsets(space.n):
        kernel = sker(space, value)
        assert is_subset(value, kernel)
        assert sker(space, kernel) == kernel


@given(gt_spaces(max_points=4))
def test_open_families_form_a_chain(space):
    assert set(space.gamma) <= set(space.s_gamma_open)
    assert set(space.s_gamma_open) <= set(space.s_lambda_open)
    assert set(space.s_lambda_open) <= set(space.sg_lambda_open)


@given(gt_spaces(max_points=4))
def test_s_lambda_open_is_union_closed(space):
    assert space.s_lambda_open.is_union_closed()
    assert space.s_lambda_closed.is_intersection_closed()


def test_empty_intersection_count(e0, e1):
    # Y is sγ-open, so every subset has an sγ-open superset
    assert e0.empty_intersections == 0
    assert e1.empty_intersections == 0
