import pytest
from hypothesis import given, strategies as st

from gtspace import axioms
from gtspace.axioms import separated_by_closed_neighborhoods
from gtspace.core import make_space
from gtspace.dyadic import HALF, ONE, ZERO
from gtspace.errors import EmptyArgument, HypothesisViolated, NotDisjoint, NotGDelta, ShrinkFailed
from gtspace.explorer import enumerate_spaces
from gtspace.realfn import (
    DyadicFn,
    is_continuous,
    is_continuous_by_intervals,
    perfectly_normal_check,
    s_lambda_g_delta_family,
    separated_by_function,
    shrink,
    urysohn_construct,
    zero_set_construct,
    zero_set_is_g_delta,
)
from gtspace.tests.strategies import gt_spaces, unit_values


def test_fiber_continuity(e2):
    assert is_continuous(e2, DyadicFn((ZERO, ZERO, ONE)))
    assert not is_continuous(e2, DyadicFn((ZERO, ONE, ONE)))


def test_function_values_checked():
    with pytest.raises(ValueError):
        DyadicFn((ONE + HALF,))
    with pytest.raises(ValueError):
        DyadicFn.from_blocks(3, {0b011: ZERO})


def test_preimage_of_open_intervals():
    f = DyadicFn((ZERO, HALF, ONE))
    assert f.preimage(ZERO, ONE) == 0b010
    assert f.preimage(None, HALF) == 0b001
    assert f.preimage() == 0b111
    assert f.zero_set() == 0b001


def test_function_separation_examples(e0, e2):
    f = separated_by_function(e0, e0.ground.subset('a'), e0.ground.subset('b'))
    assert f.values == (ZERO, ONE)
    f = separated_by_function(e2, e2.ground.subset('a'), e2.ground.subset('c'))
    assert f.values == (ZERO, ZERO, ONE)
    assert separated_by_function(e2, e2.ground.subset('a'), e2.ground.subset('b')) is None


def test_function_separation_arguments(e0):
    with pytest.raises(EmptyArgument):
        separated_by_function(e0, 0, 1)
    with pytest.raises(NotDisjoint):
        separated_by_function(e0, 0b11, 0b01)


def test_shrink(discrete2, e2):
    a = discrete2.ground.subset('a')
    assert shrink(discrete2, a, a) == a
    with pytest.raises(ShrinkFailed):
        shrink(e2, e2.ground.subset('a'), e2.ground.subset('a'))


def test_urysohn_on_discrete_pair(discrete2):
    family, f = urysohn_construct(discrete2, 0b01, 0b10, 1)
    assert family.levels[HALF] == 0b01
    assert f.values == (ZERO, ONE)
    assert family.lines(discrete2) == ['V 1/2^1 {a}', 'V 1/2^0 {a}']
    assert f.lines(discrete2) == ['f a 0/2^0', 'f b 1/2^0']


def test_urysohn_family_invariants(e0):
    family, f = urysohn_construct(e0, 0b01, 0b10, 2)
    assert family.violations(e0, 0b01, 0b10) == []
    assert len(family.labels()) == 4
    assert f(0) == ZERO
    assert f(1) == ONE


def test_urysohn_hypothesis_gate(e0, e1, e2):
    with pytest.raises(NotDisjoint):
        urysohn_construct(e0, 0b11, 0b10, 1)
    with pytest.raises(HypothesisViolated) as info:
        urysohn_construct(e2, e2.ground.subset('a'), e2.ground.subset('c'), 1)
    assert info.value.hypothesis == 'A sλ-closed'
    # E1 loses conditionA: (Y-{a}) ∩ (Y-{c}) = {b,d} is not sλ-open
    with pytest.raises(HypothesisViolated) as info:
        urysohn_construct(e1, e1.ground.subset('a'), e1.ground.subset('c'), 1)
    assert info.value.hypothesis in ('normalWeak', 'conditionA')
    with pytest.raises(ValueError):
        urysohn_construct(e0, 0b01, 0b10, 0)


def test_g_delta_family(e0, e2):
    assert list(s_lambda_g_delta_family(e0)) == [0, 1, 2, 3]
    assert s_lambda_g_delta_family(e2) == e2.s_lambda_open


def test_zero_set_construct_exact_zero_set(e0):
    f = zero_set_construct(e0, 0b01, 0b10)
    assert f.zero_set() == 0b01
    assert f(1) == ONE
    assert is_continuous(e0, f)


def test_zero_set_construct_rejections(e0, e1):
    with pytest.raises(EmptyArgument):
        zero_set_construct(e0, 0, 0b10)
    with pytest.raises(HypothesisViolated):
        zero_set_construct(e1, e1.ground.subset('a'), e1.ground.subset('c'))


def test_zero_set_construct_needs_g_delta():
    for space in enumerate_spaces(3):
        if not (axioms.is_normal_weak(space) and axioms.condition_a(space)):
            continue
        for zero, one in axioms.disjoint_closed_pairs(space):
            if zero not in space.s_lambda_g_delta:
                with pytest.raises(NotGDelta):
                    zero_set_construct(space, zero, one)
                return
    pytest.skip("every sλ-closed set is sλGδ on three points under these hypotheses")


def test_perfectly_normal(e0, e2):
    assert perfectly_normal_check(e0) == (True, None, False)
    holds, failing, _ = perfectly_normal_check(e2)
    assert holds and failing is None
    single = make_space(['a'], [])
    assert perfectly_normal_check(single) == (True, None, True)


def test_discontinuous_function_is_ignored_by_g_delta_check(e2):
    assert zero_set_is_g_delta(e2, DyadicFn((ZERO, ONE, ONE)))


@given(gt_spaces(), st.data())
def test_fiber_and_interval_continuity_agree(space, data):
    values = tuple(data.draw(unit_values) for _ in range(space.n))
    f = DyadicFn(values)
    assert is_continuous(space, f) == is_continuous_by_intervals(space, f)


@given(gt_spaces(min_points=2))
def test_function_separation_gives_closed_neighbourhoods(space):
    for zero, one in axioms.disjoint_closed_pairs(space):
        f = separated_by_function(space, zero, one)
        if f is None:
            continue
        assert is_continuous(space, f)
        assert all(f(point) == ZERO for point in range(space.n) if zero >> point & 1)
        assert all(f(point) == ONE for point in range(space.n) if one >> point & 1)
        assert separated_by_closed_neighborhoods(space, zero, one)


@given(gt_spaces(min_points=2))
def test_constructions_satisfy_their_contracts(space):
    if not (axioms.is_normal_weak(space) and axioms.condition_a(space)):
        return
    for zero, one in axioms.disjoint_closed_pairs(space):
        family, f = urysohn_construct(space, zero, one, 2)
        assert family.violations(space, zero, one) == []
        if zero in space.s_lambda_g_delta:
            g = zero_set_construct(space, zero, one)
            assert g.zero_set() == zero
