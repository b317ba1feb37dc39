import pytest
from hypothesis import given

from gtspace import axioms
from gtspace.axioms import (
    classify,
    separated_by_closed_neighborhoods,
    strongly_separated,
    weakly_separated,
)
from gtspace.errors import EmptyArgument
from gtspace.tests.strategies import gt_spaces


def test_weak_separation(e1, e2):
    assert weakly_separated(e1, e1.ground.subset('a'), e1.ground.subset('c'))
    assert not weakly_separated(e2, e2.ground.subset('a'), e2.ground.subset('b'))


def test_strong_separation(e0, e2):
    assert strongly_separated(e0, e0.ground.subset('a'), e0.ground.subset('b'))
    assert not strongly_separated(e2, e2.ground.subset('a'), e2.ground.subset('b'))


def test_closed_neighbourhoods(e0, e2):
    assert separated_by_closed_neighborhoods(e0, e0.ground.subset('a'), e0.ground.subset('b'))
    # a and b share every open superset in E2
    assert not separated_by_closed_neighborhoods(e2, e2.ground.subset('a'), e2.ground.subset('b'))


def test_empty_arguments_rejected(e1):
    with pytest.raises(EmptyArgument):
        weakly_separated(e1, 0, 1)
    with pytest.raises(EmptyArgument):
        strongly_separated(e1, 1, 0)
    with pytest.raises(EmptyArgument):
        separated_by_closed_neighborhoods(e1, 0, 0)


def test_indiscrete_pair_satisfies_everything(e0):
    report = classify(e0)
    assert all(report.model_dump().values())


def test_e2_is_not_t0(e2):
    report = classify(e2)
    assert not report.T0
    assert not report.T1
    assert not report.T2


def test_e1_is_t1(e1):
    report = classify(e1)
    assert report.T1
    assert 'axiom T1 true' in report.lines()


def test_report_lines_cover_every_axiom(e2):
    lines = classify(e2).lines()
    assert len(lines) == len(axioms.AxiomReport.model_fields)
    assert all(line.startswith('axiom ') and line.split()[-1] in ('true', 'false') for line in lines)


@given(gt_spaces())
def test_t1_definitions_agree(space):
    assert axioms.is_t1(space) == axioms.is_t1_by_points(space)


@given(gt_spaces())
def test_strong_forms_imply_weak_forms(space):
    if axioms.is_regular_strong(space):
        assert axioms.is_regular_weak(space)
    if axioms.is_normal_strong(space):
        assert axioms.is_normal_weak(space)
    if axioms.is_t2(space):
        assert axioms.is_t1(space)
    if axioms.is_urysohn(space):
        assert axioms.is_t2(space)


@given(gt_spaces(max_points=3))
def test_strong_separation_implies_weak(space):
    for first in range(1, 1 << space.n):
        for second in range(1, 1 << space.n):
            if strongly_separated(space, first, second):
                assert weakly_separated(space, first, second)


@given(gt_spaces(max_points=3))
def test_separation_is_symmetric(space):
    for first in range(1, 1 << space.n):
        for second in range(1, 1 << space.n):
            assert weakly_separated(space, first, second) == weakly_separated(space, second, first)
            assert strongly_separated(space, first, second) == strongly_separated(space, second, first)
