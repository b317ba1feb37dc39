"""
Theorem-verification harness.

Each check instantiates one implication on every eligible set or point of a
space and yields Instances (hypothesis held?, conclusion held?). Reports are
aggregated per theorem: a theorem is vacuous when no instance met its
hypothesis, FAILED when some instance met it and missed the conclusion.
"""
from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import cached_property, partial
from itertools import combinations
from typing import Callable, Iterable, Iterator, Literal, Optional

from pydantic import BaseModel, model_validator
from tqdm import tqdm

from gtspace import axioms, covers, realfn
from gtspace.bitset import Subset, all_subsets, intersect_all, is_subset, singletons
from gtspace.core import GTSpace, subspace
from gtspace.dyadic import ONE, ZERO
from gtspace.errors import ShrinkFailed
from gtspace.spacefile import parse_witness, render_space

logger = logging.getLogger(__name__)

Status = Literal['verified', 'vacuous', 'FAILED']


class ReportWitness(BaseModel):
    space: str
    sets: dict[str, str] = {}
    note: str = ""

    def lines(self) -> list[str]:
        out = [f"  # {self.note}"] if self.note else []
        out.extend(f"  {line}" for line in self.space.splitlines())
        out.extend(f"  set {name} {value}" for name, value in self.sets.items())
        return out


class TheoremReport(BaseModel):
    id: str
    hypotheses_held: bool
    conclusion_held: bool
    status: Status
    witness: Optional[ReportWitness] = None
    instances: int = 0

    @model_validator(mode='after')
    def check_status(self):
        expected = decide_status(self.hypotheses_held, self.conclusion_held)
        if self.status != expected:
            raise ValueError(f"Error: status {self.status} contradicts hypotheses/conclusion ({expected})")
        return self

    def lines(self) -> list[str]:
        out = [f"theorem {self.id} {self.status}"]
        if self.witness is not None:
            out.extend(self.witness.lines())
        return out


def decide_status(hypotheses_held: bool, conclusion_held: bool) -> Status:
    if not hypotheses_held:
        return 'vacuous'
    return 'verified' if conclusion_held else 'FAILED'


@dataclass(frozen=True)
class Instance:
    hypothesis: bool
    conclusion: bool
    sets: dict = field(default_factory=dict)
    note: str = ""


class Context:
    """A space plus the derived data every check shares."""

    def __init__(self, space: GTSpace, depth: int = 3, cover_limit: int = covers.DEFAULT_COVER_LIMIT):
        self.space = space
        self.depth = depth
        self.cover_limit = cover_limit
        self.cl = space.s_lambda_closure_table
        self.sint = space.s_lambda_interior_table
        self.opens = list(space.s_lambda_open)
        self.closed = list(space.s_lambda_closed)
        self.sg_opens = list(space.sg_lambda_open)
        self.sg_closed = list(space.sg_lambda_closed)
        self.points = singletons(space.n)
        self.subsets = list(all_subsets(space.n))

    @cached_property
    def report(self) -> axioms.AxiomReport:
        return axioms.classify(self.space, self.cover_limit)

    @cached_property
    def subspaces(self) -> dict[Subset, GTSpace]:
        return {value: subspace(self.space, value) for value in self.subsets if value}

    @cached_property
    def closures_union_closed(self) -> bool:
        return axioms.closures_union_closed(self.space)

    def between(self, family: Iterable[Subset], low: Subset, high: Subset) -> bool:
        """Some E in family with low ⊆ E and cl(E) ⊆ high."""
        return any(is_subset(low, e) and is_subset(self.cl[e], high) for e in family)


# --- statements of the regularity equivalence -------------------------------

def _minimal_sg_supersets(ctx: Context, value: Subset) -> list[Subset]:
    return _minimal([f for f in ctx.sg_opens if is_subset(value, f)])


def regularity_statements(ctx: Context) -> list[bool]:
    space, cl = ctx.space, ctx.cl
    minimal = space.minimal_open_supersets
    s1 = axioms.is_regular_strong(space)
    s2 = all(
        ctx.between(ctx.opens, y, g)
        for g in ctx.opens for y in ctx.points if y & g
    )
    s3 = all(
        intersect_all([cl[f] for f in ctx.opens if is_subset(p, f)], space.n) == p
        for p in ctx.closed
    )
    s4 = all(
        any(d & f and is_subset(cl[f], e) for f in ctx.opens)
        for d in ctx.subsets for e in ctx.opens if d & e
    )
    s5 = all(
        any(d & m and m & n == 0 for n in minimal[p] for m in ctx.opens)
        for d in ctx.subsets if d for p in ctx.closed if d & p == 0
    )
    sg_minimal = {p: _minimal_sg_supersets(ctx, p) for p in ctx.closed}
    s6 = all(
        any(y & e and e & f == 0 for f in sg_minimal[p] for e in ctx.opens)
        for p in ctx.closed for y in ctx.points if y & p == 0
    )
    # nonempty D only: with D = ∅ the requirement D ∩ E ≠ ∅ can never be met
    s7 = all(
        any(d & e and e & f == 0 for f in sg_minimal[p] for e in ctx.opens)
        for d in ctx.subsets if d for p in ctx.closed if d & p == 0
    )
    s8 = axioms.is_regular_weak(space)
    return [s1, s2, s3, s4, s5, s6, s7, s8]


def normality_statements(ctx: Context) -> list[bool]:
    space = ctx.space
    s1 = axioms.is_normal_strong(space)
    s2 = all(
        any(is_subset(a, e) and is_subset(b, f) and a | b == space.full for a in ctx.closed for b in ctx.closed)
        for e in ctx.opens for f in ctx.opens if e | f == space.full
    )
    s3 = all(ctx.between(ctx.opens, a, g) for a in ctx.closed for g in ctx.opens if is_subset(a, g))
    s4 = axioms.is_normal_weak(space)
    return [s1, s2, s3, s4]


def normality_sg_statements(ctx: Context) -> list[bool]:
    cl, sint = ctx.cl, ctx.sint
    s1 = axioms.is_normal_strong(ctx.space)
    s2 = all(ctx.between(ctx.sg_opens, p, g) for p in ctx.closed for g in ctx.opens if is_subset(p, g))
    s3 = all(ctx.between(ctx.sg_opens, p, sint[g]) for p in ctx.closed for g in ctx.sg_opens if is_subset(p, g))
    s4 = all(ctx.between(ctx.opens, cl[p], g) for p in ctx.sg_closed for g in ctx.opens if is_subset(p, g))
    s5 = all(ctx.between(ctx.opens, p, sint[g]) for p in ctx.closed for g in ctx.sg_opens if is_subset(p, g))
    s6 = all(ctx.between(ctx.sg_opens, cl[p], g) for p in ctx.sg_closed for g in ctx.opens if is_subset(p, g))
    return [s1, s2, s3, s4, s5, s6]


def _equivalence(statements: list[bool]) -> list[Instance]:
    note = "statements " + " ".join(f"{i}={'true' if s else 'false'}" for i, s in enumerate(statements, start=1))
    return [Instance(True, len(set(statements)) == 1, note=note)]


# --- checks ---------------------------------------------------------------

def _implication(hypothesis: Callable[[Context], bool], conclusion: Callable[[Context], bool]):
    def check(ctx: Context) -> list[Instance]:
        held = hypothesis(ctx)
        return [Instance(held, conclusion(ctx) if held else True)]
    return check


def _flag(name: str) -> Callable[[Context], bool]:
    return lambda ctx: getattr(ctx.report, name)


def _both(*names: str) -> Callable[[Context], bool]:
    return lambda ctx: all(getattr(ctx.report, name) for name in names)


def check_t2_iff(ctx: Context) -> list[Instance]:
    r = ctx.report
    return [Instance(True, r.T2 == (r.R1 and r.T1))]


def check_closed_subsets_compact(ctx: Context, predicate: str) -> list[Instance]:
    if not getattr(ctx.report, predicate):
        return [Instance(False, True)]
    return [
        Instance(True, _subspace_has(ctx, d, predicate), {'D': d})
        for d in ctx.closed if d
    ]


def check_sg_closed_subsets(ctx: Context, predicate: str) -> list[Instance]:
    if not getattr(ctx.report, predicate):
        return [Instance(False, True)]
    instances = []
    for d in ctx.sg_closed:
        if not d:
            continue
        traced = covers.sg_closed_cover_trace(ctx.space, d) is not None
        instances.append(Instance(True, traced and _subspace_has(ctx, d, predicate), {'D': d}))
    return instances


def _subspace_has(ctx: Context, value: Subset, predicate: str) -> bool:
    sub = ctx.subspaces[value]
    checks = {
        'compact': covers.is_compact,
        'paracompact': covers.is_paracompact,
        'lindelof': covers.is_lindelof,
        'countablyCompact': covers.is_countably_compact,
    }
    return checks[predicate](sub, ctx.cover_limit)


def _additivity_when(ctx: Context, held: bool) -> list[Instance]:
    failing = _additive_pair(ctx) if held else None
    return [Instance(held, failing is None, failing or {})]


def check_closure_union_additive(ctx: Context) -> list[Instance]:
    return _additivity_when(ctx, ctx.closures_union_closed)


def check_condition_a_closure_union(ctx: Context) -> list[Instance]:
    return _additivity_when(ctx, ctx.report.conditionA)


def _additive_pair(ctx: Context) -> Optional[dict]:
    cl = ctx.cl
    for e, f in combinations(ctx.subsets, 2):
        if cl[e | f] != cl[e] | cl[f]:
            return {'E': e, 'F': f}
    return None


def check_compact_subset_sg_closed(ctx: Context) -> list[Instance]:
    held = ctx.report.regularStrong and ctx.closures_union_closed
    if not held:
        return [Instance(False, True)]
    return [
        Instance(True, d in ctx.space.sg_lambda_closed, {'D': d})
        for d in ctx.subsets
        if d and _subspace_has(ctx, d, 'compact')
    ]


def _nonempty_disjoint_pairs(ctx: Context) -> Iterator[tuple[Subset, Subset]]:
    for a in ctx.subsets:
        for b in ctx.subsets:
            if a and b and a & b == 0:
                yield a, b


def check_function_separation_neighbourhoods(ctx: Context) -> list[Instance]:
    instances = []
    for a, b in _nonempty_disjoint_pairs(ctx):
        if realfn.separated_by_function(ctx.space, a, b) is not None:
            instances.append(Instance(True, axioms.separated_by_closed_neighborhoods(ctx.space, a, b), {'A': a, 'B': b}))
    return instances or [Instance(False, True)]


def check_function_separated_pairs_normal(ctx: Context) -> list[Instance]:
    held = realfn.closed_pairs_function_separated(ctx.space)
    return [Instance(held, ctx.report.normalStrong if held else True)]


def check_normal_function_separation(ctx: Context) -> list[Instance]:
    if not (ctx.report.normalWeak and ctx.report.conditionA):
        return [Instance(False, True)]
    return [
        Instance(True, realfn.separated_by_function(ctx.space, a, b) is not None, {'A': a, 'B': b})
        for a, b in axioms.disjoint_closed_pairs(ctx.space)
    ] or [Instance(True, True)]


def _dyadic_instances(ctx: Context, judge: Callable) -> list[Instance]:
    if not (ctx.report.normalWeak and ctx.report.conditionA):
        return [Instance(False, True)]
    instances = []
    for a, b in axioms.disjoint_closed_pairs(ctx.space):
        try:
            family, f = realfn.urysohn_construct(ctx.space, a, b, ctx.depth)
        except ShrinkFailed as e:
            instances.append(Instance(True, False, {'A': a, 'B': b}, note=str(e)))
            continue
        ok, note = judge(ctx, a, b, family, f)
        instances.append(Instance(True, ok, {'A': a, 'B': b}, note=note))
    return instances or [Instance(True, True)]


def _judge_dyadic(ctx: Context, a, b, family, f):
    problems = family.violations(ctx.space, a, b)
    if any(f(point) != ZERO for point in range(ctx.space.n) if a >> point & 1):
        problems.append("f(A) ≠ {0}")
    if any(f(point) != ONE for point in range(ctx.space.n) if b >> point & 1):
        problems.append("f(B) ≠ {1}")
    return not problems, "; ".join(problems)


def _judge_continuous(ctx: Context, a, b, family, f):
    ok = realfn.is_continuous(ctx.space, f)
    return ok, "" if ok else "finite-depth function has a fiber that is not sλ-open"


def check_dyadic_construction(ctx: Context) -> list[Instance]:
    return _dyadic_instances(ctx, _judge_dyadic)


def check_dyadic_continuity(ctx: Context) -> list[Instance]:
    return _dyadic_instances(ctx, _judge_continuous)


def check_gdelta_zero_set(ctx: Context) -> list[Instance]:
    if not (ctx.report.normalWeak and ctx.report.conditionA):
        return [Instance(False, True)]
    instances = []
    for m, n in axioms.disjoint_closed_pairs(ctx.space):
        if m not in ctx.space.s_lambda_g_delta:
            continue
        try:
            f = realfn.zero_set_construct(ctx.space, m, n, ctx.depth)
        except ShrinkFailed as e:
            instances.append(Instance(True, False, {'M': m, 'N': n}, note=str(e)))
            continue
        ok = f.zero_set() == m and all(f(point) == ONE for point in range(ctx.space.n) if n >> point & 1)
        instances.append(Instance(True, ok, {'M': m, 'N': n}))
    return instances or [Instance(True, True)]


def check_zero_set_g_delta(ctx: Context) -> list[Instance]:
    """A continuous f that is 0 exactly on M forces M to be sλGδ."""
    instances = []
    for m, n in axioms.disjoint_closed_pairs(ctx.space):
        f = realfn.DyadicFn.from_blocks(ctx.space.n, {m: ZERO, ctx.space.complement(m): ONE})
        if realfn.is_continuous(ctx.space, f):
            instances.append(Instance(True, realfn.zero_set_is_g_delta(ctx.space, f), {'M': m, 'N': n}))
    return instances or [Instance(False, True)]


def check_completely_hausdorff_consequences(ctx: Context) -> list[Instance]:
    if not ctx.report.completelyHausdorff:
        return [Instance(False, True)]
    space, cl = ctx.space, ctx.cl
    instances = []
    for p, q in axioms.distinct_point_pairs(space):
        ok = any(
            p & e and q & f and is_subset(cl[f], space.complement(cl[e]))
            for e in ctx.opens for f in ctx.sg_opens
        )
        instances.append(Instance(True, ok, {'p': p, 'q': q}))
    for d in ctx.subsets:
        for q in ctx.points:
            if d and d & q == 0:
                ok = any(d & e and q & f and e & f == 0 for e in ctx.sg_opens for f in ctx.opens)
                instances.append(Instance(True, ok, {'D': d, 'q': q}))
    return instances


def _closed_points(ctx: Context) -> list[Subset]:
    return [y for y in ctx.points if y in ctx.space.s_lambda_closed]


def _point_sg_shrink(ctx: Context) -> bool:
    sint = ctx.sint
    return all(
        ctx.between(ctx.sg_opens, y, sint[g])
        for y in _closed_points(ctx) for g in ctx.sg_opens if y & g
    )


def check_completely_regular_point_shrink(ctx: Context) -> list[Instance]:
    held = ctx.report.completelyRegular
    return [Instance(held, _point_sg_shrink(ctx) if held else True)]


def check_point_shrink_interior(ctx: Context) -> list[Instance]:
    held = _point_sg_shrink(ctx)
    if not held:
        return [Instance(False, True)]
    ok = all(
        any(y & ctx.sint[e] and is_subset(ctx.cl[e], g) for e in ctx.sg_opens)
        for y in _closed_points(ctx) for g in ctx.opens if y & g
    )
    return [Instance(True, ok)]


def _sg_closed_point_shrink(ctx: Context, family: list[Subset]) -> bool:
    sg_closed = ctx.space.sg_lambda_closed
    return all(
        ctx.between(family, ctx.cl[y], g)
        for y in ctx.points if y in sg_closed for g in ctx.opens if y & g
    )


def check_sg_closed_point_sg_shrink(ctx: Context) -> list[Instance]:
    held = ctx.report.normalStrong
    return [Instance(held, _sg_closed_point_shrink(ctx, ctx.sg_opens) if held else True)]


def check_sg_closed_point_open_shrink(ctx: Context) -> list[Instance]:
    held = ctx.report.normalStrong
    return [Instance(held, _sg_closed_point_shrink(ctx, ctx.opens) if held else True)]


def check_completely_normal_subspaces(ctx: Context) -> list[Instance]:
    if not ctx.report.completelyNormal:
        return [Instance(False, True)]
    return [
        Instance(True, axioms.is_normal_weak(sub), {'S': value})
        for value, sub in ctx.subspaces.items()
    ]


def _all_subspaces_normal(ctx: Context) -> bool:
    return all(axioms.is_normal_strong(sub) for sub in ctx.subspaces.values())


def check_subspaces_normal_weak_strong(ctx: Context) -> list[Instance]:
    held = ctx.report.conditionA and _all_subspaces_normal(ctx)
    return [Instance(held, axioms.weak_implies_strong(ctx.space) if held else True)]


def check_subspaces_closed_normal(ctx: Context) -> list[Instance]:
    held = (
        ctx.report.conditionA
        and all(value in ctx.space.s_lambda_closed for value in ctx.subspaces)
        and _all_subspaces_normal(ctx)
    )
    return [Instance(held, ctx.report.completelyNormal if held else True)]


def check_t5_subspaces_t4(ctx: Context) -> list[Instance]:
    if not ctx.report.T5:
        return [Instance(False, True)]
    return [Instance(True, axioms.is_t4(sub), {'S': value}) for value, sub in ctx.subspaces.items()]


def check_sublevel_sets_open(ctx: Context) -> list[Instance]:
    instances = []
    for a, b in _nonempty_disjoint_pairs(ctx):
        f = realfn.separated_by_function(ctx.space, a, b)
        if f is None:
            continue
        ok = all(f.preimage(None, value) in ctx.space.s_lambda_open for value in set(f.values) | {ONE})
        instances.append(Instance(True, ok, {'A': a, 'B': b}))
    return instances or [Instance(False, True)]


def check_perfectly_normal_gdelta(ctx: Context) -> list[Instance]:
    held = (
        ctx.report.perfectlyNormal
        and ctx.report.conditionA
        and all(p in ctx.space.s_lambda_g_delta for p in ctx.closed)
    )
    return [Instance(held, axioms.weak_implies_strong(ctx.space) if held else True)]


def _minimal(values: list[Subset]) -> list[Subset]:
    return [v for v in values if not any(w != v and is_subset(w, v) for w in values)]


def _nested_separation(ctx: Context, a: Subset, b: Subset) -> bool:
    """sg-open U ⊇ A, V ⊇ B and open E, F with cl U ⊆ E, cl E ∩ cl V = ∅,
    cl V ⊆ F, cl F ∩ cl U = ∅."""
    cl, minimal = ctx.cl, ctx.space.minimal_open_supersets
    us = _minimal([u for u in ctx.sg_opens if is_subset(a, u)])
    vs = _minimal([v for v in ctx.sg_opens if is_subset(b, v)])
    for u in us:
        for v in vs:
            has_e = any(cl[e] & cl[v] == 0 for e in minimal[cl[u]])
            has_f = any(cl[f] & cl[u] == 0 for f in minimal[cl[v]])
            if has_e and has_f:
                return True
    return False


def _statement_ii(ctx: Context) -> bool:
    return all(_nested_separation(ctx, g, h) for g, h in axioms.weakly_separated_pairs(ctx.space))


def _statement_iii(ctx: Context) -> bool:
    def separable(a, b):
        return any(
            is_subset(a, p) and is_subset(b, q) and a & q == 0 and b & p == 0
            for p in ctx.closed for q in ctx.closed
        )
    return all(
        _nested_separation(ctx, a, b)
        for a, b in _nonempty_disjoint_pairs(ctx) if separable(a, b)
    )


def _statement_iv(ctx: Context) -> bool:
    return all(ctx.between(ctx.sg_opens, p, g) for p in ctx.closed for g in ctx.opens if is_subset(p, g))


def check_completely_normal_characterization(ctx: Context) -> list[Instance]:
    ii = _statement_ii(ctx)
    return [
        Instance(ctx.report.completelyNormal, ii if ctx.report.completelyNormal else True, note="(i) ⇒ (ii)"),
        Instance(ii, _statement_iii(ctx) if ii else True, note="(ii) ⇒ (iii)"),
        Instance(ii, _statement_iv(ctx) if ii else True, note="(ii) ⇒ (iv)"),
    ]


def check_sg_open_characterization(ctx: Context) -> list[Instance]:
    space = ctx.space
    instances = []
    for d in ctx.subsets:
        by_closed = all(is_subset(p, ctx.sint[d]) for p in ctx.closed if is_subset(p, d))
        instances.append(Instance(True, by_closed == (d in space.sg_lambda_open), {'D': d}))
    return instances


def check_strong_implies_weak(ctx: Context) -> list[Instance]:
    instances = []
    for g, h in _nonempty_disjoint_pairs(ctx):
        if axioms.strongly_separated(ctx.space, g, h):
            instances.append(Instance(True, axioms.weakly_separated(ctx.space, g, h), {'G': g, 'H': h}))
    return instances or [Instance(False, True)]


def check_compact_fip(ctx: Context) -> list[Instance]:
    by_covers = covers.subcover_compact(ctx.space, ctx.cover_limit)
    by_fip = covers.fip_compact(ctx.space, ctx.cover_limit)
    return [Instance(True, by_covers == by_fip)]


def check_t1_characterization(ctx: Context) -> list[Instance]:
    return [Instance(True, axioms.is_t1(ctx.space) == axioms.is_t1_by_points(ctx.space))]


CHECKS: list[tuple[str, Callable[[Context], list[Instance]]]] = [
    ('r1-implies-r0', _implication(_flag('R1'), _flag('R0'))),
    ('regular-implies-r1', _implication(_flag('regularStrong'), _flag('R1'))),
    ('t2-iff-r1-and-t1', check_t2_iff),
    ('t1-singleton-characterization', check_t1_characterization),
    ('regular-equivalence', lambda ctx: _equivalence(regularity_statements(ctx))),
    ('compact-fip-equivalence', check_compact_fip),
    ('closed-subset-of-compact-is-compact', partial(check_closed_subsets_compact, predicate='compact')),
    ('closed-subset-of-paracompact-is-paracompact', partial(check_closed_subsets_compact, predicate='paracompact')),
    ('closed-subset-of-lindelof-is-lindelof', partial(check_closed_subsets_compact, predicate='lindelof')),
    ('closed-subset-of-countably-compact', partial(check_closed_subsets_compact, predicate='countablyCompact')),
    ('sg-closed-subset-of-compact-is-compact', partial(check_sg_closed_subsets, predicate='compact')),
    ('sg-closed-subset-of-paracompact-is-paracompact', partial(check_sg_closed_subsets, predicate='paracompact')),
    ('sg-closed-subset-of-lindelof-is-lindelof', partial(check_sg_closed_subsets, predicate='lindelof')),
    ('sg-closed-subset-of-countably-compact', partial(check_sg_closed_subsets, predicate='countablyCompact')),
    ('closure-union-additive', check_closure_union_additive),
    ('compact-subset-of-regular-is-sg-closed', check_compact_subset_sg_closed),
    ('normal-equivalence', lambda ctx: _equivalence(normality_statements(ctx))),
    ('normal-sg-equivalence', lambda ctx: _equivalence(normality_sg_statements(ctx))),
    ('condition-a-closure-union', check_condition_a_closure_union),
    ('paracompact-hausdorff-normal', _implication(_both('paracompact', 'T2', 'conditionA'), _flag('normalStrong'))),
    ('function-separation-closed-neighbourhoods', check_function_separation_neighbourhoods),
    ('function-separated-pairs-normal', check_function_separated_pairs_normal),
    ('normal-condition-a-function-separation', check_normal_function_separation),
    ('dyadic-construction', check_dyadic_construction),
    ('dyadic-function-continuous', check_dyadic_continuity),
    ('completely-hausdorff-urysohn', _implication(_flag('completelyHausdorff'), _flag('urysohn'))),
    ('urysohn-hausdorff', _implication(_flag('urysohn'), _flag('T2'))),
    ('urysohn-normal-completely-hausdorff',
     _implication(_both('urysohn', 'normalStrong', 'conditionA'), _flag('completelyHausdorff'))),
    ('completely-hausdorff-consequences', check_completely_hausdorff_consequences),
    ('regular-t1-urysohn', _implication(_both('regularStrong', 'T1'), _flag('urysohn'))),
    ('t4-condition-a-tychonoff', _implication(_both('T4', 'conditionA'), _flag('tychonoff'))),
    ('tychonoff-completely-regular', _implication(_flag('tychonoff'), _flag('completelyRegular'))),
    ('completely-regular-regular', _implication(_flag('completelyRegular'), _flag('regularStrong'))),
    ('tychonoff-t3', _implication(_flag('tychonoff'), _flag('T3'))),
    ('tychonoff-completely-hausdorff', _implication(_flag('tychonoff'), _flag('completelyHausdorff'))),
    ('regular-normal-completely-regular',
     _implication(_both('regularStrong', 'normalStrong', 'conditionA'), _flag('completelyRegular'))),
    ('completely-regular-point-shrink', check_completely_regular_point_shrink),
    ('point-shrink-interior', check_point_shrink_interior),
    ('sg-closed-point-sg-shrink', check_sg_closed_point_sg_shrink),
    ('sg-closed-point-open-shrink', check_sg_closed_point_open_shrink),
    ('completely-normal-subspaces-normal', check_completely_normal_subspaces),
    ('subspaces-normal-weak-strong', check_subspaces_normal_weak_strong),
    ('subspaces-closed-normal-completely-normal', check_subspaces_closed_normal),
    ('completely-normal-normal', _implication(_flag('completelyNormal'), _flag('normalStrong'))),
    ('t5-t4', _implication(_flag('T5'), _flag('T4'))),
    ('t5-subspaces-t4', check_t5_subspaces_t4),
    ('perfectly-normal-normal', _implication(_flag('perfectlyNormal'), _flag('normalStrong'))),
    ('sublevel-sets-open', check_sublevel_sets_open),
    ('gdelta-zero-set', check_gdelta_zero_set),
    ('zero-set-is-gdelta', check_zero_set_g_delta),
    ('perfectly-normal-gdelta-strong', check_perfectly_normal_gdelta),
    ('completely-normal-characterization', check_completely_normal_characterization),
    ('sg-open-characterization', check_sg_open_characterization),
    ('strong-implies-weak', check_strong_implies_weak),
]

THEOREM_IDS = [theorem_id for theorem_id, _ in CHECKS]
CHECKS_BY_ID = dict(CHECKS)


def _witness(space: GTSpace, instance: Instance) -> ReportWitness:
    return ReportWitness(
        space=render_space(space),
        sets={name: space.render(value) for name, value in instance.sets.items()},
        note=instance.note,
    )


def witness_key(space: GTSpace) -> tuple:
    """Fewest open sets first, then the member tuple."""
    return len(space.gamma), space.gamma.members


def _aggregate(theorem_id: str, results: Iterable[tuple[GTSpace, list[Instance]]]) -> TheoremReport:
    hypotheses_held = False
    conclusion_held = True
    failure = None
    count = 0
    for space, instances in results:
        for instance in instances:
            if not instance.hypothesis:
                continue
            hypotheses_held = True
            count += 1
            if not instance.conclusion:
                conclusion_held = False
                if failure is None or witness_key(space) < witness_key(failure[0]):
                    failure = (space, instance)
    status = decide_status(hypotheses_held, conclusion_held)
    if status == 'FAILED':
        logger.warning(f"theorem {theorem_id} FAILED")
    return TheoremReport(
        id=theorem_id,
        hypotheses_held=hypotheses_held,
        conclusion_held=conclusion_held,
        status=status,
        witness=None if failure is None else _witness(*failure),
        instances=count,
    )


def _instances_for(space: GTSpace, depth: int, cover_limit: int) -> list[list[Instance]]:
    ctx = Context(space, depth, cover_limit)
    return [check(ctx) for _, check in CHECKS]


def check_space(space: GTSpace, theorem_id: str, depth: int = 3,
                cover_limit: int = covers.DEFAULT_COVER_LIMIT) -> list[Instance]:
    if theorem_id not in CHECKS_BY_ID:
        raise ValueError(f"Error: unknown theorem '{theorem_id}'")
    return CHECKS_BY_ID[theorem_id](Context(space, depth, cover_limit))


def replay_failure(text: str, theorem_id: str, depth: int = 3,
                   cover_limit: int = covers.DEFAULT_COVER_LIMIT) -> bool:
    """Re-run one check on a printed witness block; True when the named sets still fail it."""
    space, sets = parse_witness(text)
    return any(
        instance.hypothesis and not instance.conclusion and instance.sets == sets
        for instance in check_space(space, theorem_id, depth, cover_limit)
    )


def verify_theorems(space: GTSpace, depth: int = 3, cover_limit: int = covers.DEFAULT_COVER_LIMIT) -> list[TheoremReport]:
    per_check = _instances_for(space, depth, cover_limit)
    return [
        _aggregate(theorem_id, [(space, instances)])
        for (theorem_id, _), instances in zip(CHECKS, per_check)
    ]


def verify_population(
    spaces: list[GTSpace],
    depth: int = 3,
    cover_limit: int = covers.DEFAULT_COVER_LIMIT,
    workers: int = 1,
    progress: bool = False,
) -> list[TheoremReport]:
    """Aggregate every theorem over `spaces`; results keep the order of `spaces`."""
    work = partial(_instances_for, depth=depth, cover_limit=cover_limit)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            results = list(tqdm(executor.map(work, spaces, chunksize=16), total=len(spaces),
                                desc="Verifying", disable=not progress))
    else:
        results = [work(space) for space in tqdm(spaces, desc="Verifying", disable=not progress)]
    logger.info(f"verified {len(spaces)} spaces")

    return [
        _aggregate(theorem_id, [(space, per_check[index]) for space, per_check in zip(spaces, results)])
        for index, (theorem_id, _) in enumerate(CHECKS)
    ]
