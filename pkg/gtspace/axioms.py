"""
Separation axioms on the sλ structure of a finite GT-space.

Every predicate is decided by exhaustive search over the sλ-open / sλ-closed
families. Where a definition asks for "some open set containing X" it is
enough to look at the inclusion-minimal ones: the closure is monotone, so a
smaller witness never does worse.

An sλ-neighbourhood of a point is an sλ-open set containing it.
"""
import logging
from itertools import combinations

from pydantic import BaseModel

from gtspace.bitset import Subset, all_subsets, is_subset, singletons
from gtspace.core import GTSpace
from gtspace.errors import EmptyArgument

logger = logging.getLogger(__name__)


class AxiomReport(BaseModel):
    T0: bool
    T1: bool
    T2: bool
    urysohn: bool
    completelyHausdorff: bool
    R0: bool
    R1: bool
    regularStrong: bool
    regularWeak: bool
    completelyRegular: bool
    T3: bool
    tychonoff: bool
    normalStrong: bool
    normalWeak: bool
    completelyNormal: bool
    T4: bool
    T5: bool
    perfectlyNormal: bool
    conditionA: bool
    closureAdditive: bool
    compact: bool
    lindelof: bool
    countablyCompact: bool
    paracompact: bool

    def lines(self) -> list[str]:
        return [f"axiom {name} {'true' if value else 'false'}" for name, value in self.model_dump().items()]


def _require_nonempty(**sets):
    for name, value in sets.items():
        if value == 0:
            raise EmptyArgument(name)


def weakly_separated(space: GTSpace, first: Subset, second: Subset) -> bool:
    """Neither set meets the sλ-closure of the other."""
    _require_nonempty(G=first, H=second)
    closure = space.s_lambda_closure_table
    return first & closure[second] == 0 and second & closure[first] == 0


def strongly_separated(space: GTSpace, first: Subset, second: Subset) -> bool:
    """Disjoint sλ-open supersets exist."""
    _require_nonempty(G=first, H=second)
    return open_separated(space, first, second)


def separated_by_closed_neighborhoods(space: GTSpace, first: Subset, second: Subset) -> bool:
    """
    Open U ⊇ G, V ⊇ H with disjoint closed P ⊇ U, Q ⊇ V. The least closed
    superset of U is its sλ-closure, so this is cl(U) ∩ cl(V) = ∅.
    """
    _require_nonempty(G=first, H=second)
    if first & second:
        return False
    return closure_separated(space, first, second)


def open_separated(space: GTSpace, first: Subset, second: Subset) -> bool:
    minimal = space.minimal_open_supersets
    return any(u & v == 0 for u in minimal[first] for v in minimal[second])


def closure_separated(space: GTSpace, first: Subset, second: Subset) -> bool:
    minimal = space.minimal_open_supersets
    closure = space.s_lambda_closure_table
    return any(closure[u] & closure[v] == 0 for u in minimal[first] for v in minimal[second])


def distinct_point_pairs(space: GTSpace):
    points = singletons(space.n)
    return [(p, q) for p in points for q in points if p != q]


def point_closed_pairs(space: GTSpace):
    """(point, closed set) pairs with the point outside the nonempty closed set."""
    return [
        (p, closed)
        for closed in space.s_lambda_closed if closed
        for p in singletons(space.n) if p & closed == 0
    ]


def disjoint_closed_pairs(space: GTSpace):
    closed = [value for value in space.s_lambda_closed if value]
    return [(a, b) for a in closed for b in closed if a & b == 0]


def weakly_separated_pairs(space: GTSpace):
    nonempty = range(1, 1 << space.n)
    return [(g, h) for g in nonempty for h in nonempty if weakly_separated(space, g, h)]


def is_t0(space: GTSpace) -> bool:
    return all(
        any(bool(member & p) != bool(member & q) for member in space.s_lambda_open)
        for p, q in combinations(singletons(space.n), 2)
    )


def is_t1(space: GTSpace) -> bool:
    """Every singleton is sλ-closed."""
    return all(p in space.s_lambda_closed for p in singletons(space.n))


def is_t1_by_points(space: GTSpace) -> bool:
    """Each of two distinct points has an open set missing the other."""
    return all(
        any(member & p and not member & q for member in space.s_lambda_open)
        for p, q in distinct_point_pairs(space)
    )


def is_t2(space: GTSpace) -> bool:
    return all(open_separated(space, p, q) for p, q in distinct_point_pairs(space))


def is_urysohn(space: GTSpace) -> bool:
    return all(closure_separated(space, p, q) for p, q in distinct_point_pairs(space))


def is_r0(space: GTSpace) -> bool:
    closure = space.s_lambda_closure_table
    return all(
        is_subset(closure[p], member)
        for member in space.s_lambda_open
        for p in singletons(space.n) if p & member
    )


def is_r1(space: GTSpace) -> bool:
    closure = space.s_lambda_closure_table
    return all(
        open_separated(space, p, q)
        for p, q in distinct_point_pairs(space) if p & closure[q] == 0
    )


def is_regular_strong(space: GTSpace) -> bool:
    return all(closure_separated(space, closed, p) for p, closed in point_closed_pairs(space))


def is_regular_weak(space: GTSpace) -> bool:
    return all(open_separated(space, p, closed) for p, closed in point_closed_pairs(space))


def is_normal_strong(space: GTSpace) -> bool:
    return all(closure_separated(space, a, b) for a, b in disjoint_closed_pairs(space))


def is_normal_weak(space: GTSpace) -> bool:
    return all(open_separated(space, a, b) for a, b in disjoint_closed_pairs(space))


def is_completely_normal(space: GTSpace) -> bool:
    return all(closure_separated(space, g, h) for g, h in weakly_separated_pairs(space))


def weak_implies_strong(space: GTSpace) -> bool:
    return all(open_separated(space, g, h) for g, h in weakly_separated_pairs(space))


def is_t3(space: GTSpace) -> bool:
    return is_t1(space) and is_regular_weak(space)


def is_t4(space: GTSpace) -> bool:
    return is_t1(space) and is_normal_weak(space)


def is_t5(space: GTSpace) -> bool:
    return is_t1(space) and weak_implies_strong(space)


def condition_a(space: GTSpace) -> bool:
    """Finite intersections of sλ-open sets are sλ-open; pairs suffice by induction."""
    return space.s_lambda_open.is_intersection_closed()


def closure_additive(space: GTSpace) -> bool:
    closure = space.s_lambda_closure_table
    return all(
        closure[e | f] == closure[e] | closure[f]
        for e in all_subsets(space.n) for f in all_subsets(space.n) if e < f
    )


def closures_union_closed(space: GTSpace) -> bool:
    """The union of two sλ-closures is again sλ-closed."""
    closures = set(space.s_lambda_closure_table)
    return all(a | b in space.s_lambda_closed for a in closures for b in closures)


def classify(space: GTSpace, cover_limit: int = 8) -> AxiomReport:
    from gtspace import covers, realfn

    t1 = is_t1(space)
    completely_regular = realfn.is_completely_regular(space)
    normal_weak = is_normal_weak(space)
    perfectly_normal, _, _ = realfn.perfectly_normal_check(space)
    compact = covers.is_compact(space, cover_limit)

    report = AxiomReport(
        T0=is_t0(space),
        T1=t1,
        T2=is_t2(space),
        urysohn=is_urysohn(space),
        completelyHausdorff=realfn.is_completely_hausdorff(space),
        R0=is_r0(space),
        R1=is_r1(space),
        regularStrong=is_regular_strong(space),
        regularWeak=is_regular_weak(space),
        completelyRegular=completely_regular,
        T3=t1 and is_regular_weak(space),
        tychonoff=t1 and completely_regular,
        normalStrong=is_normal_strong(space),
        normalWeak=normal_weak,
        completelyNormal=is_completely_normal(space),
        T4=t1 and normal_weak,
        T5=is_t5(space),
        perfectlyNormal=perfectly_normal,
        conditionA=condition_a(space),
        closureAdditive=closure_additive(space),
        compact=compact,
        lindelof=covers.is_lindelof(space, cover_limit),
        countablyCompact=covers.is_countably_compact(space, cover_limit),
        paracompact=covers.is_paracompact(space, cover_limit),
    )
    logger.debug(f"classified {space.name or space.gamma.members}")
    return report
