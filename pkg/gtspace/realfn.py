"""
Finite-range [0,1]-valued functions on a GT-space, with exact dyadic values.

A function with finite range is sλ-continuous exactly when each fiber f⁻¹(v)
is sλ-open: every real open set pulls back to a union of fibers (a small
interval isolates each value) and the sλ-open family is closed under unions.
`is_continuous_by_intervals` checks the interval definition directly and is
kept as the independent route for tests.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Optional

from gtspace.axioms import condition_a, disjoint_closed_pairs, distinct_point_pairs, is_normal_weak, point_closed_pairs
from gtspace.bitset import Subset, count_bits, is_subset, iter_indexes
from gtspace.core import GTSpace, SetFamily
from gtspace.dyadic import HALF, ONE, ZERO, Dyadic
from gtspace.errors import EmptyArgument, HypothesisViolated, NotDisjoint, NotGDelta, ShrinkFailed

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DyadicFn:
    values: tuple[Dyadic, ...]

    def __post_init__(self):
        for value in self.values:
            if value < ZERO or value > ONE:
                raise ValueError(f"Error: function value {value} outside [0,1]")

    @classmethod
    def from_blocks(cls, n: int, blocks: dict[Subset, Dyadic]) -> DyadicFn:
        values = [None] * n
        for block, value in blocks.items():
            for point in iter_indexes(block):
                values[point] = value
        if any(value is None for value in values):
            raise ValueError("Error: blocks do not cover every point")
        return cls(tuple(values))

    def __call__(self, point: int) -> Dyadic:
        return self.values[point]

    def preimage(self, low: Optional[Dyadic] = None, high: Optional[Dyadic] = None) -> Subset:
        """Points whose value lies in the open interval (low, high); None is unbounded."""
        mask = 0
        for point, value in enumerate(self.values):
            if (low is None or low < value) and (high is None or value < high):
                mask |= 1 << point
        return mask

    def fiber(self, value: Dyadic) -> Subset:
        return sum(1 << point for point, v in enumerate(self.values) if v == value)

    def fibers(self) -> list[tuple[Dyadic, Subset]]:
        return [(value, self.fiber(value)) for value in sorted(set(self.values))]

    def zero_set(self) -> Subset:
        return self.fiber(ZERO)

    def lines(self, space: GTSpace) -> list[str]:
        return [f"f {label} {value.render()}" for label, value in zip(space.ground.labels, self.values)]


@dataclass
class DyadicFamily:
    """V(q) for the proper dyadic labels q = r/2^depth, plus V(1) = Y - B."""
    depth: int
    levels: dict[Dyadic, Subset] = field(default_factory=dict)

    def labels(self) -> list[Dyadic]:
        return sorted(self.levels)

    def violations(self, space: GTSpace, lower: Subset, upper: Subset) -> list[str]:
        closure = space.s_lambda_closure_table
        outside = space.complement(upper)
        found = []
        labels = self.labels()
        for label in labels:
            if not is_subset(lower, self.levels[label]):
                found.append(f"(a) A ⊄ V({label})")
            if label < ONE and not is_subset(closure[self.levels[label]], outside):
                found.append(f"(b) cl V({label}) ⊄ Y-B")
        for position, small in enumerate(labels):
            for big in labels[position + 1:]:
                if not is_subset(closure[self.levels[small]], self.levels[big]):
                    found.append(f"(c) cl V({small}) ⊄ V({big})")
        return found

    def lines(self, space: GTSpace) -> list[str]:
        return [f"V {label.render()} {space.render(self.levels[label])}" for label in self.labels()]


def is_continuous(space: GTSpace, f: DyadicFn) -> bool:
    return all(fiber in space.s_lambda_open for _, fiber in f.fibers())


def is_continuous_by_intervals(space: GTSpace, f: DyadicFn) -> bool:
    """Preimages of open intervals whose ends are values, midpoints or unbounded."""
    values = sorted(set(f.values))
    ends: list[Optional[Dyadic]] = [None] + values
    ends += [(a + b).halve() for a, b in zip(values, values[1:])]
    return all(
        f.preimage(low, high) in space.s_lambda_open
        for low in ends for high in ends
    )


def _require_pair(space: GTSpace, first: Subset, second: Subset, names=('A', 'B')):
    if first == 0:
        raise EmptyArgument(names[0])
    if second == 0:
        raise EmptyArgument(names[1])
    if first & second:
        raise NotDisjoint(space.render(first), space.render(second))


def separated_by_function(space: GTSpace, zero: Subset, one: Subset) -> Optional[DyadicFn]:
    """
    A continuous f with f = 0 on `zero` and f = 1 on `one`, or None.

    Extra fibers can always be merged into a single 1/2 fiber, so it is enough
    to search open Z ⊇ A, O ⊇ B with Z ∩ O = ∅ and Y - Z - O open.
    """
    _require_pair(space, zero, one)
    opens = space.s_lambda_open
    for low in opens.supersets_of(zero):
        for high in opens.supersets_of(one):
            if low & high:
                continue
            rest = space.full & ~(low | high)
            if rest not in opens:
                continue
            blocks = {low: ZERO, high: ONE}
            if rest:
                blocks[rest] = HALF
            return DyadicFn.from_blocks(space.n, blocks)
    return None


def is_completely_hausdorff(space: GTSpace) -> bool:
    return all(separated_by_function(space, p, q) is not None for p, q in distinct_point_pairs(space))


def is_completely_regular(space: GTSpace) -> bool:
    return all(separated_by_function(space, p, closed) is not None for p, closed in point_closed_pairs(space))


def closed_pairs_function_separated(space: GTSpace) -> bool:
    return all(separated_by_function(space, a, b) is not None for a, b in disjoint_closed_pairs(space))


def shrink(space: GTSpace, inner: Subset, outer: Subset) -> Subset:
    """Open E with inner ⊆ E ⊆ cl(E) ⊆ outer; the one with the smallest closure wins."""
    closure = space.s_lambda_closure_table
    candidates = [
        member for member in space.s_lambda_open.supersets_of(inner)
        if is_subset(closure[member], outer)
    ]
    if not candidates:
        raise ShrinkFailed(space.render(inner), space.render(outer))
    chosen = min(candidates, key=lambda member: (count_bits(closure[member]), closure[member], member))
    logger.debug(f"shrink {space.render(inner)} into {space.render(outer)}: {space.render(chosen)}")
    return chosen


def _check_construction_hypotheses(space: GTSpace, first: Subset, second: Subset, names: tuple[str, str]):
    _require_pair(space, first, second, names)
    for name, value in zip(names, (first, second)):
        if value not in space.s_lambda_closed:
            raise HypothesisViolated(f"{name} sλ-closed")
    if not is_normal_weak(space):
        raise HypothesisViolated("normalWeak")
    if not condition_a(space):
        raise HypothesisViolated("conditionA")


def urysohn_construct(space: GTSpace, lower: Subset, upper: Subset, depth: int) -> tuple[DyadicFamily, DyadicFn]:
    if depth < 1:
        raise ValueError(f"Error: depth must be positive, got {depth}")
    _check_construction_hypotheses(space, lower, upper, ('A', 'B'))
    return _urysohn_levels(space, lower, upper, depth)


def _urysohn_levels(space: GTSpace, lower: Subset, upper: Subset, depth: int) -> tuple[DyadicFamily, DyadicFn]:
    closure = space.s_lambda_closure_table
    family = DyadicFamily(depth)
    family.levels[ONE] = space.complement(upper)
    family.levels[HALF] = shrink(space, lower, family.levels[ONE])

    for level in range(1, depth):
        for j in range(1 << level):
            below = lower if j == 0 else closure[family.levels[Dyadic(j, level)]]
            above = family.levels[Dyadic(j + 1, level)]
            family.levels[Dyadic(2 * j + 1, level + 1)] = shrink(space, below, above)

    smallest = Dyadic(1, depth)
    labels = family.labels()
    values = []
    for point in range(space.n):
        bit = 1 << point
        if family.levels[smallest] & bit:
            values.append(ZERO)
            continue
        values.append(next((label for label in labels if family.levels[label] & bit), ONE))
    return family, DyadicFn(tuple(values))


def s_lambda_g_delta_family(space: GTSpace) -> SetFamily:
    return space.s_lambda_g_delta


def zero_set_construct(space: GTSpace, zero: Subset, one: Subset, depth: int = 1) -> DyadicFn:
    """
    Continuous f with f⁻¹(0) = zero exactly and f = 1 on `one`.

    The open sets U_1 = Y - N, then every open superset of M in canonical
    order, have running intersections V_n that stabilize at M from index s on.
    f = Σ_{n≤s} 2^-n f_n + 2^-s f_s where f_n separates M from Y - V_n.
    """
    _check_construction_hypotheses(space, zero, one, ('M', 'N'))
    if zero not in space.s_lambda_g_delta:
        raise NotGDelta(space.render(zero))

    chain = [space.complement(one)] + space.s_lambda_open.supersets_of(zero)
    running = space.full
    parts = []
    for member in chain:
        running &= member
        parts.append(_urysohn_levels(space, zero, space.complement(running), depth)[1])
        if running == zero:
            break
    stable = len(parts)
    logger.debug(f"zero-set chain for {space.render(zero)} stabilizes at {stable}")

    values = []
    for point in range(space.n):
        total = ZERO
        for index, part in enumerate(parts, start=1):
            total = total + part(point).halve(index)
        total = total + parts[-1](point).halve(stable)
        values.append(total)
    return DyadicFn(tuple(values))


def zero_set_is_g_delta(space: GTSpace, f: DyadicFn) -> bool:
    """A continuous function's zero set is sλGδ."""
    return not is_continuous(space, f) or f.zero_set() in space.s_lambda_g_delta


def perfectly_normal_check(space: GTSpace) -> tuple[bool, Optional[tuple[Subset, Subset]], bool]:
    """
    (holds, first failing (M, N), vacuous). A pair needs fibers M, N and the
    rest Y - M - N all sλ-open; the rest may be empty.
    """
    opens = space.s_lambda_open
    pairs = disjoint_closed_pairs(space)
    for first, second in pairs:
        rest = space.full & ~(first | second)
        if first not in opens or second not in opens or rest not in opens:
            return False, (first, second), False
    return True, None, not pairs
