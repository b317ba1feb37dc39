"""
Finite generalized topological spaces and their exact operators.

A GT-space is a ground set Y with a family gamma of subsets that contains the
empty set and is closed under unions. Y need not be a member of gamma. Every
derived family (semi-open, semi-kernel fixed, lambda-closed, ...) is computed
from gamma by brute force over the power set, which is what makes the engine
exact at the scale it targets (n <= 5).
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator, Optional, Sequence

from gtspace.bitset import (
    Subset,
    all_subsets,
    complement,
    full_set,
    is_subset,
    iter_indexes,
    make_bitset,
    union_all,
)
from gtspace.errors import (
    ConsistencyError,
    DuplicatePoint,
    EmptyCarrier,
    NotUnionClosed,
    UnknownPoint,
)

logger = logging.getLogger(__name__)

MAX_POINTS = 64


@dataclass(frozen=True)
class GroundSet:
    labels: tuple[str, ...]
    index: dict = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        if not self.labels:
            raise EmptyCarrier()
        if len(self.labels) > MAX_POINTS:
            raise ValueError(f"Error: at most {MAX_POINTS} points are supported, got {len(self.labels)}")
        index = {}
        for position, label in enumerate(self.labels):
            if label in index:
                raise DuplicatePoint(label)
            index[label] = position
        object.__setattr__(self, 'index', index)

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def full(self) -> Subset:
        return full_set(self.n)

    def subset(self, names: Iterable[str]) -> Subset:
        value = 0
        for name in names:
            if name not in self.index:
                raise UnknownPoint(name)
            value |= 1 << self.index[name]
        return value

    def names(self, value: Subset) -> list[str]:
        return [self.labels[i] for i in iter_indexes(value)]

    def render(self, value: Subset) -> str:
        return "{" + ",".join(self.names(value)) + "}"

    def restrict(self, value: Subset) -> GroundSet:
        return GroundSet(tuple(self.names(value)))


@dataclass(frozen=True)
class SetFamily:
    """Deduplicated family of subsets kept in numeric order, so equality is tuple equality."""

    members: tuple[Subset, ...]

    @classmethod
    def of(cls, values: Iterable[Subset]) -> SetFamily:
        return cls(tuple(sorted(set(values))))

    def __iter__(self) -> Iterator[Subset]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, value: Subset) -> bool:
        return value in self._lookup

    @cached_property
    def _lookup(self) -> frozenset:
        return frozenset(self.members)

    def union(self) -> Subset:
        return union_all(self.members)

    def complements(self, n: int) -> SetFamily:
        return SetFamily.of(complement(value, n) for value in self.members)

    def supersets_of(self, value: Subset) -> list[Subset]:
        return [member for member in self.members if is_subset(value, member)]

    def subsets_of(self, value: Subset) -> list[Subset]:
        return [member for member in self.members if is_subset(member, value)]

    def first_union_gap(self) -> Optional[tuple[Subset, Subset]]:
        """First pair (canonical order) whose union is not a member, if any."""
        for first, second in combinations(self.members, 2):
            if first | second not in self:
                return first, second
        return None

    def first_intersection_gap(self) -> Optional[tuple[Subset, Subset]]:
        for first, second in combinations(self.members, 2):
            if first & second not in self:
                return first, second
        return None

    def is_union_closed(self) -> bool:
        return self.first_union_gap() is None

    def is_intersection_closed(self) -> bool:
        return self.first_intersection_gap() is None


@dataclass(frozen=True)
class GTSpace:
    """
    A validated GT-space. Derived families are cached on first use; a cache
    fill is a pure function of gamma, so concurrent fills agree.
    """

    ground: GroundSet
    gamma: SetFamily
    name: str = field(default="", compare=False)

    def __post_init__(self):
        if 0 not in self.gamma:
            raise ValueError("Error: gamma must contain the empty set")
        if any(not is_subset(member, self.ground.full) for member in self.gamma):
            raise ValueError("Error: gamma member outside the ground set")
        gap = self.gamma.first_union_gap()
        if gap is not None:
            first, second = gap
            raise NotUnionClosed(self.ground.names(first), self.ground.names(second),
                                 self.ground.names(first | second))

    @property
    def n(self) -> int:
        return self.ground.n

    @property
    def full(self) -> Subset:
        return self.ground.full

    def render(self, value: Subset) -> str:
        return self.ground.render(value)

    def complement(self, value: Subset) -> Subset:
        return complement(value, self.n)

    # gamma level
    @cached_property
    def gamma_closed(self) -> SetFamily:
        return self.gamma.complements(self.n)

    @cached_property
    def gamma_closure_table(self) -> tuple[Subset, ...]:
        return closure_table(self.gamma, self.n)

    # semi gamma level
    @cached_property
    def s_gamma_open(self) -> SetFamily:
        return _compute_s_gamma_open(self)

    @cached_property
    def s_gamma_closed(self) -> SetFamily:
        return self.s_gamma_open.complements(self.n)

    @cached_property
    def s_gamma_closure_table(self) -> tuple[Subset, ...]:
        return closure_table(self.s_gamma_open, self.n)

    @cached_property
    def sker_table(self) -> tuple[Subset, ...]:
        return _compute_sker_table(self)

    @cached_property
    def empty_intersections(self) -> int:
        """Subsets whose sker falls back to Y because no sγ-open set contains them."""
        return sum(1 for value in all_subsets(self.n) if not self.s_gamma_open.supersets_of(value))

    # semi lambda level
    @cached_property
    def s_lambda_closed(self) -> SetFamily:
        return _compute_s_lambda_closed(self)

    @cached_property
    def s_lambda_open(self) -> SetFamily:
        return self.s_lambda_closed.complements(self.n)

    @cached_property
    def s_lambda_closure_table(self) -> tuple[Subset, ...]:
        return closure_table(self.s_lambda_open, self.n)

    @cached_property
    def s_lambda_interior_table(self) -> tuple[Subset, ...]:
        return interior_table(self.s_lambda_open, self.n)

    @cached_property
    def sg_lambda_closed(self) -> SetFamily:
        return _compute_sg_lambda_closed(self)

    @cached_property
    def sg_lambda_open(self) -> SetFamily:
        return self.sg_lambda_closed.complements(self.n)

    @cached_property
    def s_lambda_g_delta(self) -> SetFamily:
        return _compute_g_delta(self)

    @cached_property
    def minimal_open_supersets(self) -> tuple[tuple[Subset, ...], ...]:
        """Per subset, the inclusion-minimal sλ-open sets containing it."""
        table = []
        for value in all_subsets(self.n):
            supersets = self.s_lambda_open.supersets_of(value)
            table.append(tuple(
                candidate for candidate in supersets
                if not any(other != candidate and is_subset(other, candidate) for other in supersets)
            ))
        return tuple(table)

    def s_lambda_closure(self, value: Subset) -> Subset:
        return self.s_lambda_closure_table[value]

    def s_lambda_interior(self, value: Subset) -> Subset:
        return self.s_lambda_interior_table[value]


def make_space(points: Sequence[str], opens: Iterable[Iterable[str]], name: str = "") -> GTSpace:
    """Build a GTSpace from point names; the empty set is added, union-closure is only checked."""
    ground = GroundSet(tuple(points))
    masks = {0}
    for member in opens:
        masks.add(ground.subset(member))
    return GTSpace(ground, SetFamily.of(masks), name)


def space_from_masks(labels: Sequence[str], masks: Iterable[Subset], name: str = "") -> GTSpace:
    return GTSpace(GroundSet(tuple(labels)), SetFamily.of(set(masks) | {0}), name)


def default_labels(n: int) -> tuple[str, ...]:
    return tuple("abcdefghijklmnopqrstuvwxyz"[:n]) if n <= 26 else tuple(f"p{i}" for i in range(n))


def closure_table(family: SetFamily, n: int) -> tuple[Subset, ...]:
    """Closure of every subset, reading `family` as the open sets."""
    full = full_set(n)
    return tuple(
        full & ~union_all(member for member in family.members if member & value == 0)
        for value in all_subsets(n)
    )


def interior_table(family: SetFamily, n: int) -> tuple[Subset, ...]:
    return tuple(union_all(family.subsets_of(value)) for value in all_subsets(n))


def closure_in_family(family: SetFamily, value: Subset, ground: GroundSet) -> Subset:
    """Points all of whose open neighbourhoods meet `value`, cross-checked against
    the intersection of the closed supersets."""
    adherent = 0
    for point in range(ground.n):
        if all(member & value for member in family.members if member >> point & 1):
            adherent |= 1 << point

    closed_supersets = [
        ground.full & ~member for member in family.members if member & value == 0
    ]
    by_intersection = ground.full
    for closed in closed_supersets:
        by_intersection &= closed

    if adherent != by_intersection:
        raise ConsistencyError(
            f"closure of {ground.render(value)}: adherence gives {ground.render(adherent)}, "
            f"closed supersets give {ground.render(by_intersection)}"
        )
    return adherent


def interior_in_family(family: SetFamily, value: Subset, ground: GroundSet) -> Subset:
    """Union of the members inside `value`; must equal Y - cl(Y - value)."""
    direct = union_all(family.subsets_of(value))
    dual = ground.full & ~closure_in_family(family, ground.full & ~value, ground)
    if direct != dual:
        raise ConsistencyError(
            f"interior of {ground.render(value)}: union gives {ground.render(direct)}, "
            f"duality gives {ground.render(dual)}"
        )
    return direct


def gamma_closure(space: GTSpace, value: Subset) -> Subset:
    return closure_in_family(space.gamma, value, space.ground)


def s_gamma_open_family(space: GTSpace) -> SetFamily:
    return space.s_gamma_open


def sker(space: GTSpace, value: Subset) -> Subset:
    return space.sker_table[value]


def s_lambda_closed_family(space: GTSpace) -> SetFamily:
    return space.s_lambda_closed


def sg_lambda_closed_family(space: GTSpace) -> SetFamily:
    return space.sg_lambda_closed


def s_lambda_closed_by_pairs(space: GTSpace) -> SetFamily:
    """sλ-closed sets straight from the definition: M ∩ N with M = sker(M), N sγ-closed."""
    kernel_fixed = [value for value in all_subsets(space.n) if space.sker_table[value] == value]
    return SetFamily.of(m & n for m in kernel_fixed for n in space.s_gamma_closed)


def subspace(space: GTSpace, value: Subset) -> GTSpace:
    """Trace of gamma on `value`, relabelled onto the points of `value` in ground order."""
    if value == 0:
        raise EmptyCarrier("subspace carrier")
    positions = list(iter_indexes(value))

    def compact(mask: Subset) -> Subset:
        return make_bitset(new for new, old in enumerate(positions) if mask >> old & 1)

    traces = SetFamily.of(compact(member & value) for member in space.gamma)
    return GTSpace(space.ground.restrict(value), traces, space.name)


def _compute_s_gamma_open(space: GTSpace) -> SetFamily:
    found = set()
    for member in space.gamma:
        ceiling = space.gamma_closure_table[member]
        extra = ceiling & ~member
        sub = extra
        while True:
            found.add(member | sub)
            if sub == 0:
                break
            sub = (sub - 1) & extra
    family = SetFamily.of(found)
    gap = family.first_union_gap()
    if gap is not None:
        raise ConsistencyError(f"sγ-open family not union-closed at {[space.render(v) for v in gap]}")
    logger.debug(f"sγ-open family filled: {len(family)} sets")
    return family


def _compute_sker_table(space: GTSpace) -> tuple[Subset, ...]:
    table = []
    for value in all_subsets(space.n):
        supersets = space.s_gamma_open.supersets_of(value)
        if not supersets:
            logger.debug(f"sker({space.render(value)}): no sγ-open superset, using Y")
        kernel = space.full
        for superset in supersets:
            kernel &= superset
        table.append(kernel)
    return tuple(table)


def _compute_s_lambda_closed(space: GTSpace) -> SetFamily:
    by_kernel = SetFamily.of(
        value for value in all_subsets(space.n)
        if value == space.sker_table[value] & space.s_gamma_closure_table[value]
    )
    by_pairs = s_lambda_closed_by_pairs(space)
    if by_kernel != by_pairs:
        logger.warning(f"sλ-closed oracle mismatch on space {space.name or space.gamma.members}")
        raise ConsistencyError(
            f"sλ-closed family: kernel formula {[space.render(v) for v in by_kernel]} "
            f"vs pairs {[space.render(v) for v in by_pairs]}"
        )
    gap = by_kernel.first_intersection_gap()
    if gap is not None:
        raise ConsistencyError(f"sλ-closed family not intersection-closed at {[space.render(v) for v in gap]}")
    return by_kernel


def _compute_sg_lambda_closed(space: GTSpace) -> SetFamily:
    closure = space.s_lambda_closure_table
    opens = space.s_lambda_open
    family = SetFamily.of(
        value for value in all_subsets(space.n)
        if all(is_subset(closure[value], member) for member in opens.supersets_of(value))
    )

    # dual check: D is sg-open iff every closed P inside D sits inside sInt(D)
    for value in all_subsets(space.n):
        open_side = space.complement(value)
        dual = all(
            is_subset(closed, space.s_lambda_interior_table[open_side])
            for closed in space.s_lambda_closed.subsets_of(open_side)
        )
        if dual != (value in family):
            raise ConsistencyError(f"sg_λ-open characterization fails at {space.render(open_side)}")
    return family


def _compute_g_delta(space: GTSpace) -> SetFamily:
    """Close the sλ-open family under finite intersections."""
    found = set(space.s_lambda_open)
    frontier = set(found)
    while frontier:
        fresh = {a & b for a in frontier for b in found} - found
        found |= fresh
        frontier = fresh
    return SetFamily.of(found)
