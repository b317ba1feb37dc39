"""
Enumerate every GT-space on a small ground set, canonicalize under point
relabelling, draw deterministic samples, and mine minimal counterexamples.
"""
from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, permutations
from typing import Callable, Iterator, Optional

from gtspace import axioms, realfn
from gtspace.bitset import Subset, all_subsets, permute
from gtspace.core import GTSpace, SetFamily, default_labels, space_from_masks
from gtspace.errors import GTSpaceError, ShrinkFailed, TooLarge, UnknownProperty

logger = logging.getLogger(__name__)

EXHAUSTIVE_LIMIT = 4
SAMPLE_LIMIT = 5
SAMPLE_DRAW_FACTOR = 20
MINE_DEPTH = 3


def close_under_union(masks) -> frozenset:
    closed = set(masks) | {0}
    frontier = set(closed)
    while frontier:
        fresh = {a | b for a in frontier for b in closed} - closed
        closed |= fresh
        frontier = fresh
    return frozenset(closed)


def _check_size(n: int, limit: int):
    if n < 1:
        raise ValueError(f"Error: n must be at least 1, got {n}")
    if n > limit:
        raise TooLarge(n, limit)


def _union_closed_families(n: int) -> Iterator[frozenset]:
    """
    Canonical augmentation over the nonempty subsets in numeric order: each
    subset is either skipped or added and the family closed under union. A
    union never drops below its largest part, so no family is reached twice.
    """
    top = 1 << n

    def grow(family: frozenset, candidate: int) -> Iterator[frozenset]:
        while candidate < top and candidate in family:
            candidate += 1
        if candidate == top:
            yield family
            return
        yield from grow(family, candidate + 1)
        extended = close_under_union(family | {candidate})
        if any(value < candidate and value not in family for value in extended):
            return
        yield from grow(extended, candidate + 1)

    yield from grow(frozenset({0}), 1)


def space_key(space: GTSpace) -> tuple[int, ...]:
    return space.gamma.members


def enumerate_spaces(n: int, dedup: bool = False) -> list[GTSpace]:
    """All GT-spaces on n points in canonical order; one per relabelling orbit with dedup."""
    _check_size(n, EXHAUSTIVE_LIMIT)
    return list(_enumerate_cached(n, dedup))


@lru_cache(maxsize=None)
def _enumerate_cached(n: int, dedup: bool) -> tuple[GTSpace, ...]:
    labels = default_labels(n)
    spaces = [space_from_masks(labels, family) for family in _union_closed_families(n)]
    if dedup:
        spaces = [space for space in spaces if canonical_form(space).gamma == space.gamma]
    spaces.sort(key=space_key)
    logger.info(f"enumerated {len(spaces)} spaces on {n} points (dedup={dedup})")
    return tuple(spaces)


def brute_force_families(n: int) -> list[tuple[int, ...]]:
    """Every union-closed family, by filtering all families of nonempty subsets."""
    _check_size(n, EXHAUSTIVE_LIMIT)
    nonempty = list(range(1, 1 << n))
    found = []
    for selector in range(1 << len(nonempty)):
        family = SetFamily.of([0] + [value for position, value in enumerate(nonempty) if selector >> position & 1])
        if family.is_union_closed():
            found.append(family.members)
    return sorted(found)


def sample_spaces(n: int, size: int, seed: int = 0) -> list[GTSpace]:
    """
    Deterministic sample in canonical order. Up to four points the sample is
    drawn from the full enumeration (and is all of it when size exceeds the
    population); at five points random generator sets are closed under union
    until `size` distinct spaces have been drawn.
    """
    _check_size(n, SAMPLE_LIMIT)
    rng = random.Random(seed)
    if n <= EXHAUSTIVE_LIMIT:
        population = enumerate_spaces(n)
        if size >= len(population):
            return population
        chosen = sorted(rng.sample(range(len(population)), size))
        return [population[index] for index in chosen]

    labels = default_labels(n)
    nonempty = list(range(1, 1 << n))
    families = set()
    draws = 0
    # duplicates do not count toward size
    while len(families) < size and draws < SAMPLE_DRAW_FACTOR * size:
        generators = rng.sample(nonempty, rng.randint(0, 6))
        families.add(close_under_union(generators))
        draws += 1
    if len(families) < size:
        logger.warning(f"sample stopped at {len(families)} distinct spaces after {draws} draws")
    spaces = [space_from_masks(labels, family) for family in families]
    spaces.sort(key=space_key)
    return spaces


@lru_cache(maxsize=None)
def _permutation_tables(n: int) -> tuple[tuple[int, ...], ...]:
    return tuple(
        tuple(permute(value, perm) for value in all_subsets(n))
        for perm in permutations(range(n))
    )


def canonical_form(space: GTSpace) -> GTSpace:
    """Least relabelling (sorted member tuple) over all point permutations."""
    best = min(
        tuple(sorted(table[member] for member in space.gamma))
        for table in _permutation_tables(space.n)
    )
    return space_from_masks(space.ground.labels, best, space.name)


@dataclass
class Witness:
    space: GTSpace
    sets: dict[str, Subset]
    description: str
    property: str = field(default="")

    def replay(self) -> bool:
        return PROPERTIES[self.property].check(self.space, self.sets)

    def lines(self, name: str = "") -> list[str]:
        from gtspace.spacefile import render_space

        out = [f"# {self.description}"]
        out.extend(render_space(self.space, name).splitlines())
        out.extend(f"set {name} {self.space.render(value)}" for name, value in self.sets.items())
        return out


@dataclass(frozen=True)
class Probe:
    name: str
    description: str
    find: Callable[[GTSpace], Optional[dict[str, Subset]]]
    check: Callable[[GTSpace, dict[str, Subset]], bool]


def _union_of_closed(space: GTSpace):
    closed = space.s_lambda_closed
    for first, second in combinations(closed, 2):
        if first | second not in closed:
            return {'A': first, 'B': second}
    return None


def _intersection_of_open(space: GTSpace):
    gap = space.s_lambda_open.first_intersection_gap()
    return None if gap is None else {'A': gap[0], 'B': gap[1]}


def _sg_closed_not_closed(space: GTSpace):
    extra = [value for value in space.sg_lambda_closed if value not in space.s_lambda_closed]
    return {'D': extra[0]} if extra else None


def _regular_weak_not_strong(space: GTSpace):
    if not axioms.is_regular_weak(space):
        return None
    for point, closed in axioms.point_closed_pairs(space):
        if not axioms.closure_separated(space, closed, point):
            return {'p': point, 'F': closed}
    return None


def _check_regular_weak_not_strong(space: GTSpace, sets) -> bool:
    return axioms.is_regular_weak(space) and not axioms.closure_separated(space, sets['F'], sets['p'])


def _urysohn_not_continuous(space: GTSpace, depth: int = MINE_DEPTH):
    if not (axioms.is_normal_weak(space) and axioms.condition_a(space)):
        return None
    for first, second in axioms.disjoint_closed_pairs(space):
        try:
            _, f = realfn.urysohn_construct(space, first, second, depth)
        except ShrinkFailed:
            continue
        if not realfn.is_continuous(space, f):
            return {'A': first, 'B': second}
    return None


def _check_urysohn_not_continuous(space: GTSpace, sets) -> bool:
    try:
        _, f = realfn.urysohn_construct(space, sets['A'], sets['B'], MINE_DEPTH)
    except GTSpaceError:
        return False
    return not realfn.is_continuous(space, f)


def _condition_a_not_additive(space: GTSpace):
    if not axioms.condition_a(space):
        return None
    closure = space.s_lambda_closure_table
    for first, second in combinations(all_subsets(space.n), 2):
        if closure[first | second] != closure[first] | closure[second]:
            return {'E': first, 'F': second}
    return None


def _check_condition_a_not_additive(space: GTSpace, sets) -> bool:
    closure = space.s_lambda_closure_table
    first, second = sets['E'], sets['F']
    return axioms.condition_a(space) and closure[first | second] != closure[first] | closure[second]


PROBES = [
    Probe(
        'union-of-sλ-closed-not-closed',
        "union of two sλ-closed sets that is not sλ-closed",
        _union_of_closed,
        lambda space, sets: {sets['A'], sets['B']} <= set(space.s_lambda_closed)
        and sets['A'] | sets['B'] not in space.s_lambda_closed,
    ),
    Probe(
        'intersection-of-sλ-open-not-open',
        "intersection of two sλ-open sets that is not sλ-open",
        _intersection_of_open,
        lambda space, sets: {sets['A'], sets['B']} <= set(space.s_lambda_open)
        and sets['A'] & sets['B'] not in space.s_lambda_open,
    ),
    Probe(
        'sgλ-closed-not-sλ-closed',
        "sg_λ-closed set that is not sλ-closed",
        _sg_closed_not_closed,
        lambda space, sets: sets['D'] in space.sg_lambda_closed and sets['D'] not in space.s_lambda_closed,
    ),
    Probe(
        'regular-weak-not-strong',
        "open separation of point and closed set without disjoint closures",
        _regular_weak_not_strong,
        _check_regular_weak_not_strong,
    ),
    Probe(
        'urysohn-f-not-continuous',
        "dyadic construction whose finite-depth function is not continuous",
        _urysohn_not_continuous,
        _check_urysohn_not_continuous,
    ),
    Probe(
        'condition-a-not-additive',
        "condition (A) holds but the sλ-closure is not additive",
        _condition_a_not_additive,
        _check_condition_a_not_additive,
    ),
]

PROPERTIES = {probe.name: probe for probe in PROBES}

ALIASES = {
    'union-of-s-lambda-closed-not-closed': 'union-of-sλ-closed-not-closed',
    'intersection-of-s-lambda-open-not-open': 'intersection-of-sλ-open-not-open',
    'sg-lambda-closed-not-s-lambda-closed': 'sgλ-closed-not-sλ-closed',
}


def resolve_property(name: str) -> Probe:
    name = ALIASES.get(name, name)
    if name not in PROPERTIES:
        raise UnknownProperty(name, list(PROPERTIES) + list(ALIASES))
    return PROPERTIES[name]


def mine_counterexamples(n: int, property_id: str, limit: int = 5) -> list[Witness]:
    """Witnesses on exactly n points, fewest open sets first, one per relabelling orbit."""
    probe = resolve_property(property_id)
    candidates = sorted(enumerate_spaces(n, dedup=True), key=lambda space: (len(space.gamma), space_key(space)))
    found = []
    for space in candidates:
        sets = probe.find(space)
        if sets is None:
            continue
        found.append(Witness(space, sets, probe.description, probe.name))
        logger.info(f"witness for {probe.name}: {[space.render(member) for member in space.gamma]}")
        if len(found) >= limit:
            break
    return found


def count_spaces(n: int) -> dict[str, int]:
    return {
        'labelled': len(enumerate_spaces(n)),
        'unlabelled': len(enumerate_spaces(n, dedup=True)),
    }


def witness_from_text(text: str, property_id: str) -> Witness:
    """Read back a block printed by Witness.lines."""
    from gtspace.spacefile import parse_witness

    probe = resolve_property(property_id)
    space, sets = parse_witness(text)
    return Witness(space, sets, probe.description, probe.name)
