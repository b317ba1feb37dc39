"""
Covers, refinements, local finiteness, the finite intersection property and
the compactness family of predicates.

On a finite space every one of these is true or trivially decided; they are
still computed from their definitions so the cover-extraction and subspace
machinery used by the hereditary results gets exercised.
"""
import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Optional

from gtspace.bitset import Subset, intersect_all, is_subset, iter_indexes, union_all
from gtspace.core import GTSpace, SetFamily, subspace
from gtspace.errors import ConsistencyError

logger = logging.getLogger(__name__)

# Largest family whose every subfamily is enumerated
DEFAULT_COVER_LIMIT = 8


@dataclass(frozen=True)
class Cover:
    members: SetFamily
    target: Subset

    def __post_init__(self):
        if not is_subset(self.target, self.members.union()):
            raise ValueError("Error: members do not cover the target")


def is_refinement(fine: Iterable[Subset], coarse: Iterable[Subset]) -> bool:
    coarse = list(coarse)
    return all(any(is_subset(member, bigger) for bigger in coarse) for member in fine)


def is_locally_finite(space: GTSpace, family: Iterable[Subset]) -> bool:
    """
    Each point has an sλ-open set around it meeting finitely many members.
    Families here are finite, so this reduces to every point having some
    sλ-open neighbourhood; `family` only matters through its finiteness.
    """
    return all(
        any(member >> point & 1 for member in space.s_lambda_open)
        for point in iter_indexes(space.full)
    )


def fip_witness(family: Iterable[Subset], n: int) -> Optional[tuple[Subset, ...]]:
    """Smallest subcollection with empty intersection, or None."""
    members = list(family)
    if not members or intersect_all(members, n):
        return None
    for size in range(1, len(members) + 1):
        for chosen in combinations(members, size):
            if intersect_all(chosen, n) == 0:
                return chosen
    return None


def has_fip(family: Iterable[Subset], n: int = 64) -> bool:
    return fip_witness(family, n) is None


def find_subcover(members: Iterable[Subset], target: Subset) -> Optional[tuple[Subset, ...]]:
    """Smallest subfamily whose union contains `target`."""
    members = list(members)
    if target == 0:
        return ()
    for size in range(1, len(members) + 1):
        for chosen in combinations(members, size):
            if is_subset(target, union_all(chosen)):
                return chosen
    return None


def _subfamilies(members: list[Subset], limit: int) -> Iterator[tuple[Subset, ...]]:
    if len(members) <= limit:
        for size in range(len(members) + 1):
            yield from combinations(members, size)
        return
    logger.debug(f"family of {len(members)} sets exceeds cover limit {limit}, using the bounded fallback")
    yield tuple(members)
    for member in members:
        yield (member,)


def open_covers(space: GTSpace, limit: int = DEFAULT_COVER_LIMIT) -> Iterator[tuple[Subset, ...]]:
    """sλ-open covers of Y; every subfamily when small, else the full family and the
    minimal-neighbourhood cover."""
    opens = [member for member in space.s_lambda_open if member]
    if len(opens) > limit:
        yield tuple(opens)
        minimal = space.minimal_open_supersets
        yield tuple(sorted({minimal[1 << point][0] for point in range(space.n)}))
        return
    for candidate in _subfamilies(opens, limit):
        if union_all(candidate) == space.full:
            yield candidate


def closed_families(space: GTSpace, limit: int = DEFAULT_COVER_LIMIT) -> Iterator[tuple[Subset, ...]]:
    return _subfamilies(list(space.s_lambda_closed), limit)


def subcover_compact(space: GTSpace, limit: int = DEFAULT_COVER_LIMIT) -> bool:
    return all(find_subcover(cover, space.full) is not None for cover in open_covers(space, limit))


def fip_compact(space: GTSpace, limit: int = DEFAULT_COVER_LIMIT) -> bool:
    """Every family of sλ-closed sets with the FIP has nonempty intersection."""
    return all(
        not has_fip(family, space.n) or intersect_all(family, space.n) != 0
        for family in closed_families(space, limit)
    )


def is_compact(space: GTSpace, limit: int = DEFAULT_COVER_LIMIT) -> bool:
    by_covers = subcover_compact(space, limit)
    by_fip = fip_compact(space, limit)
    if by_covers != by_fip:
        raise ConsistencyError(
            f"compactness of {space.name or space.gamma.members}: subcover route {by_covers}, FIP route {by_fip}"
        )
    return by_covers


def is_lindelof(space: GTSpace, limit: int = DEFAULT_COVER_LIMIT) -> bool:
    # finite covers are countable, so any subcover found is a countable one
    return subcover_compact(space, limit)


def is_countably_compact(space: GTSpace, limit: int = DEFAULT_COVER_LIMIT) -> bool:
    return subcover_compact(space, limit)


def is_paracompact(space: GTSpace, limit: int = DEFAULT_COVER_LIMIT) -> bool:
    """Every open cover has a locally finite open refinement that covers Y."""
    for cover in open_covers(space, limit):
        if not any(
            union_all(refinement) == space.full and is_locally_finite(space, refinement)
            for refinement in (cover, find_subcover(cover, space.full))
            if refinement is not None and is_refinement(refinement, cover)
        ):
            return False
    return True


def subset_is_compact(space: GTSpace, value: Subset, limit: int = DEFAULT_COVER_LIMIT) -> bool:
    if value == 0:
        return True
    return is_compact(subspace(space, value), limit)


def sg_closed_cover_trace(space: GTSpace, value: Subset) -> Optional[tuple[Subset, ...]]:
    """
    Cover `value` by the minimal sλ-open sets around its points. When `value`
    is sg_λ-closed their union contains cl(value), and a finite subfamily
    covering cl(value) is returned.
    """
    minimal = space.minimal_open_supersets
    cover = sorted({minimal[1 << point][0] for point in iter_indexes(value)})
    return find_subcover(cover, space.s_lambda_closure_table[value])


def closure_of_union(space: GTSpace, family: Iterable[Subset]) -> bool:
    """s-cl(∪E) equals the union of the s-cl(E)."""
    family = list(family)
    closure = space.s_lambda_closure_table
    return closure[union_all(family)] == union_all(closure[member] for member in family)
