"""Subset approximation operators and operator-level partition tests.

Each operator maps a subset of the universe, given as a bitmask over
element indices, to another subset. The three whole-covering predicates
below each hold exactly when the induced neighborhoods form a partition,
so they serve as independent cross-checks for the pairwise degree test.

Two of the predicates quantify over all 2^n subsets and therefore refuse
universes above a configurable cap instead of silently sampling; the
singleton-based predicate is linear in the universe and has no cap.
"""

from .core import Covering, IndexOutOfRange, UniverseTooLarge
from .neighborhoods import neighborhood_masks

__all__ = [
    "EXHAUSTIVE_DEFAULT_CAP",
    "lower_by_all_neighborhoods",
    "lower_by_neighborhood",
    "lower_fixed_by_upper",
    "lower_maps_coincide",
    "singleton_upper_matches_neighborhood",
    "upper_by_blocks",
    "upper_by_neighborhood",
]

EXHAUSTIVE_DEFAULT_CAP = 16


def _check_subset(c: Covering, members: int) -> None:
    if not isinstance(members, int) or members < 0 or members & ~c.universe.full_mask:
        raise IndexOutOfRange(
            f"subset mask {members!r} not within a universe of size {c.universe.n}"
        )


def lower_by_neighborhood(c: Covering, members: int) -> int:
    """Elements whose whole neighborhood lies inside the given subset."""
    _check_subset(c, members)
    out = 0
    for x, m in enumerate(neighborhood_masks(c)):
        if m & ~members == 0:
            out |= 1 << x
    return out


def lower_by_all_neighborhoods(c: Covering, members: int) -> int:
    """Elements contained only in neighborhoods that lie inside the subset."""
    _check_subset(c, members)
    bad = 0
    for m in neighborhood_masks(c):
        if m & ~members:
            bad |= m
    return c.universe.full_mask & ~bad


def upper_by_neighborhood(c: Covering, members: int) -> int:
    """Elements whose neighborhood meets the given subset."""
    _check_subset(c, members)
    out = 0
    for x, m in enumerate(neighborhood_masks(c)):
        if m & members:
            out |= 1 << x
    return out


def upper_by_blocks(c: Covering, members: int) -> int:
    """Elements all of whose containing blocks meet the given subset."""
    _check_subset(c, members)
    bad = 0
    for b in c.blocks:
        if b.mask & members == 0:
            bad |= b.mask
    return c.universe.full_mask & ~bad


def _require_enumerable(c: Covering, cap: int) -> None:
    if c.universe.n > cap:
        raise UniverseTooLarge(
            f"exhaustive subset check needs n <= {cap}, got {c.universe.n}"
        )


def lower_maps_coincide(c: Covering, *, max_n: int = EXHAUSTIVE_DEFAULT_CAP) -> bool:
    """Whether the two lower operators agree on every subset.

    Holds exactly when the induced neighborhoods form a partition.
    Enumerates all 2^n subsets; refuses when n exceeds ``max_n``.
    """
    _require_enumerable(c, max_n)
    nbhd = neighborhood_masks(c)
    full = c.universe.full_mask
    for x_set in range(full + 1):
        lower = 0
        bad = 0
        for x, m in enumerate(nbhd):
            if m & ~x_set == 0:
                lower |= 1 << x
            else:
                bad |= m
        if lower != full & ~bad:
            return False
    return True


def lower_fixed_by_upper(c: Covering, *, max_n: int = EXHAUSTIVE_DEFAULT_CAP) -> bool:
    """Whether the neighborhood upper operator fixes every lower image.

    Holds exactly when the induced neighborhoods form a partition.
    Enumerates all 2^n subsets; refuses when n exceeds ``max_n``.
    """
    _require_enumerable(c, max_n)
    nbhd = neighborhood_masks(c)
    full = c.universe.full_mask
    n = c.universe.n
    for x_set in range(full + 1):
        lower = 0
        for x in range(n):
            if nbhd[x] & ~x_set == 0:
                lower |= 1 << x
        up = 0
        for x in range(n):
            if nbhd[x] & lower:
                up |= 1 << x
        if up != lower:
            return False
    return True


def singleton_upper_matches_neighborhood(c: Covering) -> bool:
    """Whether the block-wise upper image of each singleton equals that
    element's neighborhood. Holds exactly when the induced neighborhoods
    form a partition; linear in the universe, no subset enumeration."""
    nbhd = neighborhood_masks(c)
    full = c.universe.full_mask
    for x in range(c.universe.n):
        point = 1 << x
        bad = 0
        for b in c.blocks:
            if b.mask & point == 0:
                bad |= b.mask
        if full & ~bad != nbhd[x]:
            return False
    return True
