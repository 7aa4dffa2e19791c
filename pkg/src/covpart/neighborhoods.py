"""Neighborhoods induced by a covering.

The neighborhood of an element is the intersection of every covering
block containing it. Collecting the distinct neighborhoods of all
elements yields the induced family, which is itself a covering; the
library's ground-truth partition test materializes that family and
checks disjointness directly.
"""

from ._bits import iter_bits
from .core import Block, Covering, PartitionVerdict

__all__ = [
    "neighborhood",
    "neighborhood_masks",
    "neighborhoods_family",
    "oracle_is_neighborhood_partition",
]


def neighborhood_masks(c: Covering) -> list[int]:
    """Neighborhood bitmask of every element, indexed by element."""
    nbhd = [c.universe.full_mask] * c.universe.n
    for b in c.blocks:
        m = b.mask
        for x in iter_bits(m):
            nbhd[x] &= m
    return nbhd


def neighborhood(c: Covering, x: int) -> Block:
    """Intersection of all blocks containing element x; contains x."""
    c.universe.check_index(x)
    m = c.universe.full_mask
    for b in c.blocks:
        if (b.mask >> x) & 1:
            m &= b.mask
    return Block(m)


def neighborhoods_family(c: Covering) -> Covering:
    """The family of distinct neighborhoods, in canonical order.

    Always a valid covering: every element lies in its own neighborhood.
    """
    return Covering.from_masks(c.universe, neighborhood_masks(c))


def oracle_is_neighborhood_partition(c: Covering) -> PartitionVerdict:
    """Ground-truth partition test over the materialized neighborhoods.

    On failure the witness is the smallest element pair (x, y) whose
    neighborhoods overlap without being equal. Costs O(n * |C| * n/w)
    for the neighborhoods plus O(n^2 * n/w) for pairwise disjointness.
    """
    nbhd = neighborhood_masks(c)
    distinct = set(nbhd)
    total = sum(m.bit_count() for m in distinct)
    if total == c.universe.n:
        return PartitionVerdict(True, None, "oracle")
    n = c.universe.n
    for x in range(n):
        mx = nbhd[x]
        for y in range(x + 1, n):
            my = nbhd[y]
            if mx != my and mx & my:
                return PartitionVerdict(False, (x, y), "oracle")
    raise AssertionError("non-partition neighborhoods without a witness pair")
