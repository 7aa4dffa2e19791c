"""Repeat degrees: how often elements and element pairs recur across blocks.

The membership repeat degree of an element counts the blocks containing
it; the common block repeat degree of a pair counts the blocks containing
both. Their difference, the excluded number, is zero exactly when the
second element lies in the first one's neighborhood, which is what makes
these counts decide partitionhood without computing any neighborhood.
"""

from dataclasses import dataclass

from ._bits import iter_bits
from .core import Covering, IndexOutOfRange

__all__ = [
    "DegreeTable",
    "all_uniform",
    "common_block_repeat_degree",
    "degree_table",
    "excluded_number",
    "incidence_masks",
    "is_uniform_block",
    "membership_repeat_degree",
]


def incidence_masks(c: Covering) -> list[int]:
    """For each element, the bitmask of covering-block indices containing it."""
    inc = [0] * c.universe.n
    for k, b in enumerate(c.blocks):
        bit = 1 << k
        for x in iter_bits(b.mask):
            inc[x] |= bit
    return inc


def membership_repeat_degree(c: Covering, x: int) -> int:
    """Number of blocks containing element x; at least 1 in any covering."""
    c.universe.check_index(x)
    return sum((b.mask >> x) & 1 for b in c.blocks)


def common_block_repeat_degree(c: Covering, x: int, y: int) -> int:
    """Number of blocks containing both x and y (x == y allowed)."""
    c.universe.check_index(x)
    c.universe.check_index(y)
    return sum((b.mask >> x) & (b.mask >> y) & 1 for b in c.blocks)


def excluded_number(c: Covering, x: int, y: int) -> int:
    """Blocks containing x but not y: degree of x minus the pair degree.

    Nonnegative; zero exactly when y belongs to the neighborhood of x.
    """
    return membership_repeat_degree(c, x) - common_block_repeat_degree(c, x, y)


def _block_degrees(c: Covering) -> list[int]:
    deg = [0] * c.universe.n
    for b in c.blocks:
        for x in iter_bits(b.mask):
            deg[x] += 1
    return deg


def is_uniform_block(c: Covering, k: int) -> bool:
    """Whether every member of block k has the same membership repeat degree."""
    if not isinstance(k, int) or not 0 <= k < len(c.blocks):
        raise IndexOutOfRange(f"block index {k!r} not in 0..{len(c.blocks) - 1}")
    deg = _block_degrees(c)
    it = iter_bits(c.blocks[k].mask)
    first = deg[next(it)]
    return all(deg[x] == first for x in it)


def all_uniform(c: Covering) -> bool:
    """Whether every block of the covering is uniform."""
    deg = _block_degrees(c)
    for b in c.blocks:
        it = iter_bits(b.mask)
        first = deg[next(it)]
        if any(deg[x] != first for x in it):
            return False
    return True


@dataclass(frozen=True)
class DegreeTable:
    """Precomputed per-element and per-pair repeat degrees.

    Pair degrees are stored once per unordered pair (triangular layout,
    diagonal included), so symmetry holds by construction; ordered
    queries resolve through the symmetric store.
    """

    n: int
    membership: tuple[int, ...]
    pair_counts: tuple[int, ...]

    def __post_init__(self):
        expected = self.n * (self.n + 1) // 2
        if len(self.membership) != self.n or len(self.pair_counts) != expected:
            raise ValueError("degree table sizes inconsistent with n")

    def _tri(self, x: int, y: int) -> int:
        if x > y:
            x, y = y, x
        if not (isinstance(x, int) and isinstance(y, int) and 0 <= x and y < self.n):
            raise IndexOutOfRange(f"pair ({x!r}, {y!r}) not within 0..{self.n - 1}")
        return x * self.n - (x * (x - 1)) // 2 + (y - x)

    def degree(self, x: int) -> int:
        if not isinstance(x, int) or not 0 <= x < self.n:
            raise IndexOutOfRange(f"element index {x!r} not in 0..{self.n - 1}")
        return self.membership[x]

    def common(self, x: int, y: int) -> int:
        return self.pair_counts[self._tri(x, y)]

    def excluded(self, x: int, y: int) -> int:
        return self.degree(x) - self.common(x, y)


def degree_table(c: Covering) -> DegreeTable:
    """Batch-compute all degrees from the element-block incidence masks."""
    inc = incidence_masks(c)
    n = c.universe.n
    membership = tuple(m.bit_count() for m in inc)
    pairs = []
    for x in range(n):
        ix = inc[x]
        for y in range(x, n):
            pairs.append((ix & inc[y]).bit_count())
    return DegreeTable(n, membership, tuple(pairs))
