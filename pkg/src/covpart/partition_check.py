"""Partition decision procedures over a covering.

Three routes are provided. The excluded-number test decides
partitionhood exactly, from pairwise degree counts alone: the induced
neighborhoods form a partition iff for every element pair the two
excluded numbers are both zero or both nonzero. The reduct test and the
uniform-block test are sufficient-only shortcuts; when their condition
fails they return an inconclusive result rather than a negative verdict,
since coverings exist whose neighborhoods partition the universe anyway.

With a precomputed degree table the excluded-number test costs O(n^2)
pair lookups after O(|C| * n^2 / w) table construction (w = machine word
width); the neighborhood oracle it is checked against costs
O(n * |C| * n/w) plus O(n^2 * n/w).
"""

from dataclasses import dataclass

from .core import (
    Block,
    Covering,
    InternalDisagreement,
    PartitionVerdict,
    canonical_form,
    is_partition,
)
from .degrees import DegreeTable, all_uniform, degree_table, incidence_masks
from .neighborhoods import (
    neighborhood_masks,
    neighborhoods_family,
    oracle_is_neighborhood_partition,
)
from .reduction import reduct

__all__ = [
    "Report",
    "check_excluded_number",
    "check_reduct_sufficient",
    "check_uniform_sufficient",
    "full_report",
]


def check_excluded_number(c: Covering) -> PartitionVerdict:
    """Decide partitionhood from pairwise excluded numbers alone.

    Evaluates, for every unordered pair, whether "x's blocks all contain
    y" and "y's blocks all contain x" agree; the first violating pair in
    lexicographic index order becomes the witness. Agrees with the
    neighborhood oracle on every covering.
    """
    inc = incidence_masks(c)
    n = c.universe.n
    for x in range(n):
        ix = inc[x]
        for y in range(x + 1, n):
            iy = inc[y]
            if (ix & ~iy == 0) != (iy & ~ix == 0):
                return PartitionVerdict(False, (x, y), "excluded")
    return PartitionVerdict(True, None, "excluded")


def check_reduct_sufficient(c: Covering) -> bool | None:
    """True when the reduct is a partition; None means inconclusive.

    A partition reduct guarantees the induced neighborhoods form a
    partition, but the converse fails, so a non-partition reduct proves
    nothing and is never reported as False.
    """
    return True if is_partition(reduct(c)) else None


def check_uniform_sufficient(c: Covering) -> bool | None:
    """True when every block is uniform; None means inconclusive.

    All blocks uniform guarantees the induced neighborhoods form a
    partition; the converse fails, so non-uniformity proves nothing.
    """
    return True if all_uniform(c) else None


@dataclass(frozen=True)
class Report:
    """Everything the decision routes know about one covering.

    ``covering`` is the canonical form of the input; ``uniform`` flags
    follow its block order. ``neighborhoods`` is indexed by element.
    """

    covering: Covering
    neighborhoods: tuple[Block, ...]
    induced: Covering
    reduct: Covering
    degrees: DegreeTable
    uniform: tuple[bool, ...]
    excluded: PartitionVerdict
    oracle: PartitionVerdict
    reduct_sufficient: bool | None
    uniform_sufficient: bool | None

    @property
    def is_partition(self) -> bool:
        return self.excluded.is_partition


def full_report(c: Covering) -> Report:
    """Run every decision route and bundle the results.

    Raises ``InternalDisagreement`` if the excluded-number verdict ever
    differs from the neighborhood oracle; that can only mean a bug.
    """
    c = canonical_form(c)
    excluded = check_excluded_number(c)
    oracle = oracle_is_neighborhood_partition(c)
    if excluded.is_partition != oracle.is_partition:
        raise InternalDisagreement(
            f"excluded-number verdict {excluded.is_partition} vs "
            f"neighborhood oracle {oracle.is_partition}"
        )
    table = degree_table(c)
    deg = table.membership
    uniform = []
    for b in c.blocks:
        ms = b.members()
        first = deg[ms[0]]
        uniform.append(all(deg[x] == first for x in ms[1:]))
    return Report(
        covering=c,
        neighborhoods=tuple(Block(m) for m in neighborhood_masks(c)),
        induced=neighborhoods_family(c),
        reduct=reduct(c),
        degrees=table,
        uniform=tuple(uniform),
        excluded=excluded,
        oracle=oracle,
        reduct_sufficient=check_reduct_sufficient(c),
        uniform_sufficient=check_uniform_sufficient(c),
    )
