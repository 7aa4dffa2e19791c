"""Core domain model: universes, blocks, coverings and partitions.

Element labels are arbitrary non-empty strings at the I/O boundary. All
computation happens on dense element indices 0..n-1, and index sets are
stored as integer bitmasks, so set algebra is exact integer arithmetic.
Every type here is immutable after construction and safe to share
between threads or tasks.
"""

import warnings
from dataclasses import dataclass, field

from ._bits import iter_bits, mask_of, members

__all__ = [
    "Block",
    "Covering",
    "CoveringError",
    "DuplicateBlock",
    "DuplicateBlockWarning",
    "EmptyBlock",
    "EmptyUniverse",
    "Family",
    "IndexOutOfRange",
    "InternalDisagreement",
    "InvalidLabel",
    "NotACovering",
    "PartitionVerdict",
    "Universe",
    "UniverseTooLarge",
    "UnknownLabel",
    "block_sort_key",
    "build_covering",
    "canonical_form",
    "infer_covering",
    "is_partition",
]


class CoveringError(Exception):
    """Base class for domain validation failures."""


class EmptyUniverse(CoveringError):
    """The universe has no elements."""


class InvalidLabel(CoveringError):
    """An element label is empty, not a string, or repeated."""


class EmptyBlock(CoveringError):
    """A block has no members (the empty set is never a covering block)."""


class UnknownLabel(CoveringError):
    """A block refers to a label outside the declared universe."""


class NotACovering(CoveringError):
    """The blocks do not cover the whole universe."""


class IndexOutOfRange(CoveringError):
    """An element or block index is outside its valid range."""


class UniverseTooLarge(CoveringError):
    """The universe exceeds the size cap of an exhaustive procedure."""


class DuplicateBlock(CoveringError):
    """A family was constructed with two blocks of identical members."""


class InternalDisagreement(CoveringError):
    """Two decision routes that must always agree returned different
    verdicts. Signals an implementation bug, never a valid input state."""


class DuplicateBlockWarning(UserWarning):
    """Raw input repeated a block; the duplicate was collapsed."""


@dataclass(frozen=True)
class Universe:
    """Ordered finite set of distinct element labels.

    Labels map bijectively onto the dense indices 0..n-1; the mapping is
    fixed at construction and used by every other type in the library.
    """

    labels: tuple[str, ...]
    _index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        labels = tuple(self.labels)
        object.__setattr__(self, "labels", labels)
        if not labels:
            raise EmptyUniverse("a universe needs at least one element")
        index = {}
        for i, lab in enumerate(labels):
            if not isinstance(lab, str) or not lab:
                raise InvalidLabel(f"label {lab!r} is not a non-empty string")
            if lab in index:
                raise InvalidLabel(f"duplicate label {lab!r}")
            index[lab] = i
        object.__setattr__(self, "_index", index)

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def full_mask(self) -> int:
        """Bitmask with every element index set."""
        return (1 << len(self.labels)) - 1

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise UnknownLabel(f"unknown label {label!r}") from None

    def label(self, x: int) -> str:
        self.check_index(x)
        return self.labels[x]

    def labels_of(self, mask: int) -> tuple[str, ...]:
        """Labels of the elements in a bitmask, in index order."""
        return tuple(self.labels[i] for i in iter_bits(mask))

    def check_index(self, x: int) -> None:
        if not isinstance(x, int) or not 0 <= x < len(self.labels):
            raise IndexOutOfRange(
                f"element index {x!r} not in 0..{len(self.labels) - 1}"
            )


@dataclass(frozen=True)
class Block:
    """Nonempty set of element indices, stored as a bitmask."""

    mask: int

    def __post_init__(self):
        if not isinstance(self.mask, int) or self.mask <= 0:
            raise EmptyBlock("a block must be a nonempty set of element indices")

    @classmethod
    def from_indices(cls, indices) -> "Block":
        return cls(mask_of(indices))

    def members(self) -> tuple[int, ...]:
        return members(self.mask)

    def __contains__(self, x) -> bool:
        return isinstance(x, int) and x >= 0 and bool((self.mask >> x) & 1)

    def __iter__(self):
        return iter_bits(self.mask)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def issubset(self, other: "Block") -> bool:
        return self.mask & ~other.mask == 0

    def isdisjoint(self, other: "Block") -> bool:
        return self.mask & other.mask == 0


def block_sort_key(mask: int) -> tuple:
    """Canonical block order: minimum element, then size, then the sorted
    member list compared lexicographically."""
    m = members(mask)
    return (m[0], len(m), m)


@dataclass(frozen=True)
class Family:
    """Duplicate-free family of blocks over one universe.

    Unlike a covering, a family may leave elements uncovered; it is the
    shape of derived results such as induced neighborhood families.
    """

    universe: Universe
    blocks: tuple[Block, ...]

    def __post_init__(self):
        blocks = tuple(self.blocks)
        object.__setattr__(self, "blocks", blocks)
        full = self.universe.full_mask
        seen = set()
        for b in blocks:
            if b.mask & ~full:
                raise IndexOutOfRange(
                    f"block members {b.members()} exceed universe size {self.universe.n}"
                )
            if b.mask in seen:
                raise DuplicateBlock(
                    f"duplicate block {{{' '.join(self.universe.labels_of(b.mask))}}}"
                )
            seen.add(b.mask)

    @property
    def union_mask(self) -> int:
        u = 0
        for b in self.blocks:
            u |= b.mask
        return u

    def masks(self) -> tuple[int, ...]:
        return tuple(b.mask for b in self.blocks)

    @classmethod
    def from_masks(cls, universe: Universe, masks) -> "Family":
        """Build from raw bitmasks: duplicates collapsed, canonical order."""
        ordered = sorted(set(masks), key=block_sort_key)
        return cls(universe, tuple(Block(m) for m in ordered))


class Covering(Family):
    """Family whose nonempty blocks jointly cover the whole universe."""

    def __post_init__(self):
        super().__post_init__()
        missing = self.universe.full_mask & ~self.union_mask
        if missing:
            labs = " ".join(self.universe.labels_of(missing))
            raise NotACovering(f"elements not covered by any block: {labs}")


@dataclass(frozen=True)
class PartitionVerdict:
    """Outcome of a partition decision.

    ``witness`` is an element index pair explaining the failure and is
    present exactly when the verdict is negative; ``method`` names the
    decision route that produced the verdict.
    """

    is_partition: bool
    witness: tuple[int, int] | None
    method: str

    def __post_init__(self):
        if (self.witness is None) != self.is_partition:
            raise ValueError("witness must be present exactly when verdict is negative")


def build_covering(labels, raw_blocks) -> Covering:
    """Validate raw label blocks against a declared universe.

    Blocks are mapped to dense indices, deduplicated with set semantics
    (a ``DuplicateBlockWarning`` per repeat) and stored in canonical
    order. Raises ``EmptyUniverse``, ``InvalidLabel``, ``EmptyBlock``,
    ``UnknownLabel`` or ``NotACovering`` on bad input.
    """
    universe = Universe(tuple(labels))
    masks = []
    seen = set()
    for raw in raw_blocks:
        idxs = [universe.index(lab) for lab in raw]
        if not idxs:
            raise EmptyBlock("covering blocks must be nonempty")
        m = mask_of(idxs)
        if m in seen:
            warnings.warn(
                DuplicateBlockWarning(
                    f"duplicate block {{{' '.join(universe.labels_of(m))}}} collapsed"
                ),
                stacklevel=2,
            )
            continue
        seen.add(m)
        masks.append(m)
    ordered = sorted(masks, key=block_sort_key)
    return Covering(universe, tuple(Block(m) for m in ordered))


def infer_covering(raw_blocks) -> Covering:
    """Build a covering whose universe is the union of the blocks.

    Labels are ordered by first appearance, scanning blocks in input
    order, so ``NotACovering`` cannot occur here.
    """
    raw_blocks = [list(raw) for raw in raw_blocks]
    labels = []
    seen = set()
    for raw in raw_blocks:
        for lab in raw:
            if lab not in seen:
                seen.add(lab)
                labels.append(lab)
    if not labels:
        raise EmptyUniverse("cannot infer a universe from zero blocks")
    return build_covering(labels, raw_blocks)


def is_partition(f: Family) -> bool:
    """True iff the family is nonempty, pairwise disjoint and covers the
    universe. Pure predicate; never raises on a valid family."""
    if not f.blocks:
        return False
    union = 0
    total = 0
    for b in f.blocks:
        union |= b.mask
        total += b.mask.bit_count()
    return union == f.universe.full_mask and total == f.universe.n


def canonical_form(c: Covering) -> Covering:
    """Blocks sorted into canonical order; idempotent. Two coverings are
    semantically equal exactly when their canonical forms are equal."""
    ordered = tuple(sorted(c.blocks, key=lambda b: block_sort_key(b.mask)))
    return type(c)(c.universe, ordered)
