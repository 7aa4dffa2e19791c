"""Reducible blocks and the covering reduct.

A block is reducible when it equals the union of the other blocks it
contains. Deleting a reducible block keeps the covering property and
changes neither the remaining blocks' reducibility nor the induced
neighborhoods, so the reduct (all reducible blocks removed at once) is
well defined and order-independent.
"""

from .core import Covering, IndexOutOfRange

__all__ = ["is_reducible", "reduct"]


def _reducible_in(masks, k: int) -> bool:
    """Whether masks[k] is the union of the other masks contained in it.

    The family is duplicate-free, so contained blocks are proper subsets;
    any witnessing union can be enlarged to all of them, which avoids a
    subset search.
    """
    target = masks[k]
    union = 0
    for i, m in enumerate(masks):
        if i != k and m & ~target == 0:
            union |= m
            if union == target:
                return True
    return False


def is_reducible(c: Covering, k: int) -> bool:
    """Whether block k of the covering is a union of other blocks."""
    if not isinstance(k, int) or not 0 <= k < len(c.blocks):
        raise IndexOutOfRange(f"block index {k!r} not in 0..{len(c.blocks) - 1}")
    return _reducible_in(c.masks(), k)


def reduct(c: Covering) -> Covering:
    """The covering with every reducible block removed.

    All reducible blocks are identified against the input covering and
    deleted in one pass; the result has no reducible blocks and equals
    the outcome of deleting them one at a time in any order.
    """
    masks = c.masks()
    keep = tuple(
        b for i, b in enumerate(c.blocks) if not _reducible_in(masks, i)
    )
    out = Covering(c.universe, keep)
    kept = out.masks()
    assert not any(
        _reducible_in(kept, i) for i in range(len(kept))
    ), "one-pass deletion left a reducible block"
    return out
