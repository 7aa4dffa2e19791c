"""Bitmask helpers for sets of small nonnegative integers."""


def iter_bits(mask):
    """Yield the indices of set bits in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(indices) -> int:
    """Bitmask with the given indices set."""
    m = 0
    for i in indices:
        if i < 0:
            raise ValueError(f"negative index {i}")
        m |= 1 << i
    return m


def members(mask) -> tuple:
    """Set bits of a mask as an ascending tuple of indices."""
    return tuple(iter_bits(mask))
