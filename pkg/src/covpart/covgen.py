"""Covering generators.

Exhaustive enumeration covers every duplicate-free family of nonempty
blocks over tiny universes; the seeded random scheme spans the spectrum
from exact partitions (density 0) to heavily overlapping blocks by
growing a random partition. Both are deterministic: enumeration order is
fixed, and random coverings are pure functions of their arguments.

The random stream comes from xoshiro256** (the published constants),
with its 256-bit state expanded from one 64-bit seed via splitmix64, so
the exact same coverings can be regenerated anywhere from a seed.
"""

from collections.abc import Iterator

from .core import Covering, EmptyUniverse, Universe, UniverseTooLarge

__all__ = [
    "ENUMERATION_MAX_N",
    "Xoshiro256StarStar",
    "default_labels",
    "enumerate_coverings",
    "random_covering",
]

ENUMERATION_MAX_N = 4

_MASK64 = (1 << 64) - 1


def _splitmix64(state: int) -> tuple[int, int]:
    state = (state + 0x9E3779B97F4A7C15) & _MASK64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return state, z ^ (z >> 31)


def _rotl(x: int, k: int) -> int:
    return ((x << k) | (x >> (64 - k))) & _MASK64


class Xoshiro256StarStar:
    """xoshiro256** 64-bit generator, seeded through splitmix64."""

    def __init__(self, seed: int):
        state = seed & _MASK64
        s = []
        for _ in range(4):
            state, v = _splitmix64(state)
            s.append(v)
        if not any(s):
            s[0] = 1  # the all-zero state is the one invalid state
        self._s = s

    def next64(self) -> int:
        s0, s1, s2, s3 = self._s
        result = (_rotl((s1 * 5) & _MASK64, 7) * 9) & _MASK64
        t = (s1 << 17) & _MASK64
        s2 ^= s0
        s3 ^= s1
        s1 ^= s2
        s0 ^= s3
        s2 ^= t
        s3 = _rotl(s3, 45)
        self._s = [s0, s1, s2, s3]
        return result

    def below(self, bound: int) -> int:
        """Uniform integer in [0, bound), by rejection; bound >= 1."""
        if bound < 1:
            raise ValueError(f"bound must be >= 1, got {bound}")
        limit = (_MASK64 + 1) - ((_MASK64 + 1) % bound)
        while True:
            v = self.next64()
            if v < limit:
                return v % bound

    def unit(self) -> float:
        """Float in [0, 1) carrying 53 random bits."""
        return (self.next64() >> 11) * 2.0 ** -53


def default_labels(n: int) -> tuple[str, ...]:
    """Labels "1".."n" for generated universes."""
    return tuple(str(i + 1) for i in range(n))


def enumerate_coverings(n: int, labels=None) -> Iterator[Covering]:
    """Yield every covering of an n-element universe exactly once.

    Candidates are all 2^(2^n - 1) duplicate-free families of nonempty
    blocks, filtered to those whose union is the universe, in a fixed
    order. Capped at n <= ENUMERATION_MAX_N.
    """
    if n < 1:
        raise EmptyUniverse("enumeration needs n >= 1")
    if n > ENUMERATION_MAX_N:
        raise UniverseTooLarge(
            f"exhaustive enumeration capped at n <= {ENUMERATION_MAX_N}, got {n}"
        )
    universe = Universe(tuple(labels) if labels is not None else default_labels(n))
    if universe.n != n:
        raise ValueError(f"needs exactly {n} labels, got {universe.n}")
    full = (1 << n) - 1
    n_blocks = full  # nonempty subsets: masks 1..full
    for fam in range(1, 1 << n_blocks):
        masks = []
        union = 0
        rem = fam
        while rem:
            low = rem & -rem
            block = low.bit_length()  # bit j encodes the subset with mask j+1
            masks.append(block)
            union |= block
            rem ^= low
        if union == full:
            yield Covering.from_masks(universe, masks)


def random_covering(
    n: int, m: int, density: float, seed: int, labels=None
) -> Covering:
    """Seeded random covering: a pure function of its arguments.

    Starts from a random partition of the universe into at most m cells
    (balls into boxes, empty boxes discarded), then grows each block by
    adding every outside element independently with probability
    ``density``. Density 0 therefore yields exact partitions and values
    near 1 yield heavily overlapping blocks. Duplicates are collapsed and
    any uncovered element would be patched with a singleton block, so the
    result always validates as a covering.
    """
    if n < 1:
        raise EmptyUniverse("random covering needs n >= 1")
    if m < 1:
        raise ValueError(f"block target m must be >= 1, got {m}")
    if not 0.0 <= density <= 1.0:
        raise ValueError(f"density must be in [0, 1], got {density}")
    universe = Universe(tuple(labels) if labels is not None else default_labels(n))
    if universe.n != n:
        raise ValueError(f"needs exactly {n} labels, got {universe.n}")
    rng = Xoshiro256StarStar(seed)
    boxes = [0] * m
    for x in range(n):
        boxes[rng.below(m)] |= 1 << x
    cells = [b for b in boxes if b]
    blocks = []
    for cell in cells:
        grown = cell
        for x in range(n):
            if (cell >> x) & 1:
                continue
            if rng.unit() < density:
                grown |= 1 << x
        blocks.append(grown)
    union = 0
    for b in blocks:
        union |= b
    for x in range(n):  # unreachable for this scheme; kept as a guard
        if not (union >> x) & 1:
            blocks.append(1 << x)
    return Covering.from_masks(universe, blocks)
