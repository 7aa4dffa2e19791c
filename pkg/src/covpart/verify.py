"""Whole-library cross-verification.

Runs every decision route and every stated invariant against a stream of
coverings: exhaustively enumerated ones for tiny universes, seeded random
ones beyond. All routes must agree on every covering; any violation is
collected together with the covering in replayable text form. This is the
engine behind the ``verify`` CLI command and the acceptance suite.
"""

from dataclasses import dataclass, field

from .approx_ops import (
    lower_fixed_by_upper,
    lower_maps_coincide,
    singleton_upper_matches_neighborhood,
)
from .core import Covering
from .covgen import Xoshiro256StarStar, enumerate_coverings, random_covering
from .degrees import degree_table
from .fileformat import format_covering
from .neighborhoods import neighborhood_masks, oracle_is_neighborhood_partition
from .partition_check import (
    check_excluded_number,
    check_reduct_sufficient,
    check_uniform_sufficient,
)
from .reduction import _reducible_in, reduct

__all__ = ["Failure", "Summary", "check_covering", "run_exhaustive", "run_randomized", "run_suite"]

ORDER_TRIALS = 3


@dataclass(frozen=True)
class Failure:
    message: str
    covering_text: str
    replay: str = ""


@dataclass
class Summary:
    exhaustive_coverings: int = 0
    random_coverings: int = 0
    assertion_groups: int = 0
    failures: list[Failure] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def _sequential_reduct_masks(masks, rng: Xoshiro256StarStar) -> frozenset:
    """Reduct by deleting one randomly chosen reducible block per step."""
    cur = list(masks)
    while True:
        reducible = [i for i in range(len(cur)) if _reducible_in(cur, i)]
        if not reducible:
            return frozenset(cur)
        del cur[reducible[rng.below(len(reducible))]]


def check_covering(c: Covering, *, subset_ops: bool, order_rng: Xoshiro256StarStar) -> tuple[int, list[str]]:
    """Run the full assertion battery on one covering.

    Returns (number of assertion groups run, failure notes). With
    ``subset_ops`` the two 2^n-subset characterizations are included;
    they are meant for small universes only.
    """
    notes = []
    n = c.universe.n
    groups = 0

    nbhd = neighborhood_masks(c)
    oracle = oracle_is_neighborhood_partition(c)
    excl = check_excluded_number(c)
    table = degree_table(c)
    verdict = oracle.is_partition

    # The exact routes agree.
    groups += 1
    if excl.is_partition != verdict:
        notes.append(
            f"excluded-number verdict {excl.is_partition} != oracle verdict {verdict}"
        )

    # Witnesses explain the failure they report.
    groups += 1
    if excl.witness is not None:
        x, y = excl.witness
        zeros = (table.excluded(x, y) == 0) + (table.excluded(y, x) == 0)
        if zeros != 1:
            notes.append(f"excluded witness ({x},{y}) has {zeros} zero excluded numbers")
    if oracle.witness is not None:
        x, y = oracle.witness
        if nbhd[x] == nbhd[y] or not nbhd[x] & nbhd[y]:
            notes.append(f"oracle witness ({x},{y}) neighborhoods do not conflict")

    # Operator characterizations agree with the oracle.
    if subset_ops:
        groups += 1
        if lower_maps_coincide(c) != verdict:
            notes.append("lower-operator agreement test disagrees with oracle")
        if lower_fixed_by_upper(c) != verdict:
            notes.append("upper-fixes-lower test disagrees with oracle")
    groups += 1
    if singleton_upper_matches_neighborhood(c) != verdict:
        notes.append("singleton upper-image test disagrees with oracle")

    # Removing reducible blocks leaves neighborhoods unchanged.
    groups += 1
    red = reduct(c)
    if set(neighborhood_masks(red)) != set(nbhd):
        notes.append("induced neighborhoods changed under reduct")

    # Reduct is independent of deletion order.
    groups += 1
    one_pass = frozenset(red.masks())
    for _ in range(ORDER_TRIALS):
        seq = _sequential_reduct_masks(c.masks(), order_rng)
        if seq != one_pass:
            notes.append("sequential reduct differs from one-pass reduct")
            break

    # Membership in a neighborhood is exactly a zero excluded number.
    groups += 1
    for x in range(n):
        mx = nbhd[x]
        for y in range(n):
            if bool((mx >> y) & 1) != (table.excluded(x, y) == 0):
                notes.append(f"excluded number and neighborhood disagree at ({x},{y})")
                break
        else:
            continue
        break

    # Neighborhood nesting: y in N(x) forces N(y) inside N(x).
    groups += 1
    for x in range(n):
        mx = nbhd[x]
        rem = mx
        while rem:
            low = rem & -rem
            y = low.bit_length() - 1
            rem ^= low
            if nbhd[y] & ~mx:
                notes.append(f"N({y}) not contained in N({x}) despite {y} in N({x})")
                rem = 0
                break

    # Degree-table invariants: positivity, diagonal, symmetry, bound.
    groups += 1
    deg = table.membership
    bad = False
    for x in range(n):
        if deg[x] < 1 or table.common(x, x) != deg[x]:
            notes.append(f"degree invariants broken at element {x}")
            bad = True
            break
    if not bad:
        for x in range(n):
            dx = deg[x]
            for y in range(x + 1, n):
                common = table.common(x, y)
                if common != table.common(y, x) or common > dx or common > deg[y]:
                    notes.append(f"pair-degree invariants broken at ({x},{y})")
                    bad = True
                    break
            if bad:
                break

    # Sufficient shortcuts never contradict the oracle.
    groups += 1
    if check_reduct_sufficient(c) is True and not verdict:
        notes.append("reduct shortcut claims partition against the oracle")
    if check_uniform_sufficient(c) is True and not verdict:
        notes.append("uniform shortcut claims partition against the oracle")

    return groups, notes


def run_exhaustive(max_n: int, summary: Summary, order_seed: int = 0x5EED) -> None:
    """Phase 1: every covering of every universe of size 1..max_n."""
    order_rng = Xoshiro256StarStar(order_seed)
    for n in range(1, max_n + 1):
        for c in enumerate_coverings(n):
            groups, notes = check_covering(c, subset_ops=True, order_rng=order_rng)
            summary.exhaustive_coverings += 1
            summary.assertion_groups += groups
            for note in notes:
                summary.failures.append(Failure(note, format_covering(c)))


def run_randomized(
    samples: int,
    seed: int,
    summary: Summary,
    n_lo: int = 5,
    n_hi: int = 24,
) -> None:
    """Phase 2: seeded random coverings, replayable from the master seed.

    Each sample derives (n, m, density, sub-seed) from the master stream;
    failures carry the exact ``random_covering`` call that rebuilds the
    covering. The 2^n-subset characterizations are skipped here.
    """
    master = Xoshiro256StarStar(seed)
    for _ in range(samples):
        n = n_lo + master.below(n_hi - n_lo + 1)
        m = 1 + master.below(n)
        density = master.unit()
        sub_seed = master.next64()
        c = random_covering(n, m, density, sub_seed)
        order_rng = Xoshiro256StarStar(sub_seed ^ 0xD1CE)
        groups, notes = check_covering(c, subset_ops=False, order_rng=order_rng)
        summary.random_coverings += 1
        summary.assertion_groups += groups
        replay = f"random_covering(n={n}, m={m}, density={density!r}, seed={sub_seed})"
        for note in notes:
            summary.failures.append(Failure(note, format_covering(c), replay))


def run_suite(
    max_n: int = 4,
    samples: int = 1000,
    seed: int = 1,
    n_lo: int = 5,
    n_hi: int = 24,
) -> Summary:
    """Both phases; ``samples=0`` skips the randomized phase."""
    summary = Summary()
    run_exhaustive(max_n, summary)
    if samples > 0:
        run_randomized(samples, seed, summary, n_lo=n_lo, n_hi=n_hi)
    return summary
