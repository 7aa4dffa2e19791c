"""Timing comparison of the partition decision routes.

Three routes answer the same question: the pairwise excluded-number
test, the neighborhood oracle, and reduce-first (shrink to the reduct,
then decide there, which is sound because the reduct induces the same
neighborhoods). Rows report median wall time per route; verdicts must
agree on every row, and with a fixed seed the verdict columns are
identical across runs.
"""

import statistics
import time
from dataclasses import dataclass

from .core import Covering, is_partition
from .covgen import Xoshiro256StarStar, random_covering
from .neighborhoods import oracle_is_neighborhood_partition
from .partition_check import check_excluded_number
from .reduction import reduct

__all__ = ["BenchRow", "CSV_HEADER", "METHOD_NAMES", "rows_to_csv", "run_bench"]

CSV_HEADER = "n,m,density,method,median_seconds,partition,agreement"


def _verdict_excluded(c: Covering) -> bool:
    return check_excluded_number(c).is_partition


def _verdict_oracle(c: Covering) -> bool:
    return oracle_is_neighborhood_partition(c).is_partition


def _verdict_reduct_first(c: Covering) -> bool:
    r = reduct(c)
    if is_partition(r):
        return True
    return check_excluded_number(r).is_partition


_METHODS = (
    ("excluded", _verdict_excluded),
    ("oracle", _verdict_oracle),
    ("reduct-first", _verdict_reduct_first),
)

METHOD_NAMES = tuple(name for name, _ in _METHODS)


@dataclass(frozen=True)
class BenchRow:
    n: int
    m: int
    density: float
    method: str
    median_seconds: float
    partition: bool
    agreement: bool


def run_bench(n_list, m_list, density_list, seed: int, repetitions: int) -> list[BenchRow]:
    """One covering per (n, m, density) cell, each route timed ``repetitions`` times."""
    if repetitions < 1:
        raise ValueError(f"repetitions must be >= 1, got {repetitions}")
    master = Xoshiro256StarStar(seed)
    rows = []
    for n in n_list:
        for m in m_list:
            for density in density_list:
                sub_seed = master.next64()
                c = random_covering(n, m, density, sub_seed)
                results = []
                for name, fn in _METHODS:
                    times = []
                    verdict = None
                    for _ in range(repetitions):
                        t0 = time.perf_counter()
                        verdict = fn(c)
                        times.append(time.perf_counter() - t0)
                    results.append((name, statistics.median(times), verdict))
                agreement = len({v for _, _, v in results}) == 1
                for name, median, verdict in results:
                    rows.append(
                        BenchRow(n, m, density, name, median, verdict, agreement)
                    )
    return rows


def rows_to_csv(rows) -> str:
    lines = [CSV_HEADER]
    for r in rows:
        lines.append(
            f"{r.n},{r.m},{r.density},{r.method},{r.median_seconds:.9f},"
            f"{str(r.partition).lower()},{str(r.agreement).lower()}"
        )
    return "\n".join(lines) + "\n"
