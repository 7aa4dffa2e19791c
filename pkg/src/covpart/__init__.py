"""covpart: decide whether the neighborhoods induced by a covering of a
finite universe form a partition, straight from the covering itself.

The exact decision runs on pairwise repeat-degree counts; a neighborhood
oracle, two sufficient shortcuts and three operator-level
characterizations cross-check it. Everything is deterministic and all
types are immutable.
"""

from .approx_ops import (
    EXHAUSTIVE_DEFAULT_CAP,
    lower_by_all_neighborhoods,
    lower_by_neighborhood,
    lower_fixed_by_upper,
    lower_maps_coincide,
    singleton_upper_matches_neighborhood,
    upper_by_blocks,
    upper_by_neighborhood,
)
from .core import (
    Block,
    Covering,
    CoveringError,
    DuplicateBlock,
    DuplicateBlockWarning,
    EmptyBlock,
    EmptyUniverse,
    Family,
    IndexOutOfRange,
    InternalDisagreement,
    InvalidLabel,
    NotACovering,
    PartitionVerdict,
    Universe,
    UniverseTooLarge,
    UnknownLabel,
    block_sort_key,
    build_covering,
    canonical_form,
    infer_covering,
    is_partition,
)
from .covgen import (
    ENUMERATION_MAX_N,
    Xoshiro256StarStar,
    default_labels,
    enumerate_coverings,
    random_covering,
)
from .degrees import (
    DegreeTable,
    all_uniform,
    common_block_repeat_degree,
    degree_table,
    excluded_number,
    incidence_masks,
    is_uniform_block,
    membership_repeat_degree,
)
from .fileformat import (
    ParseError,
    UnprintableLabel,
    format_covering,
    parse_covering_file,
    parse_covering_text,
    write_covering,
)
from .neighborhoods import (
    neighborhood,
    neighborhood_masks,
    neighborhoods_family,
    oracle_is_neighborhood_partition,
)
from .partition_check import (
    Report,
    check_excluded_number,
    check_reduct_sufficient,
    check_uniform_sufficient,
    full_report,
)
from .reduction import is_reducible, reduct

__version__ = "0.1.0"

__all__ = [
    "Block",
    "Covering",
    "CoveringError",
    "DegreeTable",
    "DuplicateBlock",
    "DuplicateBlockWarning",
    "EmptyBlock",
    "EmptyUniverse",
    "EXHAUSTIVE_DEFAULT_CAP",
    "ENUMERATION_MAX_N",
    "Family",
    "IndexOutOfRange",
    "InternalDisagreement",
    "InvalidLabel",
    "NotACovering",
    "ParseError",
    "PartitionVerdict",
    "Report",
    "Universe",
    "UniverseTooLarge",
    "UnknownLabel",
    "UnprintableLabel",
    "Xoshiro256StarStar",
    "all_uniform",
    "block_sort_key",
    "build_covering",
    "canonical_form",
    "check_excluded_number",
    "check_reduct_sufficient",
    "check_uniform_sufficient",
    "common_block_repeat_degree",
    "default_labels",
    "degree_table",
    "enumerate_coverings",
    "excluded_number",
    "format_covering",
    "full_report",
    "incidence_masks",
    "infer_covering",
    "is_partition",
    "is_reducible",
    "is_uniform_block",
    "lower_by_all_neighborhoods",
    "lower_by_neighborhood",
    "lower_fixed_by_upper",
    "lower_maps_coincide",
    "membership_repeat_degree",
    "neighborhood",
    "neighborhood_masks",
    "neighborhoods_family",
    "oracle_is_neighborhood_partition",
    "parse_covering_file",
    "parse_covering_text",
    "random_covering",
    "reduct",
    "singleton_upper_matches_neighborhood",
    "upper_by_blocks",
    "upper_by_neighborhood",
    "write_covering",
]
