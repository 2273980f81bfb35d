"""Transformations of a finite set that preserve a set partition.

Predicates, exhaustive enumeration, exact counting, and constructions for
the semigroup of block-preserving selfmaps on {0, ..., n-1}, the
subsemigroup of those whose image meets every block, and its group of
units.
"""

from .core import (
    DEFAULT_GUARD,
    BlockMap,
    BlockMapFamily,
    CharacterMap,
    GuardExceededError,
    ParseError,
    PartitionProfile,
    SetPartition,
    Transformation,
    compose,
    format_partition,
    format_transformation,
    iter_partitions,
    parse_partition,
    parse_transformation,
    profile_of,
)
from .counting import (
    count_sigma_direct,
    count_sigma_grouped,
    count_sigma_idempotents,
    count_t,
    count_units,
    idempotent_count,
)
from .cycles import (
    CycleDecomposition,
    decompose,
    find_preserved_partition,
    kernel_partition,
    preserved_m_partition_exists,
    search_unit_m_partition,
)
from .enumeration import (
    ChiClass,
    Enumeration,
    chi_classes,
    enumerate_idempotents,
    enumerate_sigma,
    enumerate_t,
    enumerate_units,
    iter_idempotents,
    iter_sigma,
    iter_t,
    iter_units,
)
from .membership import (
    NotInSigmaError,
    NotPreservingError,
    block_map_family,
    character,
    character_injective,
    in_sigma,
    in_units,
    is_e_star_preserving,
    is_idempotent,
    preserves,
    sigma_idempotent_via_blocks,
    sigma_via_character,
    sigma_via_topology,
)

__version__ = "0.1.0"

__all__ = [
    "BlockMap",
    "BlockMapFamily",
    "CharacterMap",
    "ChiClass",
    "CycleDecomposition",
    "DEFAULT_GUARD",
    "Enumeration",
    "GuardExceededError",
    "NotInSigmaError",
    "NotPreservingError",
    "ParseError",
    "PartitionProfile",
    "SetPartition",
    "Transformation",
    "block_map_family",
    "character",
    "character_injective",
    "chi_classes",
    "compose",
    "count_sigma_direct",
    "count_sigma_grouped",
    "count_sigma_idempotents",
    "count_t",
    "count_units",
    "decompose",
    "enumerate_idempotents",
    "enumerate_sigma",
    "enumerate_t",
    "enumerate_units",
    "find_preserved_partition",
    "format_partition",
    "format_transformation",
    "idempotent_count",
    "in_sigma",
    "in_units",
    "is_e_star_preserving",
    "is_idempotent",
    "iter_idempotents",
    "iter_partitions",
    "iter_sigma",
    "iter_t",
    "iter_units",
    "kernel_partition",
    "parse_partition",
    "parse_transformation",
    "preserved_m_partition_exists",
    "preserves",
    "profile_of",
    "search_unit_m_partition",
    "sigma_idempotent_via_blocks",
    "sigma_via_character",
    "sigma_via_topology",
]
