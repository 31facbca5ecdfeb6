"""Exact Kostka-Foulkes polynomials with closed-form fast paths and independent oracles."""

from .core import (
    ALL_FAST_PATHS,
    CacheConflictError,
    CacheFormatError,
    KostkaCache,
    PreconditionViolated,
    kostka,
    kostka_auto,
    kostka_column,
    kostka_hook,
    kostka_one_row,
    prefix_reduce,
    recursion_children,
)
from .oracles import (
    ContentMismatch,
    Tableau,
    charge,
    enumerate_ssyt,
    kostka_number,
    kostka_via_charge,
    reading_word,
)
from .partitions import (
    Partition,
    PartitionParseError,
    branch_shape,
    conjugate,
    dominates,
    format_partition,
    hook_lengths,
    horizontal_strip_additions,
    multiplicity,
    parse_partition,
    partition,
    partitions_of,
    tail,
    weight,
    weighted_size,
)
from .polynomials import (
    ONE,
    T,
    ZERO,
    NotDivisible,
    TPoly,
    exact_divide,
    norm_factor,
    not_divisible_count,
    t_binomial,
    t_factorial,
    t_integer,
)

__version__ = "0.1.0"
