"""Partitions of the naturals into Mersenne trees and power-of-two progressions,
the packing bijection they induce, and a primality lab for the row segments."""

from natmat.errors import (
    CoverageGap,
    EvenInput,
    FetchFailed,
    LimitExceeded,
    MalformedLine,
    NatmatError,
    NotCached,
    ResourceLimit,
    ScanExhausted,
)
from natmat.forest import (
    PartitionReport,
    predecessor,
    root_of,
    successor,
    tree_gf_coeffs,
    tree_index,
    tree_prefix,
    tree_term,
    verify_tree_partition,
)
from natmat.matrix import (
    Coord,
    cantor_pack,
    pack,
    pack_transposed,
    progression,
    progression_gf_coeffs,
    progression_term,
    unpack,
    verify_progression_partition,
)
from natmat.numeric import bits_lsb, from_bits_lsb, is_dyck, is_dyck_oracle, mersenne, unit_suffix_len
from natmat.primes import (
    Certainty,
    PrimalityPolicy,
    census,
    census_range,
    is_prime,
    least_prime,
    linnik_check,
)
from natmat.segments import ap_of_length, diagonal_max_terms, segment, segment_max, segment_terms

__version__ = "0.1.0"
