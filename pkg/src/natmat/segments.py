"""Initial Dyck segments of the matrix rows.

Segment y is the first 2**y cells of column y: the progression starting at
M_y with difference 2**(y+1). All of its terms are Dyck numbers.
"""

from __future__ import annotations

from typing import NamedTuple

from natmat.errors import LimitExceeded, ResourceLimit
from natmat.numeric import check_index, mersenne

MATERIALIZE_MAX_Y = 30


class Segment(NamedTuple):
    y: int
    first: int
    diff: int
    length: int

    def term(self, k: int) -> int:
        if not 0 <= k < self.length:
            raise IndexError(f"segment {self.y} has {self.length} terms, asked for index {k}")
        return self.first + k * self.diff

    @property
    def last(self) -> int:
        return self.term(self.length - 1)


def segment(y: int) -> Segment:
    check_index(y, "y")
    return Segment(y, mersenne(y), 1 << (y + 1), 1 << y)


def segment_terms(y: int, limit: int | None = None) -> list[int]:
    s = segment(y)
    if limit is None:
        if y > MATERIALIZE_MAX_Y:
            raise ResourceLimit(
                f"segment {y} has 2**{y} terms; pass limit= or index the descriptor instead"
            )
        limit = s.length
    elif limit > s.length:
        raise LimitExceeded(f"limit {limit} exceeds segment length {s.length}")
    elif limit < 0:
        raise ValueError("limit must be non-negative")
    return [s.first + k * s.diff for k in range(limit)]


def segment_max_forms(y: int) -> tuple[int, int, int]:
    """The last term of segment y computed three independent ways."""
    m = mersenne(y)
    d = 1 << (y + 1)
    return (
        (mersenne(y + 1) << y) - 1,
        m * (2 * m + 3),
        d * (d - 1) // 2 - 1,
    )


def segment_max(y: int) -> int:
    a, b, c = segment_max_forms(y)
    if not a == b == c:
        raise ArithmeticError(f"max-term identities disagree at y={y}: {a}, {b}, {c}")
    return a


def ap_of_length(k: int) -> list[int]:
    """``k`` consecutive Dyck numbers in arithmetic progression.

    Taken from the segment with index ceil(log2 k), which is the shortest
    segment holding at least k terms.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    level = (k - 1).bit_length()
    return segment_terms(level, k)


def diagonal_max_terms(count: int) -> list[int]:
    if count < 1:
        raise ValueError("count must be >= 1")
    return [segment_max(y) for y in range(count)]
