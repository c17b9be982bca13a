"""Column view of the Natural Matrix and its packing bijection.

Cell (x, y) holds ``(2x + 1) * 2**y - 1``: row x is Mersenne tree x and
column y is the progression ``M_y + 2**(y+1) * k``.
"""

from __future__ import annotations

from typing import NamedTuple

from natmat.forest import PartitionReport, _tally
from natmat.numeric import check_index, check_nat, mersenne, rational_series, unit_suffix_len


class Coord(NamedTuple):
    x: int
    y: int


class Progression(NamedTuple):
    n: int
    first: int
    diff: int


def progression(n: int) -> Progression:
    check_index(n, "n")
    return Progression(n, mersenne(n), 1 << (n + 1))


def progression_term(n: int, k: int) -> int:
    check_index(n, "n")
    check_nat(k, "k")
    return mersenne(n) + (k << (n + 1))


def progression_gf_coeffs(n: int, count: int) -> list[int]:
    """Coefficients of (M_n + (M_n + 2)x) / (1 - x)^2."""
    m = mersenne(n)
    return rational_series([m, m + 2], [1, -2, 1], count)


def pack(c: tuple[int, int]) -> int:
    x, y = c
    check_nat(x, "x")
    check_index(y, "y")
    return ((2 * x + 1) << y) - 1


def pack_transposed(c: tuple[int, int]) -> int:
    x, y = c
    return pack((y, x))


def unpack(n: int) -> Coord:
    """Inverse of :func:`pack`: split n + 1 into 2**y times an odd factor."""
    y = unit_suffix_len(n)
    x = (((n + 1) >> y) - 1) // 2
    return Coord(x, y)


def cantor_pack(c: tuple[int, int]) -> int:
    x, y = c
    check_nat(x, "x")
    check_nat(y, "y")
    return (3 * x + (x + y) ** 2 + y) // 2


def verify_progression_partition(bound: int) -> PartitionReport:
    """Check that every n < bound lies in exactly one progression.

    ``part_sizes[y]`` is the number of members of column y below ``bound``.
    """
    if bound < 1:
        raise ValueError("bound must be >= 1")
    report = PartitionReport(bound)
    counts = bytearray(bound)
    n = 0
    while mersenne(n) < bound:
        step = 1 << (n + 1)
        for v in range(mersenne(n), bound, step):
            counts[v] = min(counts[v] + 1, 255)
        report.part_sizes[n] = len(range(mersenne(n), bound, step))
        n += 1
    _tally(report, counts)

    for v in range(bound):
        x, y = unpack(v)
        if progression_term(y, x) != v:
            report.round_trip_failures += 1
            report._fail(v)
        report.checked += 1
    return report


def verify_bijection(bound: int, rows: int = 512, cols: int = 10) -> tuple[int, int | None]:
    """Round-trip pack/unpack over ``[0, bound)`` and a ``rows x cols`` grid.

    Returns ``(checked, first_failure)``; the failure is an int for the
    range check or a coordinate tuple for the grid check.
    """
    checked = 0
    for n in range(bound):
        if pack(unpack(n)) != n:
            return checked, n
        checked += 1
    seen = set()
    for x in range(rows):
        for y in range(cols):
            v = pack((x, y))
            if unpack(v) != (x, y) or v in seen:
                return checked, (x, y)
            seen.add(v)
            checked += 1
    return checked, None
