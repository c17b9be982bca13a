"""Unary Mersenne trees.

Tree k is rooted at the even number 2k and grows by ``a -> 2a + 1``, so its
node at depth n is ``(2k + 1) * 2**n - 1``. Every natural number sits in
exactly one tree.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from natmat.errors import EvenInput
from natmat.numeric import check_index, check_nat, mersenne, rational_series, unit_suffix_len


def successor(a: int) -> int:
    check_nat(a, "a")
    return 2 * a + 1


def predecessor(a: int) -> int:
    """Parent of an odd node. Even numbers are roots and have none."""
    check_nat(a, "a")
    if a % 2 == 0:
        raise EvenInput(f"{a} is even: roots have no predecessor")
    return (a - 1) // 2


def root_of(t: int) -> int:
    """Root of the tree containing ``t``: strip the unit suffix in one shift."""
    check_nat(t, "t")
    m = unit_suffix_len(t)
    return (t - mersenne(m)) >> m


def root_of_iterated(t: int) -> int:
    check_nat(t, "t")
    while t % 2 == 1:
        t = predecessor(t)
    return t


def tree_index(t: int) -> int:
    return root_of(t) // 2


def node_depth(t: int) -> int:
    """Steps from the root; 0 for even numbers."""
    return unit_suffix_len(t)


def tree_term(k: int, n: int) -> int:
    check_nat(k, "k")
    check_index(n, "n")
    return ((2 * k + 1) << n) - 1


def tree_prefix(k: int, count: int) -> list[int]:
    if count < 1:
        raise ValueError("count must be >= 1")
    out = [tree_term(k, 0)]
    for _ in range(count - 1):
        out.append(successor(out[-1]))
    return out


def tree_gf_coeffs(k: int, count: int) -> list[int]:
    """Coefficients of (2k - (2k-1)x) / (1 - 3x + 2x^2)."""
    check_nat(k, "k")
    return rational_series([2 * k, -(2 * k - 1)], [1, -3, 2], count)


@dataclass
class PartitionReport:
    """Summary of a finite-range partition check.

    ``parts`` counts the distinct trees (or progressions) that were hit;
    ``part_sizes`` maps a part index to the number of members below ``bound``.
    """

    bound: int
    checked: int = 0
    collisions: int = 0
    missing: int = 0
    round_trip_failures: int = 0
    first_failure: int | None = None
    part_sizes: dict[int, int] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.checked == self.bound and not (self.collisions or self.missing or self.round_trip_failures)

    @property
    def parts(self) -> int:
        return len(self.part_sizes)

    def density(self, part: int) -> Fraction:
        return Fraction(self.part_sizes.get(part, 0), self.bound)

    def _fail(self, n: int) -> None:
        if self.first_failure is None or n < self.first_failure:
            self.first_failure = n


def _tally(report: PartitionReport, counts: bytearray) -> None:
    for n, c in enumerate(counts):
        if c == 0:
            report.missing += 1
            report._fail(n)
        elif c > 1:
            report.collisions += 1
            report._fail(n)


def verify_tree_partition(bound: int) -> PartitionReport:
    """Check that every n < bound lies in exactly one Mersenne tree.

    Two routes: enumerate tree nodes below ``bound`` from the closed form and
    count hits per n, then map each n back through root extraction and
    confirm the closed form reproduces it.
    """
    if bound < 1:
        raise ValueError("bound must be >= 1")
    report = PartitionReport(bound)
    counts = bytearray(bound)
    for k in range((bound + 1) // 2):
        n = 0
        v = 2 * k
        while v < bound:
            counts[v] = min(counts[v] + 1, 255)
            report.part_sizes[k] = report.part_sizes.get(k, 0) + 1
            n += 1
            v = tree_term(k, n)
    _tally(report, counts)

    for n in range(bound):
        k = tree_index(n)
        if tree_term(k, node_depth(n)) != n:
            report.round_trip_failures += 1
            report._fail(n)
        report.checked += 1
    return report
