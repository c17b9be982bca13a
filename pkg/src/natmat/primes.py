"""Primality testing and the prime experiments on row segments.

Below 2**64 a fixed Miller-Rabin witness set gives exact answers. Above that
we run BPSW (a base-2 strong test plus a strong Lucas test) and then
``policy.rounds`` extra Miller-Rabin rounds with bases drawn from a seeded RNG.
"""

from __future__ import annotations

import math
import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from decimal import ROUND_HALF_EVEN, Decimal
from fractions import Fraction
from typing import NamedTuple

from natmat.errors import ResourceLimit, ScanExhausted
from natmat.numeric import check_index, check_nat, mersenne
from natmat.segments import segment, segment_max

DETERMINISTIC_LIMIT = 1 << 64
# The first twelve primes are a complete witness set below 3.18e23 > 2**64.
_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
DEFAULT_CENSUS_CEILING = 26


def _small_primes(limit: int) -> tuple[int, ...]:
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, math.isqrt(limit) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(range(p * p, limit + 1, p)))
    return tuple(i for i, flag in enumerate(sieve) if flag)


_SMALL_PRIMES = _small_primes(1000)
_SMALL_PRIME_SET = frozenset(_SMALL_PRIMES)


@dataclass(frozen=True)
class PrimalityPolicy:
    rounds: int = 16
    seed: int = 0


DEFAULT_POLICY = PrimalityPolicy()


@dataclass(frozen=True)
class Certainty:
    deterministic: bool
    rounds: int = 0

    @classmethod
    def exact(cls) -> Certainty:
        return cls(True)

    @classmethod
    def probabilistic(cls, rounds: int) -> Certainty:
        return cls(False, rounds)

    def __str__(self) -> str:
        return "deterministic" if self.deterministic else f"probabilistic({self.rounds})"


class Verdict(NamedTuple):
    value: int
    is_prime: bool
    certainty: Certainty


def _strong_probable_prime(n: int, a: int) -> bool:
    d = n - 1
    s = (d & -d).bit_length() - 1
    d >>= s
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def jacobi(a: int, n: int) -> int:
    if n <= 0 or n % 2 == 0:
        raise ValueError("n must be a positive odd integer")
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def _strong_lucas_probable_prime(n: int) -> bool:
    # Selfridge parameters: first D in 5, -7, 9, -11, ... with (D/n) = -1.
    if math.isqrt(n) ** 2 == n:
        return False
    d = 5
    while True:
        j = jacobi(d, n)
        if j == -1:
            break
        if j == 0 and abs(d) != n:
            return False
        d = -d - 2 if d > 0 else -d + 2
    p, q = 1, (1 - d) // 4

    k = n + 1
    s = (k & -k).bit_length() - 1
    k >>= s

    # Binary ladder for U_k, V_k with halving done mod n (n is odd).
    u, v, qk = 1, p, q % n
    inv2 = (n + 1) // 2
    for bit in bin(k)[3:]:
        u, v = u * v % n, (v * v - 2 * qk) % n
        qk = qk * qk % n
        if bit == "1":
            u, v = (p * u + v) * inv2 % n, (d * u + p * v) * inv2 % n
            qk = qk * q % n

    if u == 0 or v == 0:
        return True
    for _ in range(s - 1):
        v = (v * v - 2 * qk) % n
        qk = qk * qk % n
        if v == 0:
            return True
    return False


def _probable_prime(n: int, policy: PrimalityPolicy) -> bool:
    if n < 2:
        return False
    if n in _SMALL_PRIME_SET:
        return True
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return False
    if n < DETERMINISTIC_LIMIT:
        return all(_strong_probable_prime(n, a) for a in _WITNESSES)
    if not _strong_probable_prime(n, 2) or not _strong_lucas_probable_prime(n):
        return False
    rng = random.Random(f"{policy.seed}:{n}")
    return all(_strong_probable_prime(n, rng.randrange(3, n - 1)) for _ in range(policy.rounds))


def is_prime(n: int, policy: PrimalityPolicy = DEFAULT_POLICY) -> Verdict:
    check_nat(n)
    if n < DETERMINISTIC_LIMIT:
        certainty = Certainty.exact()
    else:
        certainty = Certainty.probabilistic(policy.rounds)
    return Verdict(n, _probable_prime(n, policy), certainty)


def census_ceiling() -> int:
    raw = os.environ.get("NATMAT_CENSUS_CEILING")
    return int(raw) if raw else DEFAULT_CENSUS_CEILING


@dataclass(frozen=True)
class CensusRow:
    y: int
    prime_count: int
    segment_size: int

    @property
    def percent(self) -> Fraction:
        return Fraction(100 * self.prime_count, self.segment_size)

    @property
    def percent_text(self) -> str:
        exact = Decimal(self.percent.numerator) / Decimal(self.percent.denominator)
        return str(exact.quantize(Decimal("0.001"), rounding=ROUND_HALF_EVEN))


def _count_chunk(y: int, start: int, stop: int, policy: PrimalityPolicy) -> int:
    first = mersenne(y)
    step = 1 << (y + 1)
    return sum(1 for k in range(start, stop) if _probable_prime(first + k * step, policy))


def census(
    y: int,
    policy: PrimalityPolicy = DEFAULT_POLICY,
    *,
    ceiling: int | None = None,
    workers: int = 1,
    chunk: int = 1 << 16,
) -> CensusRow:
    """Count the primes among all 2**y terms of segment y."""
    check_index(y, "y")
    limit = census_ceiling() if ceiling is None else ceiling
    if y > limit:
        raise ResourceLimit(f"census of segment {y} exceeds ceiling {limit} (NATMAT_CENSUS_CEILING)")
    size = 1 << y
    bounds = [(lo, min(lo + chunk, size)) for lo in range(0, size, chunk)]
    if workers > 1 and len(bounds) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(_count_chunk, y, lo, hi, policy) for lo, hi in bounds]
            count = sum(f.result() for f in futures)
    else:
        count = sum(_count_chunk(y, lo, hi, policy) for lo, hi in bounds)
    return CensusRow(y, count, size)


def census_range(
    y_from: int,
    y_to: int,
    policy: PrimalityPolicy = DEFAULT_POLICY,
    *,
    ceiling: int | None = None,
    workers: int = 1,
) -> list[CensusRow]:
    if not 1 <= y_from <= y_to:
        raise ValueError(f"need 1 <= y_from <= y_to, got {y_from}..{y_to}")
    limit = census_ceiling() if ceiling is None else ceiling
    if y_to > limit:
        raise ResourceLimit(f"census of segment {y_to} exceeds ceiling {limit} (NATMAT_CENSUS_CEILING)")
    return [census(y, policy, ceiling=limit, workers=workers) for y in range(y_from, y_to + 1)]


@dataclass(frozen=True)
class LeastPrimeRow:
    y: int
    x_position: int
    prime_value: int
    certainty: Certainty


def least_prime(y: int, policy: PrimalityPolicy = DEFAULT_POLICY, *, max_positions: int | None = None) -> LeastPrimeRow:
    """First prime in column y, scanning positions x = 0, 1, 2, ...

    The default scan bound is 10 * d_y positions. Running out raises
    ScanExhausted rather than returning a truncated answer.
    """
    check_index(y, "y")
    if y < 1:
        raise ValueError("y must be >= 1")
    s = segment(y)
    bound = 10 * s.diff if max_positions is None else max_positions
    value = s.first
    for x in range(bound):
        if _probable_prime(value, policy):
            return LeastPrimeRow(y, x, value, is_prime(value, policy).certainty)
        value += s.diff
    raise ScanExhausted(f"no prime among the first {bound} terms of column {y}")


@dataclass(frozen=True)
class LinnikReport:
    y: int
    x_position: int
    prime: int
    bound: int
    ratio: Fraction
    holds: bool
    segment_bound_holds: bool | None
    relative_position: Fraction
    certainty: Certainty


def linnik_check(y: int, policy: PrimalityPolicy = DEFAULT_POLICY, *, max_positions: int | None = None) -> LinnikReport:
    """Compare the least prime of column y with d_y**2 / 2."""
    row = least_prime(y, policy, max_positions=max_positions)
    s = segment(y)
    bound = s.diff * s.diff // 2
    in_segment = row.x_position < s.length
    return LinnikReport(
        y=y,
        x_position=row.x_position,
        prime=row.prime_value,
        bound=bound,
        ratio=Fraction(row.prime_value, bound),
        holds=row.prime_value < bound,
        segment_bound_holds=row.prime_value <= segment_max(y) if in_segment else None,
        relative_position=Fraction(row.x_position, s.length),
        certainty=row.certainty,
    )
