"""Integer helpers shared by every other module: binary codes, Mersenne
numbers, unit suffixes and the Dyck-number predicate.

Values are plain Python ints (arbitrary precision). Indices used as exponents
are bounded by ``MAX_INDEX``.
"""

from __future__ import annotations

from collections.abc import Sequence

MAX_INDEX = 2**32 - 1


def check_nat(n: int, name: str = "n") -> int:
    if isinstance(n, bool) or not isinstance(n, int):
        raise TypeError(f"{name} must be an int, got {type(n).__name__}")
    if n < 0:
        raise ValueError(f"{name} must be non-negative, got {n}")
    return n


def check_index(i: int, name: str = "index") -> int:
    check_nat(i, name)
    if i > MAX_INDEX:
        raise ValueError(f"{name} must be <= {MAX_INDEX}, got {i}")
    return i


_DIGIT_CHUNK = 4000


def to_decimal(n: int) -> str:
    """Decimal string of ``n`` with no limit on the number of digits."""
    try:
        return str(n)
    except ValueError:
        # Over the interpreter's str-conversion digit limit: split and recurse.
        k = max(_DIGIT_CHUNK, int(n.bit_length() * 0.30103) // 2)
        hi, lo = divmod(n, 10**k)
        return to_decimal(hi) + to_decimal(lo).zfill(k)


def from_decimal(s: str) -> int:
    """Inverse of :func:`to_decimal` for ASCII digit strings."""
    s = s.strip()
    if not s.isascii() or not s.isdigit():
        raise ValueError(f"not a decimal natural number: {s[:40]!r}")
    if len(s) <= _DIGIT_CHUNK:
        return int(s)
    k = len(s) // 2
    return from_decimal(s[:-k]) * 10**k + from_decimal(s[-k:])


def bits_lsb(n: int) -> list[int]:
    """Binary code of ``n``, least-significant bit first. ``0`` gives ``[0]``."""
    check_nat(n)
    if n == 0:
        return [0]
    return [int(c) for c in reversed(bin(n)[2:])]


def from_bits_lsb(bits: Sequence[int]) -> int:
    n = 0
    for b in reversed(bits):
        n = (n << 1) | b
    return n


def mersenne(y: int) -> int:
    """M_y = 2**y - 1."""
    check_index(y, "y")
    return (1 << y) - 1


def unit_suffix_len(n: int) -> int:
    """Number of trailing 1-bits of ``n``, i.e. the 2-adic valuation of n+1."""
    check_nat(n)
    m = n + 1
    return (m & -m).bit_length() - 1


def is_dyck(n: int) -> bool:
    """True if every binary suffix of ``n`` has no more zeros than ones.

    The bits are scanned from the least-significant end with a running
    balance (#ones - #zeros) that may never go negative. Zero is a member
    by convention even though its one-digit code "0" fails the rule.
    """
    check_nat(n)
    if n == 0:
        return True
    balance = 0
    for c in reversed(bin(n)[2:]):
        balance += 1 if c == "1" else -1
        if balance < 0:
            return False
    return True


def is_dyck_oracle(n: int) -> bool:
    # Brute force: materialise every suffix and count its digits.
    check_nat(n)
    if n == 0:
        return True
    code = bin(n)[2:]
    for start in range(len(code)):
        suffix = code[start:]
        if suffix.count("0") > suffix.count("1"):
            return False
    return True


def rational_series(numerator: Sequence[int], denominator: Sequence[int], count: int) -> list[int]:
    """First ``count`` power-series coefficients of numerator(x)/denominator(x).

    Polynomials are given as coefficient lists, constant term first. The
    denominator's constant term must be 1 so the recurrence stays integral.
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    if not denominator or denominator[0] != 1:
        raise ValueError("denominator must have constant term 1")
    coeffs: list[int] = []
    for i in range(count):
        c = numerator[i] if i < len(numerator) else 0
        for j in range(1, min(i, len(denominator) - 1) + 1):
            c -= denominator[j] * coeffs[i - j]
        coeffs.append(c)
    return coeffs
