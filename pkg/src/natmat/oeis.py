"""OEIS b-file retrieval, caching and comparison.

A b-file is plain text with one ``index value`` pair per line. Files are
cached as ``b<digits>.txt`` under ``$NATMAT_CACHE_DIR`` (default
``~/.cache/natmat``). A snapshot of every sequence this package checks
against ships in ``natmat/data/bfiles`` and is consulted when the cache
misses, so cross-checks work offline.
"""

from __future__ import annotations

import enum
import os
import re
import tempfile
import urllib.error
import urllib.request
from dataclasses import dataclass
from importlib.resources import files
from pathlib import Path
from typing import NamedTuple

from natmat.errors import CoverageGap, FetchFailed, MalformedLine, NotCached
from natmat.forest import tree_prefix
from natmat.numeric import from_decimal, is_dyck
from natmat.primes import DEFAULT_POLICY, PrimalityPolicy, _probable_prime

OEIS_URL = "https://oeis.org"
DEFAULT_TIMEOUT = 10.0
OFFSET_WINDOW = 3

_ID_RE = re.compile(r"A\d{6}")
_INT_RE = re.compile(r"[+-]?[0-9]+")


class FetchMode(enum.Enum):
    CACHE_ONLY = "cache-only"
    FETCH_IF_MISSING = "fetch"


@dataclass
class BFileSeq:
    sequence_id: str
    entries: list[tuple[int, int]]

    @property
    def values(self) -> list[int]:
        return [v for _, v in self.entries]

    def __len__(self) -> int:
        return len(self.entries)


class Mismatch(NamedTuple):
    position: int
    expected: int | None
    actual: int | None


@dataclass
class DiffReport:
    matched: int
    first_mismatch: Mismatch | None = None
    offset_used: int = 0

    @property
    def ok(self) -> bool:
        return self.first_mismatch is None


def check_id(sequence_id: str) -> str:
    if not isinstance(sequence_id, str) or not _ID_RE.fullmatch(sequence_id):
        raise ValueError(f"not an OEIS identifier: {sequence_id!r}")
    return sequence_id


def parse_bfile(text: str | bytes, sequence_id: str = "") -> BFileSeq:
    """Parse b-file text. Comment (``#``) and blank lines are skipped."""
    if isinstance(text, (bytes, bytearray)):
        try:
            text = bytes(text).decode("utf-8")
        except UnicodeDecodeError as exc:
            raise MalformedLine(0, repr(bytes(text[:40])), f"not UTF-8 text ({exc.reason})") from None
    entries: list[tuple[int, int]] = []
    for lineno, line in enumerate(text.splitlines(), 1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        tokens = stripped.split()
        if len(tokens) != 2 or not all(_INT_RE.fullmatch(t) for t in tokens):
            raise MalformedLine(lineno, line)
        raw_index, raw_value = tokens
        if raw_value.startswith("-"):
            raise MalformedLine(lineno, line, "negative value")
        index = from_decimal(raw_index.lstrip("+-"))
        if raw_index.startswith("-"):
            index = -index
        value = from_decimal(raw_value.lstrip("+"))
        if entries and index <= entries[-1][0]:
            raise MalformedLine(lineno, line, "index not increasing")
        entries.append((index, value))
    return BFileSeq(sequence_id, entries)


def bfile_name(sequence_id: str) -> str:
    return f"b{check_id(sequence_id)[1:]}.txt"


def bfile_url(sequence_id: str, base_url: str = OEIS_URL) -> str:
    return f"{base_url.rstrip('/')}/{sequence_id}/{bfile_name(sequence_id)}"


def default_cache_dir() -> Path:
    env = os.environ.get("NATMAT_CACHE_DIR")
    if env:
        return Path(env)
    base = os.environ.get("XDG_CACHE_HOME") or Path.home() / ".cache"
    return Path(base) / "natmat"


def snapshot_dir() -> Path:
    return Path(str(files("natmat") / "data" / "bfiles"))


def _write_atomic(path: Path, data: bytes) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".part")
    try:
        with os.fdopen(fd, "wb") as fh:
            fh.write(data)
        os.replace(tmp, path)
    except BaseException:
        Path(tmp).unlink(missing_ok=True)
        raise


def download(url: str, timeout: float = DEFAULT_TIMEOUT) -> bytes:
    try:
        with urllib.request.urlopen(url, timeout=timeout) as resp:
            return resp.read()
    except urllib.error.HTTPError as exc:
        raise FetchFailed(url, status=exc.code) from exc
    except (urllib.error.URLError, OSError) as exc:
        reason = getattr(exc, "reason", exc)
        raise FetchFailed(url, reason=str(reason)) from exc


def fetch_sequence(
    sequence_id: str,
    mode: FetchMode = FetchMode.CACHE_ONLY,
    *,
    cache_dir: Path | str | None = None,
    use_snapshot: bool = True,
    base_url: str = OEIS_URL,
    timeout: float = DEFAULT_TIMEOUT,
) -> BFileSeq:
    """Load a b-file from the cache, the bundled snapshot, or the network.

    CACHE_ONLY never opens a connection. FETCH_IF_MISSING downloads on a
    miss and stores the raw text in the cache before parsing it.
    """
    name = bfile_name(sequence_id)
    cache = Path(cache_dir) if cache_dir is not None else default_cache_dir()
    candidates = [cache / name]
    if use_snapshot:
        candidates.append(snapshot_dir() / name)
    for path in candidates:
        if path.is_file():
            return parse_bfile(path.read_bytes(), sequence_id)
    if mode is FetchMode.CACHE_ONLY:
        raise NotCached(f"{name} not found in {' or '.join(str(p.parent) for p in candidates)}")
    data = download(bfile_url(sequence_id, base_url), timeout)
    seq = parse_bfile(data, sequence_id)
    _write_atomic(cache / name, data)
    return seq


def _compare_at(local: list[int], remote: list[int], offset: int, max_terms: int) -> DiffReport:
    n = min(max_terms, len(local))
    matched = 0
    first = None
    for i in range(n):
        actual = local[i]
        expected = remote[offset + i] if offset + i < len(remote) else None
        if expected == actual:
            matched += 1
        elif first is None:
            first = Mismatch(i, expected, actual)
    return DiffReport(matched, first, offset)


def compare_prefix(local: list[int], remote: BFileSeq, max_terms: int, *, skip: int | None = None) -> DiffReport:
    """Compare ``local`` with the b-file, searching a small alignment window.

    ``local[0]`` is tried against each of the first three remote entries and
    the alignment with the most matches wins (earliest on ties). Passing
    ``skip`` fixes the alignment instead.
    """
    if max_terms < 1:
        raise ValueError("max_terms must be >= 1")
    values = remote.values
    if not local or not values:
        return DiffReport(0, None, skip or 0)
    if skip is not None:
        return _compare_at(local, values, skip, max_terms)
    best = None
    for offset in range(min(OFFSET_WINDOW, len(values))):
        report = _compare_at(local, values, offset, max_terms)
        if best is None or report.matched > best.matched:
            best = report
    return best


def _compare_lists(local: list[int], remote: list[int]) -> DiffReport:
    matched = 0
    for i, (a, b) in enumerate(zip(local, remote)):
        if a != b:
            return DiffReport(matched, Mismatch(i, b, a))
        matched += 1
    if len(local) != len(remote):
        i = matched
        return DiffReport(
            matched,
            Mismatch(i, remote[i] if i < len(remote) else None, local[i] if i < len(local) else None),
        )
    return DiffReport(matched)


def _covered_values(bfile: BFileSeq, bound: int) -> list[int]:
    values = bfile.values
    if not values or values[-1] < bound - 1:
        last = values[-1] if values else None
        raise CoverageGap(f"{bfile.sequence_id or 'b-file'} ends at {last}, need coverage up to {bound - 1}")
    return [v for v in values if v < bound]


def dyck_crosscheck(bound: int, dyck_bfile: BFileSeq) -> DiffReport:
    """All Dyck numbers below ``bound`` against the A036991 b-file."""
    remote = _covered_values(dyck_bfile, bound)
    local = [n for n in range(bound) if is_dyck(n)]
    return _compare_lists(local, remote)


def prime_dyck_crosscheck(bound: int, a350577: BFileSeq, policy: PrimalityPolicy = DEFAULT_POLICY) -> DiffReport:
    remote = _covered_values(a350577, bound)
    local = [n for n in range(bound) if is_dyck(n) and _probable_prime(n, policy)]
    return _compare_lists(local, remote)


class Table1Row(NamedTuple):
    k: int
    sequence_id: str
    skip: int | None


# Trees with roots 0..22 and their OEIS identifications. A052996 carries two
# extra leading terms (1, 3) before the tree with root 8.
TABLE1_ROWS = (
    Table1Row(0, "A000225", None),
    Table1Row(1, "A153893", None),
    Table1Row(2, "A153894", None),
    Table1Row(3, "A086224", None),
    Table1Row(4, "A052996", 2),
    Table1Row(5, "A086225", None),
    Table1Row(6, "A198274", None),
    Table1Row(7, "A196305", None),
    Table1Row(8, "A198275", None),
    Table1Row(9, "A198276", None),
    Table1Row(10, "A171389", None),
    Table1Row(11, "A291557", None),
)


def table1_crosscheck(
    terms: int = 15, mode: FetchMode = FetchMode.CACHE_ONLY, **fetch_kwargs
) -> list[tuple[Table1Row, DiffReport]]:
    out = []
    for row in TABLE1_ROWS:
        remote = fetch_sequence(row.sequence_id, mode, **fetch_kwargs)
        out.append((row, compare_prefix(tree_prefix(row.k, terms), remote, terms, skip=row.skip)))
    return out
