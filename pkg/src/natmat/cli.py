"""``natmat`` command line.

Exit statuses: 0 success, 1 verification failure, 2 usage error,
3 resource or limit error, 4 network or cache error.
"""

from __future__ import annotations

import csv
import io
import json
import sys
from collections.abc import Callable, Sequence
from pathlib import Path

import click

from natmat import errors
from natmat.forest import tree_prefix, verify_tree_partition
from natmat.matrix import pack, pack_transposed, progression, progression_term, unpack, verify_bijection, verify_progression_partition
from natmat.numeric import is_dyck, is_dyck_oracle, to_decimal
from natmat.oeis import FetchMode, dyck_crosscheck, fetch_sequence, prime_dyck_crosscheck, table1_crosscheck
from natmat.primes import PrimalityPolicy, census_range, linnik_check
from natmat.segments import ap_of_length, segment, segment_max, segment_terms

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_LIMIT = 3
EXIT_IO = 4

_EXIT_CODES = {
    errors.ResourceLimit: EXIT_LIMIT,
    errors.LimitExceeded: EXIT_LIMIT,
    errors.ScanExhausted: EXIT_LIMIT,
    errors.CoverageGap: EXIT_LIMIT,
    errors.NotCached: EXIT_IO,
    errors.FetchFailed: EXIT_IO,
    errors.MalformedLine: EXIT_IO,
}

FORMATS = ("table", "csv", "json")


class NatmatGroup(click.Group):
    def invoke(self, ctx: click.Context):
        try:
            return super().invoke(ctx)
        except errors.NatmatError as exc:
            click.echo(f"error: {exc}", err=True)
            code = next((c for cls, c in _EXIT_CODES.items() if isinstance(exc, cls)), EXIT_USAGE)
            ctx.exit(code)


def _cell(value) -> str:
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, int):
        return to_decimal(value)
    if value is None:
        return ""
    return str(value)


def _json_value(value):
    # Integers always travel as decimal strings so no parser can round them.
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return to_decimal(value)
    return str(value)


def render(rows: Sequence[dict], fmt: str, table: Callable[[Sequence[dict]], str] | None = None) -> str:
    if fmt == "json":
        return json.dumps([{k: _json_value(v) for k, v in row.items()} for row in rows], indent=2)
    columns = list(rows[0]) if rows else []
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(columns)
        for row in rows:
            writer.writerow([_cell(row[c]) for c in columns])
        return buf.getvalue().rstrip("\n")
    if table is not None:
        return table(rows)
    return aligned(rows)


def aligned(rows: Sequence[dict]) -> str:
    if not rows:
        return ""
    columns = list(rows[0])
    cells = [[_cell(row[c]) for c in columns] for row in rows]
    widths = [max(len(c), *(len(r[i]) for r in cells)) for i, c in enumerate(columns)]
    lines = ["  ".join(c.rjust(w) for c, w in zip(columns, widths))]
    lines += ["  ".join(v.rjust(w) for v, w in zip(r, widths)) for r in cells]
    return "\n".join(lines)


def _emit(rows: Sequence[dict], fmt: str | None, table: Callable[[Sequence[dict]], str] | None = None) -> None:
    if fmt is None:
        fmt = "table" if sys.stdout.isatty() else "csv"
    click.echo(render(rows, fmt, table))


format_option = click.option(
    "--format", "fmt", type=click.Choice(FORMATS), default=None,
    help="Output format (default: table on a terminal, csv otherwise).",
)
nat = click.IntRange(min=0)
positive = click.IntRange(min=1)


def policy_options(f):
    f = click.option("--seed", type=int, default=0, show_default=True, help="Seed for random witness bases.")(f)
    f = click.option("--rounds", type=nat, default=16, show_default=True, help="Extra Miller-Rabin rounds above 2**64.")(f)
    return f


@click.group(cls=NatmatGroup)
@click.version_option(package_name="artifact")
def main():
    """Mersenne trees, power-of-two progressions and their Natural Matrix."""


@main.command()
@click.argument("k", type=nat)
@click.argument("count", type=positive)
@format_option
def tree(k, count, fmt):
    """First COUNT nodes of Mersenne tree K (root 2K); * marks odd non-Dyck nodes."""
    rows = [
        {"depth": n, "value": v, "not_dyck": v % 2 == 1 and not is_dyck(v)}
        for n, v in enumerate(tree_prefix(k, count))
    ]

    def table(rows):
        return ", ".join(to_decimal(r["value"]) + ("*" if r["not_dyck"] else "") for r in rows)

    _emit(rows, fmt, table)


@main.command("progression")
@click.argument("n", type=nat)
@click.argument("count", type=positive)
@format_option
def progression_cmd(n, count, fmt):
    """First COUNT terms of the progression M_N + 2**(N+1) k."""
    p = progression(n)
    rows = [{"k": k, "value": progression_term(n, k)} for k in range(count)]
    _emit(rows, fmt, lambda rows: f"A_{n}: first={p.first} diff={p.diff}\n" + " ".join(_cell(r["value"]) for r in rows))


@main.command("pack")
@click.argument("x", type=nat)
@click.argument("y", type=nat)
@click.option("--transposed", is_flag=True, help="Use G(x, y) = F(y, x).")
@format_option
def pack_cmd(x, y, transposed, fmt):
    """Matrix cell (X, Y) as a natural number: (2X+1) 2**Y - 1."""
    n = pack_transposed((x, y)) if transposed else pack((x, y))
    _emit([{"x": x, "y": y, "n": n}], fmt, lambda rows: _cell(n))


@main.command("unpack")
@click.argument("n", type=nat)
@format_option
def unpack_cmd(n, fmt):
    """Matrix coordinates of N."""
    c = unpack(n)
    _emit([{"n": n, "x": c.x, "y": c.y}], fmt, lambda rows: f"x={_cell(c.x)} y={c.y}")


@main.command("segment")
@click.argument("y", type=nat)
@click.option("--limit", type=nat, default=None, help="Only the first LIMIT terms.")
@format_option
def segment_cmd(y, limit, fmt):
    """Initial Dyck segment S_Y of column Y."""
    s = segment(y)
    terms = segment_terms(y, limit)
    rows = [{"y": y, "k": k, "value": v} for k, v in enumerate(terms)]

    def table(rows):
        head = f"S_{y}: first={s.first} diff={s.diff} length={s.length} max={segment_max(y)}"
        return head + "\n" + " ".join(_cell(r["value"]) for r in rows)

    if fmt == "json":
        desc = {"y": y, "first": s.first, "diff": s.diff, "length": s.length, "max": segment_max(y), "terms": terms}
        click.echo(json.dumps([{k: ([_json_value(t) for t in v] if k == "terms" else _json_value(v)) for k, v in desc.items()}], indent=2))
        return
    _emit(rows, fmt, table)


@main.command("ap")
@click.argument("k", type=positive)
@format_option
def ap_cmd(k, fmt):
    """K Dyck numbers in arithmetic progression."""
    terms = ap_of_length(k)
    rows = [{"i": i, "value": v} for i, v in enumerate(terms)]
    _emit(rows, fmt, lambda rows: " ".join(_cell(v) for v in terms))


def _y_range(y_from, y_to):
    if y_from > y_to:
        raise click.BadParameter(f"--from {y_from} is greater than --to {y_to}")
    return range(y_from, y_to + 1)


@main.command("census")
@click.option("--from", "y_from", type=positive, default=1, show_default=True)
@click.option("--to", "y_to", type=positive, default=16, show_default=True)
@click.option("--jobs", type=positive, default=1, show_default=True, help="Worker processes per segment.")
@policy_options
@format_option
def census_cmd(y_from, y_to, jobs, rounds, seed, fmt):
    """Primes among the terms of each segment S_y."""
    _y_range(y_from, y_to)
    rows = [
        {"y": r.y, "primes": r.prime_count, "size": r.segment_size, "percent": r.percent_text}
        for r in census_range(y_from, y_to, PrimalityPolicy(rounds, seed), workers=jobs)
    ]
    _emit(rows, fmt)


def _ratio(value) -> str:
    return f"{float(value):.6e}"


@main.command("least-prime")
@click.option("--from", "y_from", type=positive, default=1, show_default=True)
@click.option("--to", "y_to", type=positive, default=16, show_default=True)
@policy_options
@format_option
def least_prime_cmd(y_from, y_to, rounds, seed, fmt):
    """Position x of the first prime in each column y."""
    policy = PrimalityPolicy(rounds, seed)
    rows = []
    for y in _y_range(y_from, y_to):
        r = linnik_check(y, policy)
        rows.append({"y": y, "x": r.x_position, "prime": r.prime, "certainty": str(r.certainty), "ratio": _ratio(r.ratio)})
    _emit(rows, fmt)


@main.command("linnik")
@click.option("--from", "y_from", type=positive, default=1, show_default=True)
@click.option("--to", "y_to", type=positive, default=16, show_default=True)
@policy_options
@format_option
def linnik_cmd(y_from, y_to, rounds, seed, fmt):
    """Check p_min(y) < d_y**2 / 2 for each column y; exit 1 if any row fails."""
    policy = PrimalityPolicy(rounds, seed)
    rows = []
    for y in _y_range(y_from, y_to):
        r = linnik_check(y, policy)
        rows.append({
            "y": y, "x": r.x_position, "prime": r.prime, "bound": r.bound, "ratio": _ratio(r.ratio),
            "holds": r.holds, "in_segment": r.segment_bound_holds, "relative_position": _ratio(r.relative_position),
            "certainty": str(r.certainty),
        })
    _emit(rows, fmt)
    if not all(r["holds"] for r in rows):
        sys.exit(EXIT_FAILED)


def _verify_dyck(bound):
    for n in range(bound):
        if is_dyck(n) != is_dyck_oracle(n):
            return bound, 1, n
    return bound, 0, None


@main.command("verify")
@click.option("--what", type=click.Choice(["trees", "progressions", "bijection", "dyck"]), required=True)
@click.option("--bound", type=positive, default=100000, show_default=True)
@format_option
def verify_cmd(what, bound, fmt):
    """Exhaustive finite-range checks of the partitions, the bijection and the Dyck predicate."""
    extra = {}
    if what in ("trees", "progressions"):
        report = verify_tree_partition(bound) if what == "trees" else verify_progression_partition(bound)
        checked = report.checked
        failures = report.collisions + report.missing + report.round_trip_failures
        first = report.first_failure
        extra = {"collisions": report.collisions, "parts": report.parts}
        if what == "progressions":
            extra["column0"] = report.part_sizes.get(0, 0)
    elif what == "bijection":
        checked, first = verify_bijection(bound)
        failures = 0 if first is None else 1
    else:
        checked, failures, first = _verify_dyck(bound)
    row = {"what": what, "bound": bound, "checked": checked, **extra, "failures": failures,
           "first_counterexample": first, "passed": failures == 0}
    _emit([row], fmt)
    if failures:
        sys.exit(EXIT_FAILED)


@main.command("oeis")
@click.option("--check", type=click.Choice(["table1", "dyck", "primes"]), required=True)
@click.option("--mode", type=click.Choice([m.value for m in FetchMode]), default="cache-only", show_default=True)
@click.option("--cache-dir", type=click.Path(file_okay=False, path_type=Path), default=None,
              help="Cache directory (default: $NATMAT_CACHE_DIR or ~/.cache/natmat).")
@click.option("--terms", type=positive, default=15, show_default=True, help="Terms compared per Table 1 row.")
@format_option
def oeis_cmd(check, mode, cache_dir, terms, fmt):
    """Cross-check generated sequences against OEIS b-files."""
    kwargs = {"cache_dir": cache_dir}
    fetch_mode = FetchMode(mode)
    rows = []
    if check == "table1":
        for row, report in table1_crosscheck(terms, fetch_mode, **kwargs):
            rows.append(_diff_row(row.sequence_id, f"tree {row.k}", report))
    else:
        seq_id = "A036991" if check == "dyck" else "A350577"
        bfile = fetch_sequence(seq_id, fetch_mode, **kwargs)
        bound = bfile.values[-1] + 1 if bfile.values else 1
        if check == "dyck":
            report = dyck_crosscheck(bound, bfile)
        else:
            report = prime_dyck_crosscheck(bound, bfile)
        rows.append(_diff_row(seq_id, f"below {bound}", report))
    _emit(rows, fmt)
    if not all(r["ok"] for r in rows):
        sys.exit(EXIT_FAILED)


def _diff_row(seq_id, label, report):
    mm = report.first_mismatch
    return {
        "sequence": seq_id, "local": label, "matched": report.matched, "offset": report.offset_used,
        "mismatch_at": mm.position if mm else None,
        "expected": mm.expected if mm else None,
        "actual": mm.actual if mm else None,
        "ok": report.ok,
    }


if __name__ == "__main__":
    main()
