#!/usr/bin/env python3
"""Regenerate the bundled b-file snapshot from each sequence's OEIS definition.

Used when oeis.org is unreachable. Deliberately imports nothing from natmat so
the snapshot is an independent reference. Every file starts with a comment
saying it was reconstructed; ``natmat oeis --mode fetch`` with an empty
NATMAT_CACHE_DIR replaces it with the real b-file.

    python scripts/build_snapshot.py [--out DIR]
"""

import argparse
from itertools import accumulate, count, islice
from pathlib import Path

from sympy import isprime


def linear_tree(mult, terms=200):
    return [mult * 2**n - 1 for n in range(terms)]


def dyck_numbers():
    yield 0
    for n in count(1):
        steps = [1 if c == "1" else -1 for c in bin(n)[:1:-1]]
        if min(accumulate(steps)) >= 0:
            yield n


SEQUENCES = {
    # id: (offset, description, terms)
    "A000225": (0, "2^n - 1", linear_tree(1)),
    "A153893": (0, "3*2^n - 1", linear_tree(3)),
    "A153894": (0, "5*2^n - 1", linear_tree(5)),
    "A086224": (0, "7*2^n - 1", linear_tree(7)),
    "A052996": (0, "1, 3, then 9*2^(n-2) - 1", [1, 3] + [9 * 2 ** (n - 2) - 1 for n in range(2, 200)]),
    "A086225": (0, "11*2^n - 1", linear_tree(11)),
    "A198274": (0, "13*2^n - 1", linear_tree(13)),
    "A196305": (0, "15*2^n - 1", linear_tree(15)),
    "A198275": (0, "17*2^n - 1", linear_tree(17)),
    "A198276": (0, "19*2^n - 1", linear_tree(19)),
    "A171389": (0, "21*2^n - 1", linear_tree(21)),
    "A291557": (0, "23*2^n - 1", linear_tree(23)),
    "A001477": (0, "n", list(range(10000))),
    "A005843": (0, "2n", [2 * n for n in range(10000)]),
    "A016813": (0, "4n + 1", [4 * n + 1 for n in range(10000)]),
    "A017101": (0, "8n + 3", [8 * n + 3 for n in range(10000)]),
    "A129868": (0, "2^(2n+1) - 2^n - 1", [2 ** (2 * n + 1) - 2**n - 1 for n in range(200)]),
    "A138148": (0, "binary code of 2^(2n+1) - 2^n - 1, read in decimal", [int(bin(2 ** (2 * n + 1) - 2**n - 1)[2:]) for n in range(200)]),
    "A036991": (1, "every binary suffix has #1 >= #0; 0 included", list(islice(dyck_numbers(), 10000))),
    "A350577": (1, "primes in A036991", list(islice((n for n in dyck_numbers() if isprime(n)), 10000))),
}


def write_bfile(out: Path, seq_id: str, offset: int, description: str, values: list[int]) -> None:
    lines = [
        f"# {seq_id}: {description}",
        "# Offline reconstruction from the defining formula, not downloaded from oeis.org.",
    ]
    lines += [f"{offset + i} {v}" for i, v in enumerate(values)]
    (out / f"b{seq_id[1:]}.txt").write_text("\n".join(lines) + "\n")


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    default = Path(__file__).resolve().parent.parent / "src" / "natmat" / "data" / "bfiles"
    parser.add_argument("--out", type=Path, default=default)
    args = parser.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)
    for seq_id, (offset, description, values) in SEQUENCES.items():
        write_bfile(args.out, seq_id, offset, description, values)
        print(f"{seq_id}: {len(values)} terms")


if __name__ == "__main__":
    main()
