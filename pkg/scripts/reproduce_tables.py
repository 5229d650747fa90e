#!/usr/bin/env python3
"""Recompute the known family values with the exact solver.

Runs id_index_exact over every family instance with a closed-form expected
value (paths, cycles, grids, prisms, complete and complete multipartite
graphs, symmetric caterpillars, Petersen) and prints one row per instance.
Exits 1 if any computed value disagrees with the formula.

Usage: python3 scripts/reproduce_tables.py [--csv out.csv]
"""

import argparse
import sys
import time

from idindex import FamilySpec, generate, id_index_exact
from idindex.constructions import expected_id_index


def table_specs():
    for n in range(2, 13):
        yield FamilySpec("path", (n,))
    for n in range(3, 13):
        yield FamilySpec("cycle", (n,))
    for m in (2, 3, 4):
        for n in (2, 3, 4):
            yield FamilySpec("grid", (m, n))
    for n in range(3, 9):
        yield FamilySpec("prism", (n,))
    for n in range(2, 9):
        yield FamilySpec("complete", (n,))
    for sizes in [(1, 2), (1, 2, 3), (1, 3, 4), (2, 3, 5)]:
        yield FamilySpec("multipartite", sizes)
    for m in range(1, 5):
        for n in range(m, 5):
            yield FamilySpec("multipartite", (m, n))
    for counts in [(1, 0, 1), (2, 2), (2, 4, 2, 2, 4, 2), (3, 1, 1, 3)]:
        yield FamilySpec("caterpillar", counts)
    yield FamilySpec("petersen")


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--csv", help="also write the rows as CSV")
    args = parser.parse_args(argv)

    rows = []
    mismatches = 0
    started = time.perf_counter()
    for spec in table_specs():
        g, _ = generate(spec)
        expected = expected_id_index(spec)
        cert = id_index_exact(g)
        ok = cert.k == expected
        mismatches += 0 if ok else 1
        rows.append((spec.label(), g.n, expected, cert.k, cert.nodes_searched, ok))
    elapsed = time.perf_counter() - started

    width = max(len(r[0]) for r in rows)
    print(f"{'instance':<{width}}  {'n':>3}  {'expected':>8}  {'computed':>8}  "
          f"{'nodes':>7}  match")
    for label, n, expected, computed, nodes, ok in rows:
        print(f"{label:<{width}}  {n:>3}  {expected:>8}  {computed:>8}  "
              f"{nodes:>7}  {'yes' if ok else 'NO'}")
    print(f"\n{len(rows)} instances in {elapsed:.2f}s, {mismatches} mismatches")

    if args.csv:
        with open(args.csv, "w") as fh:
            fh.write("instance,n,expected,computed,nodes_searched,match\n")
            for label, n, expected, computed, nodes, ok in rows:
                fh.write(f"{label},{n},{expected},{computed},{nodes},"
                         f"{'yes' if ok else 'no'}\n")
    return 1 if mismatches else 0


if __name__ == "__main__":
    sys.exit(main())
