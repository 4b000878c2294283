#!/usr/bin/env python3
"""Span dimension and hull vertex census for n up to 6.

The concise flag vectors of all n-vertex graphs span a space of dimension
p(n), the partition count.  The basis sums certify the spanning direction;
exact rank computation certifies the dimension.  The vertex census then asks
whether every graph is extremal for some linear function of its flag vector.

Note: the n = 6 census runs 156 exact LPs and takes a minute or two.
"""

import sys
import time

from graphflag import (
    basis_graph,
    concise_flag_vector,
    enumerate_graphs,
    enumerate_partitions,
    hull_report,
    partition_count,
    span_dimension,
)

print("span dimension versus partition count")
print("=" * 60)
for n in range(7):
    t0 = time.perf_counter()
    dim = span_dimension(n)
    classes = len(enumerate_graphs(n))
    print(
        f"  n={n}: {classes:3d} classes span dimension {dim:2d}"
        f"  (p({n}) = {partition_count(n)})  [{time.perf_counter()-t0:.2f}s]"
    )

print("\nbasis sums hit each partition exactly")
print("=" * 60)
for part in enumerate_partitions(5):
    vec = concise_flag_vector(basis_graph(part))
    print(f"  {part.to_text():12s} -> {vec.to_text()}")

limit = 6 if "--full" in sys.argv else 5
print(f"\nhull vertex census (up to n={limit}; pass --full for n=6)")
print("=" * 60)
for n in range(2, limit + 1):
    t0 = time.perf_counter()
    report = hull_report(n)
    vertices = sum(report.vertex_flags.values())
    print(
        f"  n={n}: {report.class_count:3d} classes, "
        f"{report.distinct_point_count:3d} distinct points, "
        f"{vertices:3d} vertices  [{time.perf_counter()-t0:.1f}s]"
    )
