#!/usr/bin/env python3
"""The eleven graphs on four vertices: concise table, hull vertices, facets.

Prints the full 11 x 5 table of concise flag vectors, then certifies by
exact LP that each point is a vertex of the convex hull, and enumerates the
hull's facet inequalities by exact double description.
"""

from graphflag import (
    complement,
    enumerate_partitions,
    hull_report,
    parse_graph,
)
from graphflag.flagvectors import concise_flag_vector

rows = [
    ("4_0", parse_graph("4:").as_graph()),
    ("4_1", parse_graph("4:0-1").as_graph()),
    ("2_1|2_1", parse_graph("4:0-1,2-3").as_graph()),
    ("3_2|1_0", parse_graph("4:0-1,1-2").as_graph()),
    ("A_4", parse_graph("4:0-1,1-2,2-3").as_graph()),
    ("3_3|1_0", parse_graph("4:0-1,1-2,0-2").as_graph()),
    ("star", parse_graph("4:0-1,0-2,0-3").as_graph()),
    ("co(3_2|1_0)", complement(parse_graph("4:0-1,1-2").as_graph())),
    ("co(2_1|2_1)", complement(parse_graph("4:0-1,2-3").as_graph())),
    ("4_5", complement(parse_graph("4:0-1").as_graph())),
    ("4_6", complement(parse_graph("4:").as_graph())),
]

parts = enumerate_partitions(4)
head = " ".join(f"{p.to_text():>10s}" for p in parts)
print(f"{'graph':12s} {head}")
print("-" * (13 + 11 * len(parts)))
for name, g in rows:
    vec = concise_flag_vector(g)
    cells = " ".join(f"{vec.coefficient(p):10d}" for p in parts)
    print(f"{name:12s} {cells}")

print("\nvertex certification by exact LP")
print("=" * 60)
report = hull_report(4, include_facets=True)
print(f"  distinct points: {report.distinct_point_count} of {report.class_count}")
print(f"  all vertices   : {report.all_vertices}")

print(f"\nfacet inequalities of the hull ({len(report.facets)} facets)")
print("=" * 60)
print("  each line: offset + coefficients . x >= 0, coordinates in the")
print("  partition order above (constant coordinates get coefficient 0)")
for coeffs, offset in report.facets:
    terms = " ".join(f"{c:+d}*{p.to_text()}" for c, p in zip(coeffs, parts) if c)
    print(f"  {offset:+d} {terms} >= 0")
