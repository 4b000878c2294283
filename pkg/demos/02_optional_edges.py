#!/usr/bin/env python3
"""Optional edges: signed expansions, vanishing cycles and tree words.

An optional edge is a formal two-valued choice: the graph expands to the
signed sum over all completions.  Optional cycles make every flag vector
vanish; an all-optional tree concentrates its verbose vector on the single
word b^(n-1) a with the acyclic shelling count as coefficient.
"""

from graphflag import (
    Graph,
    acyclic_shelling_number,
    expand,
    optional_path,
    parse_graph,
    verbose_flag_vector,
)

print("a single optional edge is (edge) - (non-edge)")
print("=" * 60)
for g, c in expand(parse_graph("2:?0-1")).items():
    print(f"  {c:+d}  {g.to_text()}")

print("\nthe optional triangle expands to the alternating relation")
print("=" * 60)
triangle = parse_graph("3:?0-1,?1-2,?0-2")
for g, c in expand(triangle).items():
    print(f"  {c:+d}  {g.to_text()}")
print(f"  verbose flag vector: {verbose_flag_vector(triangle).to_text()}")

print("\nany optional cycle kills the flag vector, extra edges or not")
print("=" * 60)
for text in ["4:?0-1,?1-2,?2-3,?0-3", "5:0-4,1-3,?0-1,?1-2,?0-2"]:
    vec = verbose_flag_vector(parse_graph(text))
    print(f"  {text:28s} -> {vec.to_text()}")

print("\nall-optional trees give a single word")
print("=" * 60)
for n in range(2, 7):
    path = optional_path(n)
    plain = Graph(n, path.optional)
    vec = verbose_flag_vector(path)
    print(
        f"  optional path on {n}: {vec.to_text():12s}"
        f"  (acyclic shellings of the plain path: {acyclic_shelling_number(plain)})"
    )

star = parse_graph("4:?0-1,?0-2,?0-3")
print(f"  optional star on 4:  {verbose_flag_vector(star).to_text()}")
