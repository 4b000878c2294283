#!/usr/bin/env python3
"""Linear equivalence of the three forms, made constructive.

Concise to verbose goes through shuffles of the words b^(part-1) a, scaled
per part by 1, 2 or 4.  Verbose to concise solves the triangular system on
anchor-word coordinates.  Subgraph to concise divides coordinatewise.  The
complement transform acts letterwise on verbose vectors and squares to the
identity.
"""

from fractions import Fraction

from graphflag import (
    Partition,
    anchor_word,
    complement,
    complement_transform,
    concise_flag_vector,
    concise_from_verbose,
    enumerate_partitions,
    parse_graph,
    scale_subgraph_to_concise,
    shuffle,
    subgraph_flag_vector,
    total_word_coefficient,
    verbose_flag_vector,
    verbose_from_concise,
)

print("shuffles of per-part words")
print("=" * 60)
for sizes in [(1, 1), (2, 1), (2, 2), (3, 1)]:
    part = Partition.from_sizes(sizes)
    print(f"  {part.to_text():8s} -> {shuffle(part).to_text()}")

print("\nround trip on the 4-vertex path")
print("=" * 60)
g = parse_graph("4:0-1,1-2,2-3")
concise = concise_flag_vector(g)
verbose = verbose_flag_vector(g)
print(f"  concise          : {concise.to_text()}")
print(f"  expanded verbose : {verbose_from_concise(concise).to_text()}")
print(f"  matches direct   : {verbose_from_concise(concise) == verbose}")
print(f"  inverted concise : {concise_from_verbose(verbose).to_text()}")
print(f"  subgraph rescaled: {scale_subgraph_to_concise(subgraph_flag_vector(g)).to_text()}")

print("\nanchor words order the partitions triangularly")
print("=" * 60)
for part in sorted(enumerate_partitions(4), key=anchor_word):
    print(f"  {part.to_text():12s} anchor {anchor_word(part)}")

print("\ncomplement transform")
print("=" * 60)
vec = verbose_flag_vector(g)
transformed = complement_transform(vec)
direct = verbose_flag_vector(complement(g.as_graph()))
print(f"  transform(f(path))    : {transformed.to_text()}")
print(f"  f(complement) directly: {direct.to_text()}")
print(f"  equal: {transformed == direct}, involution: "
      f"{complement_transform(transformed) == vec}")

print("\naverages over all labelled graphs")
print("=" * 60)
n = 3
for word in ["aaa", "baa", "bba"]:
    total = total_word_coefficient(n, word)
    mean = Fraction(total, 2 ** (n * (n - 1) // 2))
    print(f"  word {word}: total {total:4d}, mean per graph {mean}")
