#!/usr/bin/env python3
"""Edge-removal words and semi-concise flag counting.

Removing edges one at a time (instead of vertices) yields words over three
letters: a records the removal, b the smaller end multiplicity less one, and
c the spread between the end multiplicities.  Separately, the redundancy of
the verbose flag vector is explained by semi-concise flag counts: each word
coordinate is a factorial multiple of a configuration count.
"""

import math

from graphflag import (
    count_semiconcise_flags,
    edge_flag_vector,
    parse_graph,
    verbose_flag_vector,
)

print("edge flag vectors of small graphs")
print("=" * 60)
for text in ["2:0-1", "4:0-1,2-3", "3:0-1,1-2", "3:0-1,1-2,0-2", "4:0-1,0-2,0-3"]:
    vec = edge_flag_vector(parse_graph(text).as_graph())
    print(f"  {text:16s} -> {vec.to_text()}")

print("\nword coordinates are factorial multiples of flag counts")
print("=" * 60)
g = parse_graph("5:0-1,1-2,2-3,3-4,0-2").as_graph()
verbose = verbose_flag_vector(g)
for word in ["aaaaa", "baaaa", "abbaa", "babba"]:
    count = count_semiconcise_flags(g, word)
    factor = 1
    for run in word.split("b"):
        factor *= math.factorial(len(run))
    print(
        f"  word {word}: coefficient {verbose.coefficient(word):4d}"
        f" = {factor} (run factorials) x {count} (flags)"
    )

print("\nthe aabbaaa coordinate is always divisible by 12 on 7 vertices")
print("=" * 60)
word = "aabbaaa"
for text in [
    "7:0-1,1-2,2-3,3-4,4-5,5-6",
    "7:0-1,0-2,0-3,0-4,0-5,0-6",
    "7:0-1,1-2,0-2,3-4,4-5,5-6,3-6",
]:
    g = parse_graph(text).as_graph()
    coeff = verbose_flag_vector(g).coefficient(word)
    print(f"  {text:32s} coefficient {coeff:6d} = 12 x {coeff // 12}")
