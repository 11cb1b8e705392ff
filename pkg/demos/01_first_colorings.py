"""A first tour: build a cycle, balance it, and see why some graphs refuse.

A coloring with palette 1..k is *neighborhood balanced* when every vertex
sees each color equally often among its neighbors.  Cycles of length
divisible by four carry one; cycles of other lengths provably cannot.
"""

from nbcolor import Refusal, brute_force, check_necessary, cycle_graph, cycle_nbc, is_nbkc

# C_8 works: the repeating pattern 1 1 2 2 gives every vertex one neighbor
# of each color.
graph, coloring = cycle_nbc(8)
report = is_nbkc(graph, coloring)
print("C_8 colors:", coloring.colors)
print("balanced:", report.balanced, "| class sizes:", coloring.class_sizes())

# C_6 refuses, and the refusal names the arithmetic reason.
out = cycle_nbc(6)
assert isinstance(out, Refusal)
print("\nC_6 refusal:", out.rule, "—", out.detail)

# The screening rules agree, and so does exhaustive search.
print("screen verdict:", check_necessary(cycle_graph(6), 2).verdict)
print("brute force:", brute_force(cycle_graph(6), 2).status)

# Screens are one-sided: this 5-vertex graph (two triangles sharing a
# vertex) passes every screen yet has no balanced 2-coloring.
from nbcolor import Graph, solve

bowtie = Graph(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
print("\nbowtie screen:", check_necessary(bowtie, 2).verdict)
print("bowtie search:", solve(bowtie, 2).status)
