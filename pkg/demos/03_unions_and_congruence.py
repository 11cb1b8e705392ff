"""Gluing copies of a graph along a fixed vertex set.

Take n copies of a host graph and identify a chosen set of vertices across
all copies.  Whether the result carries a balanced coloring turns on a
congruence: the copy count must satisfy n ≡ 1 modulo a value computed from
how the glued set sits inside the host.
"""

import itertools

from nbcolor import (
    UnionSpec,
    cycle_graph,
    cycle_union_nbc,
    is_ideal_dependent_set,
    is_nbkc,
    solve,
    union_congruence,
    union_over_set,
)

host = cycle_graph(8)

# Glue along one edge {0,1}: the modulus is k^2, so with two colors only
# copy counts congruent to 1 mod 4 can pass the screen.
rep = union_congruence(host, {0, 1}, 2)
print("one-edge glue, k=2: modulus", rep.modulus)
for n in (1, 3, 5):
    print(f"  n={n} admissible:", rep.admissible(n))

# The congruence is necessary, not sufficient: n=5 passes it, yet
# exhaustive search shows the 32-vertex union is still uncolorable.
big, _ = union_over_set(UnionSpec(host, frozenset({0, 1}), 5))
print("5 copies glued on an edge:", solve(big, 2).status)

# *Ideal* glue sets escape the congruence entirely — any odd patchwork of
# even-length paths works for every copy count.  C_8 has 44 of them.
def _dependent(s):
    return any((a + 1) % 8 in s for a in s)


ideal = [
    s
    for r in range(2, 8)
    for s in map(frozenset, itertools.combinations(range(8), r))
    if _dependent(s) and is_ideal_dependent_set(8, s)[0]
]
print("\nideal dependent sets in C_8:", len(ideal))
print("is {0,1,2} ideal?", is_ideal_dependent_set(8, {0, 1, 2})[0])

g, c = cycle_union_nbc(8, frozenset({0, 1, 2}), 3)
print("3 copies of C_8 glued on {0,1,2}:", g.n, "vertices,",
      "balanced" if is_nbkc(g, c).balanced else "UNBALANCED")
