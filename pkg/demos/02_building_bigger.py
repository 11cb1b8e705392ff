"""Growing balanced colorings: products, joins, and vertex additions.

Balanced colorings compose.  Graph products and joins of balanced pieces
stay balanced, and a vertex-addition step grows a graph one vertex at a
time while *skewing* the color classes — balance constrains edges between
classes, not class sizes.
"""

from nbcolor import (
    complete_multipartite_nbc,
    cycle_nbc,
    is_nbkc,
    join_nbc,
    product_nbc,
    vertex_addition,
)

c4 = cycle_nbc(4)
c8 = cycle_nbc(8)

for kind in ("cartesian", "direct", "strong", "lexicographic"):
    g, c, idx = product_nbc(kind, c4[0], c8[0], c4[1], c8[1])
    print(f"{kind:>13} product: {g.n} vertices, {g.m} edges,",
          "balanced" if is_nbkc(g, c).balanced else "UNBALANCED")

g, c = join_nbc(c4[0], c4[1], c8[0], c8[1])
print(f"\njoin C_4 * C_8: {g.n} vertices, {g.m} edges,",
      "balanced" if is_nbkc(g, c).balanced else "UNBALANCED")

# Start from the 4-cycle drawn as K_{2,2} and add three vertices.  Each new
# vertex attaches to one vertex of each color, so balance survives while
# color 1 falls behind by one vertex per step.
g, c = complete_multipartite_nbc((2, 2), 2)
print("\nstart:", c.class_sizes())
for pairs in (((0, 1), (2, 3)), ((0, 5), (4, 6)), ((0, 8), (7, 9))):
    g, c = vertex_addition(g, c, *pairs)
    print("after adding a vertex:", c.class_sizes(),
          "| still balanced:", is_nbkc(g, c).balanced)
