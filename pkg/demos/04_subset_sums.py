"""Equal-subset-sum splitting as a coloring problem.

Can the multiset {1, 2, 3, 4, 5, 3} be split into three parts with equal
sums?  Build a purpose-made graph whose balanced 3-colorings correspond
exactly to such splits, hand it to the solver, and read the answer back
off the witness coloring.
"""

from nbcolor import EssInstance, decode, ess_brute_force, reduce_ess_to_nbc, solve

inst = EssInstance((1, 2, 3, 4, 5, 3), 3)
print("target per part:", inst.total // inst.k)

reduction = reduce_ess_to_nbc(inst)
g = reduction.graph
print("reduction graph:", g.n, "vertices,", g.m, "edges")

out = solve(g, inst.k)
print("solver:", out.status)

parts = decode(reduction, out.witness)
for i, part in enumerate(parts, start=1):
    print(f"  part {i}: {sorted(part)} (sum {sum(part)})")

# Cross-check against direct enumeration over the multiset itself.
direct = ess_brute_force(inst)
print("direct enumeration agrees:", direct is not None)

# Infeasible instances come back UNSAT — {1, 2, 4} cannot split evenly.
bad = reduce_ess_to_nbc(EssInstance((1, 2, 4), 2))
print("\n{1,2,4} into two equal parts:", solve(bad.graph, 2).status)
