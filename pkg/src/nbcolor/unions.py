"""Unions of n copies of a graph glued along a vertex subset.

Write nG_S for the graph obtained from n disjoint copies of G by identifying
the copies of every vertex in S.  For independent S a balanced coloring of G
survives the gluing untouched; for dependent S there is an arithmetic
congruence every balanced union must satisfy, and for cycles the dependent
sets that work are characterized exactly ("ideal" sets below).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce

from .balance import Coloring, Refusal, cyclic_shift, is_nbkc
from .families import cycle_nbc
from .graph import Graph


@dataclass(frozen=True)
class UnionSpec:
    """n copies of ``base`` glued along the vertex set ``glue``.

    ``glue`` must be a nonempty proper subset of the base's vertices;
    ``copies`` must be at least 1.
    """

    base: Graph
    glue: frozenset[int]
    copies: int

    def __post_init__(self) -> None:
        glue = frozenset(self.glue)
        object.__setattr__(self, "glue", glue)
        if self.copies < 1:
            raise ValueError(f"need at least one copy, got {self.copies}")
        if not glue:
            raise ValueError("glue set must be nonempty")
        for v in glue:
            if not 0 <= v < self.base.n:
                raise ValueError(f"glue vertex {v} outside 0..{self.base.n - 1}")
        if len(glue) == self.base.n:
            raise ValueError("glue set must be a proper subset of the vertices")


def union_over_set(spec: UnionSpec) -> tuple[Graph, tuple[tuple[int, ...], ...]]:
    """Materialize nG_S with deterministic labels.

    Glued vertices come first, in ascending original label (union index i is
    the i-th smallest member of S).  Copy j (1-based) then occupies a block
    of the non-glued vertices, again in ascending original label.  Returns
    the union graph and one map per copy: ``maps[j-1][v]`` is the union index
    of original vertex v inside copy j.  All maps agree on S.

    Vertex and edge counts obey |V| = |S| + n(|V(G)| - |S|) and
    |E| = p + n(|E(G)| - p), where p counts edges inside S.
    """
    g, s, n = spec.base, spec.glue, spec.copies
    glued = sorted(s)
    free = [v for v in range(g.n) if v not in s]
    glue_index = {v: i for i, v in enumerate(glued)}
    free_index = {v: i for i, v in enumerate(free)}
    block = len(free)
    maps = []
    for j in range(n):
        offset = len(glued) + j * block
        table = tuple(
            glue_index[v] if v in s else offset + free_index[v] for v in range(g.n)
        )
        maps.append(table)
    edges = []
    for table in maps:
        for u, v in g.edges:
            edges.append((table[u], table[v]))
    union = Graph(len(glued) + n * block, edges)
    return union, tuple(maps)


def _is_independent(g: Graph, s: frozenset[int]) -> bool:
    return all(not (u in s and v in s) for u, v in g.edges)


def union_nbc_independent(
    g: Graph, c: Coloring, s: frozenset[int] | set[int], n: int
) -> Coloring:
    """Balanced coloring of nG_S when S is independent: every copy reuses c.

    A glued vertex's union neighborhood is n copies of its original one (S
    independent means none of its neighbors were glued), so the original
    per-color counts simply scale by n; other vertices keep their exact
    original neighborhoods.
    """
    s = frozenset(s)
    spec = UnionSpec(g, s, n)
    if not _is_independent(g, s):
        inside = [(u, v) for u, v in g.edges if u in s and v in s]
        raise ValueError(
            f"glue set is not independent: edge {inside[0]} lies inside it"
        )
    if len(c.colors) != g.n:
        raise ValueError("coloring length does not match the graph")
    if not is_nbkc(g, c).balanced:
        raise ValueError("base coloring is not balanced")
    union, maps = union_over_set(spec)
    colors = [0] * union.n
    for table in maps:
        for v in range(g.n):
            colors[table[v]] = c.colors[v]
    out = Coloring(c.k, tuple(colors))
    report = is_nbkc(union, out)
    assert report.balanced, "independent-set union must preserve balance"
    return out


@dataclass(frozen=True)
class CongruenceReport:
    """Necessary congruence on the copy count for balanced dependent unions.

    ``q`` lists the degrees of the glued vertices inside the induced glue
    subgraph and ``p`` its edge count.  A balanced k-coloring of nG_S forces
    n ≡ 1 modulo lcm(L, M), where L = lcm over glued vertices of k/gcd(q_i, k)
    and M = k²/gcd(p, k²).  The condition is necessary, not sufficient.
    """

    k: int
    q: tuple[int, ...]
    p: int
    L: int
    M: int
    modulus: int

    def admissible(self, n: int) -> bool:
        return n % self.modulus == 1 % self.modulus


def union_congruence(g: Graph, s: frozenset[int] | set[int], k: int) -> CongruenceReport:
    """Compute the dependent-set congruence data for gluing along S."""
    if k < 2:
        raise ValueError(f"palette size must be at least 2, got {k}")
    s = frozenset(s)
    for v in s:
        if not 0 <= v < g.n:
            raise ValueError(f"glue vertex {v} outside 0..{g.n - 1}")
    inside = [(u, v) for u, v in g.edges if u in s and v in s]
    if not inside:
        raise ValueError(
            "glue set is independent; the congruence test only concerns "
            "dependent sets"
        )
    glued = sorted(s)
    q = tuple(
        sum(1 for u in g.neighbors(v) if u in s) for v in glued
    )
    p = len(inside)
    L = reduce(math.lcm, (k // math.gcd(qi, k) for qi in q), 1)
    M = (k * k) // math.gcd(p, k * k)
    return CongruenceReport(k=k, q=q, p=p, L=L, M=M, modulus=math.lcm(L, M))


# ---------------------------------------------------------------------------
# Cycles: ideal dependent sets and the full characterization
# ---------------------------------------------------------------------------


def _cycle_arcs(m: int, s: frozenset[int]) -> list[tuple[int, ...]]:
    """Maximal runs of cyclically consecutive members of S, sorted by start.

    Each run is listed in increasing cyclic order (a wrap run like {7, 0, 1}
    in a cycle of length 8 comes out as (7, 0, 1)).
    """
    starts = [v for v in sorted(s) if (v - 1) % m not in s]
    arcs = []
    for start in starts:
        arc = [start]
        nxt = (start + 1) % m
        while nxt in s:
            arc.append(nxt)
            nxt = (nxt + 1) % m
        arcs.append(tuple(arc))
    return arcs


def is_ideal_dependent_set(m: int, s: frozenset[int] | set[int]) -> tuple[bool, str]:
    """Decide whether S is an ideal dependent set in the cycle C_m.

    Ideal means the induced subgraph C_m⟨S⟩ has (i) no single-vertex
    components, (ii) an odd number of cycle vertices strictly between any two
    consecutive components, and (iii) if there is only one component, it is a
    path with an even number of edges — equivalently, for even m, the
    wrap-around gap also has an odd vertex count.
    """
    if m < 3:
        raise ValueError(f"a cycle needs at least 3 vertices, got {m}")
    s = frozenset(s)
    if not s:
        raise ValueError("glue set must be nonempty")
    for v in s:
        if not 0 <= v < m:
            raise ValueError(f"vertex {v} outside 0..{m - 1}")
    if len(s) == m:
        raise ValueError("glue set must be a proper subset of the cycle")
    arcs = _cycle_arcs(m, s)
    if all(len(a) == 1 for a in arcs):
        raise ValueError(
            "glue set is independent in the cycle; ideality concerns "
            "dependent sets"
        )
    trivial = [a[0] for a in arcs if len(a) == 1]
    if trivial:
        return False, f"single-vertex component at {trivial[0]}"
    if len(arcs) == 1:
        (arc,) = arcs
        edge_count = len(arc) - 1
        if edge_count % 2 == 1:
            return False, (
                f"lone component is a path with {edge_count} edges (odd); "
                f"an even path is required"
            )
        return True, (
            f"lone component is an even path with {edge_count} edges; "
            f"wrap gap has {m - len(arc)} vertices (odd)"
        )
    for idx, arc in enumerate(arcs):
        nxt = arcs[(idx + 1) % len(arcs)]
        gap = (nxt[0] - arc[-1] - 1) % m
        if gap % 2 == 0:
            return False, (
                f"gap between components ending at {arc[-1]} and starting "
                f"at {nxt[0]} has {gap} vertices (even); odd is required"
            )
    return True, f"{len(arcs)} components, all gaps odd"


def cycle_union_nbc(
    m: int, s: frozenset[int] | set[int], n: int
) -> tuple[Graph, Coloring] | Refusal:
    """Balanced 2-coloring of the union of n copies of C_m glued along S.

    For odd n and m ≡ 0 (mod 4), the union admits a balanced 2-coloring if
    and only if S is an ideal dependent set.  The coloring keeps the base
    block pattern on S and on even gap offsets; on odd gap offsets the first
    (n+1)/2 copies keep the base pattern while the rest use its shift, so
    each component endpoint picks up (n-1)/2 extra neighbors of each color.

    Even n is refused outright: a component endpoint would have degree n + 1,
    which is odd, violating degree divisibility for k = 2.
    """
    s = frozenset(s)
    if m % 4 != 0:
        return Refusal(
            "cycle-order",
            f"m={m} is not a multiple of 4, so even a single copy of C_{m} "
            f"has no balanced 2-coloring",
        )
    if n % 2 == 0:
        return Refusal(
            "glue-degree",
            f"with n={n} copies each component endpoint has degree n+1={n + 1}, "
            f"odd, so degree divisibility by 2 fails",
        )
    ideal, reason = is_ideal_dependent_set(m, s)  # validates m, S, dependence
    if not ideal:
        return Refusal(
            "not-ideal",
            f"{reason}; unions over non-ideal dependent sets admit no "
            f"balanced 2-coloring",
        )

    base = cycle_nbc(m)
    assert not isinstance(base, Refusal)
    _, c = base
    c_bar = cyclic_shift(c, 1)

    spec = UnionSpec(Graph(m, [(i, (i + 1) % m) for i in range(m)]), s, n)
    union, maps = union_over_set(spec)
    colors = [0] * union.n
    for v in sorted(s):
        colors[maps[0][v]] = c.colors[v]
    half = (n + 1) // 2
    for arc in _cycle_arcs(m, s):
        anchor = arc[-1]
        gap_len = 0
        probe = (anchor + 1) % m
        while probe not in s:
            gap_len += 1
            probe = (probe + 1) % m
        for offset in range(1, gap_len + 1):
            x = (anchor + offset) % m
            for j in range(1, n + 1):
                if offset % 4 in (1, 3):
                    chosen = c if j <= half else c_bar
                else:
                    chosen = c
                colors[maps[j - 1][x]] = chosen.colors[x]
    candidate = Coloring(2, tuple(colors))
    report = is_nbkc(union, candidate)
    assert report.balanced, (
        f"ideal-set union coloring must balance (m={m}, S={sorted(s)}, n={n}); "
        f"violations at {[v for v, _ in report.violations]}"
    )
    return union, candidate


__all__ = [
    "UnionSpec",
    "CongruenceReport",
    "union_over_set",
    "union_nbc_independent",
    "union_congruence",
    "is_ideal_dependent_set",
    "cycle_union_nbc",
]
