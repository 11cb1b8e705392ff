"""Composition operations: products, joins, embeddings, vertex addition.

The four standard graph products share one vertex indexing: the pair (u, v)
with u from the first factor G and v from the second factor H maps to index
``u * |V(H)| + v``.  :class:`VertexPairIndex` packages that correspondence so
callers can relate product vertices back to factor coordinates.

Color-transfer rules turn balanced colorings of factors into balanced
colorings of products, and small surgery operations (join, host embedding,
balanced vertex addition) extend colorings in controlled ways.  As in
:mod:`nbcolor.families`, nothing unverified is ever returned.
"""

from __future__ import annotations

from dataclasses import dataclass

from .balance import Coloring, Refusal, is_nbkc
from .graph import Graph


@dataclass(frozen=True)
class VertexPairIndex:
    """Bijection between product vertices and factor coordinate pairs."""

    g_order: int
    h_order: int

    def index(self, u: int, v: int) -> int:
        if not (0 <= u < self.g_order and 0 <= v < self.h_order):
            raise ValueError(f"pair ({u}, {v}) outside {self.g_order}x{self.h_order}")
        return u * self.h_order + v

    def pair(self, idx: int) -> tuple[int, int]:
        if not 0 <= idx < self.g_order * self.h_order:
            raise ValueError(f"index {idx} outside the product vertex range")
        return divmod(idx, self.h_order)


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """Box product: (u,v) ~ (u',v') iff u=u' and v~v', or v=v' and u~u'."""
    ix = VertexPairIndex(g.n, h.n)
    edges = []
    for u in range(g.n):
        for a, b in h.edges:
            edges.append((ix.index(u, a), ix.index(u, b)))
    for v in range(h.n):
        for a, b in g.edges:
            edges.append((ix.index(a, v), ix.index(b, v)))
    return Graph(g.n * h.n, edges)


def direct_product(g: Graph, h: Graph) -> Graph:
    """Tensor product: (u,v) ~ (u',v') iff u~u' and v~v'."""
    ix = VertexPairIndex(g.n, h.n)
    edges = []
    for a, b in g.edges:
        for x, y in h.edges:
            edges.append((ix.index(a, x), ix.index(b, y)))
            edges.append((ix.index(a, y), ix.index(b, x)))
    return Graph(g.n * h.n, edges)


def strong_product(g: Graph, h: Graph) -> Graph:
    """Strong product: edge union of the box and tensor products.

    The two edge sets are disjoint (box edges agree in one coordinate,
    tensor edges in neither), which we assert rather than assume.
    """
    box = cartesian_product(g, h)
    tensor = direct_product(g, h)
    overlap = set(box.edges) & set(tensor.edges)
    assert not overlap, f"box and tensor edges overlap: {sorted(overlap)[:5]}"
    return Graph(g.n * h.n, box.edges + tensor.edges)


def lexicographic_product(g: Graph, h: Graph) -> Graph:
    """Lexicographic product: (u,v) ~ (u',v') iff u~u', or u=u' and v~v'."""
    ix = VertexPairIndex(g.n, h.n)
    edges = []
    for a, b in g.edges:
        for x in range(h.n):
            for y in range(h.n):
                edges.append((ix.index(a, x), ix.index(b, y)))
    for u in range(g.n):
        for x, y in h.edges:
            edges.append((ix.index(u, x), ix.index(u, y)))
    return Graph(g.n * h.n, edges)


_PRODUCT_BUILDERS = {
    "cartesian": cartesian_product,
    "direct": direct_product,
    "strong": strong_product,
    "lexicographic": lexicographic_product,
}


def product_graph(kind: str, g: Graph, h: Graph) -> Graph:
    try:
        builder = _PRODUCT_BUILDERS[kind]
    except KeyError:
        raise ValueError(
            f"unknown product kind {kind!r}; expected one of "
            f"{sorted(_PRODUCT_BUILDERS)}"
        ) from None
    return builder(g, h)


def product_nbc(
    kind: str,
    g: Graph,
    h: Graph,
    cg: Coloring | None,
    ch: Coloring | None,
) -> tuple[Graph, Coloring, VertexPairIndex] | Refusal:
    """Transfer balanced colorings of the factors onto a product.

    Requirements by product kind:

    - ``cartesian`` / ``strong``: both factors balanced with the same k.
      Row u of the product uses ch shifted so that column vertex 0 lands on
      cg(u); rows then agree with cg on column 0 and every neighborhood mixes
      shifted copies evenly.
    - ``direct``: at least one factor balanced (prefer the first if both);
      copy that factor's coloring across the other coordinate.
    - ``lexicographic``: either both balanced with the same k (colors add
      mod k), or the second factor alone balanced with all color classes the
      same size (copy it down each fiber).
    """
    if kind not in _PRODUCT_BUILDERS:
        raise ValueError(
            f"unknown product kind {kind!r}; expected one of "
            f"{sorted(_PRODUCT_BUILDERS)}"
        )
    ix = VertexPairIndex(g.n, h.n)

    def checked(c: Coloring | None, graph: Graph, name: str) -> Coloring | None:
        if c is None:
            return None
        if len(c.colors) != graph.n:
            raise ValueError(
                f"{name} coloring covers {len(c.colors)} vertices, "
                f"graph has {graph.n}"
            )
        if not is_nbkc(graph, c).balanced:
            raise ValueError(f"{name} coloring is not balanced")
        return c

    cg = checked(cg, g, "first-factor")
    ch = checked(ch, h, "second-factor")

    if kind in ("cartesian", "strong"):
        if cg is None or ch is None:
            return Refusal(
                "missing-factor-coloring",
                f"{kind} product transfer needs balanced colorings of both factors",
            )
        if cg.k != ch.k:
            return Refusal(
                "palette-mismatch",
                f"factor palettes differ: {cg.k} vs {ch.k}",
            )
        k = cg.k
        colors = [0] * (g.n * h.n)
        anchor = ch.colors[0]
        for u in range(g.n):
            shift = (cg.colors[u] - anchor) % k
            for v in range(h.n):
                colors[ix.index(u, v)] = 1 + ((ch.colors[v] - 1 + shift) % k)
        prod = product_graph(kind, g, h)
        candidate = Coloring(k, tuple(colors))
        report = is_nbkc(prod, candidate)
        assert report.balanced, f"{kind} transfer produced an unbalanced coloring"
        return prod, candidate, ix

    if kind == "direct":
        if cg is None and ch is None:
            return Refusal(
                "missing-factor-coloring",
                "direct product transfer needs a balanced coloring of at "
                "least one factor",
            )
        prod = product_graph(kind, g, h)
        if cg is not None:
            candidate = Coloring(
                cg.k,
                tuple(cg.colors[ix.pair(i)[0]] for i in range(prod.n)),
            )
        else:
            assert ch is not None
            candidate = Coloring(
                ch.k,
                tuple(ch.colors[ix.pair(i)[1]] for i in range(prod.n)),
            )
        report = is_nbkc(prod, candidate)
        assert report.balanced, "direct transfer produced an unbalanced coloring"
        return prod, candidate, ix

    # lexicographic
    if cg is not None and ch is not None:
        if cg.k != ch.k:
            return Refusal(
                "palette-mismatch",
                f"factor palettes differ: {cg.k} vs {ch.k}",
            )
        k = cg.k
        prod = product_graph(kind, g, h)
        colors = [0] * prod.n
        for u in range(g.n):
            for v in range(h.n):
                colors[ix.index(u, v)] = 1 + (
                    (ch.colors[v] - 1 + cg.colors[u] - 1) % k
                )
        candidate = Coloring(k, tuple(colors))
        report = is_nbkc(prod, candidate)
        assert report.balanced, "lexicographic transfer produced an unbalanced coloring"
        return prod, candidate, ix
    if ch is not None:
        sizes = ch.class_sizes()
        if len(set(sizes)) != 1:
            return Refusal(
                "unequal-classes",
                f"second-factor color classes have sizes {sizes}; copying a "
                f"fiber coloring requires them all equal",
            )
        prod = product_graph(kind, g, h)
        candidate = Coloring(
            ch.k, tuple(ch.colors[ix.pair(i)[1]] for i in range(prod.n))
        )
        report = is_nbkc(prod, candidate)
        assert report.balanced, "fiber-copy transfer produced an unbalanced coloring"
        return prod, candidate, ix
    return Refusal(
        "missing-factor-coloring",
        "lexicographic transfer needs either both factors colored or a "
        "second-factor coloring with equal class sizes",
    )


def join_graph(g: Graph, h: Graph) -> Graph:
    """Join: disjoint union of g and h plus every cross edge.

    Vertices of g keep their labels; vertices of h are shifted by g.n.
    """
    edges = list(g.edges)
    for a, b in h.edges:
        edges.append((a + g.n, b + g.n))
    for u in range(g.n):
        for v in range(h.n):
            edges.append((u, v + g.n))
    return Graph(g.n + h.n, edges)


def join_nbc(
    g: Graph, cg: Coloring, h: Graph, ch: Coloring
) -> tuple[Graph, Coloring] | Refusal:
    """Balanced coloring of the join of two balanced-colored graphs.

    Beyond balance of both factors with the same palette, every color class
    within each factor must have the same size: each g-vertex sees all of h,
    so h's classes must be uniform, and vice versa.
    """
    if len(cg.colors) != g.n or len(ch.colors) != h.n:
        raise ValueError("coloring lengths do not match the graphs")
    if cg.k != ch.k:
        return Refusal("palette-mismatch", f"palettes differ: {cg.k} vs {ch.k}")
    if not is_nbkc(g, cg).balanced:
        raise ValueError("first coloring is not balanced")
    if not is_nbkc(h, ch).balanced:
        raise ValueError("second coloring is not balanced")
    for name, coloring in (("first", cg), ("second", ch)):
        sizes = coloring.class_sizes()
        if len(set(sizes)) != 1:
            return Refusal(
                "unequal-classes",
                f"{name} factor has color class sizes {sizes}; the join "
                f"requires all classes equal within each factor",
            )
    joined = join_graph(g, h)
    candidate = Coloring(cg.k, cg.colors + ch.colors)
    report = is_nbkc(joined, candidate)
    assert report.balanced, "join of balanced equal-class colorings must balance"
    return joined, candidate


def embed_in_nbkc(
    g: Graph, k: int
) -> tuple[Graph, Coloring, tuple[int, ...]]:
    """Embed any graph as an induced subgraph of a balanced k-colorable host.

    The host takes k copies of g's vertex set; copy j (1-based) is colored j.
    For every edge of g, all k² cross-copy pairs (including same-copy) become
    host edges.  Copy 1 keeps g's own labels 0..n-1, so the returned
    embedding is the identity on the original vertices.
    """
    if k < 2:
        raise ValueError(f"palette size must be at least 2, got {k}")
    if g.n == 0:
        raise ValueError("cannot embed the empty graph")
    n = g.n
    edges = []
    for u, v in g.edges:
        for p in range(k):
            for q in range(k):
                edges.append((p * n + u, q * n + v))
    host = Graph(k * n, edges)
    colors = tuple(1 + (idx // n) for idx in range(k * n))
    candidate = Coloring(k, colors)
    report = is_nbkc(host, candidate)
    assert report.balanced, "host construction must balance by design"
    embedding = tuple(range(n))
    return host, candidate, embedding


def vertex_addition(
    g: Graph,
    c: Coloring,
    u_list: tuple[int, ...] | list[int],
    v_list: tuple[int, ...] | list[int],
) -> tuple[Graph, Coloring] | Refusal:
    """Grow a balanced k-colored graph by 2k-1 vertices, skewing class sizes.

    Pick 2k distinct vertices u_1..u_k, v_1..v_k with c(u_i) = c(v_i) for
    each pair and the k pair colors covering the palette exactly once (a
    rainbow).  Add a hub w adjacent to all 2k chosen vertices, plus vertices
    a_1..a_{k-1} each adjacent to every u_i, and b_1..b_{k-1} each adjacent
    to every v_i.  The hub takes color 1 and the pair a_j, b_j takes color
    j+1.  Every chosen vertex then gains exactly one neighbor of each color,
    the hub sees each color twice (by the rainbow), and the new outer
    vertices see one of each — so balance survives.

    New labels: hub w = n, then a_j = n + 2j - 1 and b_j = n + 2j.

    Each application adds one vertex of color 1 and two of every other
    color, so iterating drives the color-1 class arbitrarily far below the
    rest — balanced colorings do not need equal class sizes.
    """
    k = c.k
    if k < 2:
        raise ValueError(f"palette size must be at least 2, got {k}")
    if len(c.colors) != g.n:
        raise ValueError("coloring length does not match the graph")
    if not is_nbkc(g, c).balanced:
        raise ValueError("base coloring is not balanced")
    if any(d == 0 for d in g.degrees()):
        raise ValueError("base graph must have no isolated vertices")
    u_list = tuple(u_list)
    v_list = tuple(v_list)
    if len(u_list) != k or len(v_list) != k:
        raise ValueError(f"need exactly k={k} pairs, got {len(u_list)}/{len(v_list)}")
    chosen = list(u_list) + list(v_list)
    if len(set(chosen)) != 2 * k:
        raise ValueError(f"the 2k chosen vertices must be distinct: {chosen}")
    for x in chosen:
        if not 0 <= x < g.n:
            raise ValueError(f"vertex {x} outside 0..{g.n - 1}")
    for i in range(k):
        if c.colors[u_list[i]] != c.colors[v_list[i]]:
            return Refusal(
                "pair-color-mismatch",
                f"pair {i} has colors {c.colors[u_list[i]]} and "
                f"{c.colors[v_list[i]]}; each pair must share a color",
            )
    pair_colors = [c.colors[u] for u in u_list]
    if sorted(pair_colors) != list(range(1, k + 1)):
        return Refusal(
            "pair-rainbow",
            f"pair colors are {pair_colors}; the k pairs must cover each "
            f"color exactly once for the hub's neighborhood to balance",
        )

    n = g.n
    w = n
    edges = list(g.edges)
    new_colors = list(c.colors) + [1]
    for x in chosen:
        edges.append((x, w))
    for j in range(1, k):
        a_j = n + 2 * j - 1
        b_j = n + 2 * j
        for u in u_list:
            edges.append((u, a_j))
        for v in v_list:
            edges.append((v, b_j))
        new_colors.extend([j + 1, j + 1])

    grown = Graph(n + 2 * k - 1, edges)
    candidate = Coloring(k, tuple(new_colors))
    report = is_nbkc(grown, candidate)
    assert report.balanced, (
        "vertex addition with rainbow pairs must balance; violations at "
        f"{[v for v, _ in report.violations]}"
    )
    return grown, candidate


__all__ = [
    "VertexPairIndex",
    "cartesian_product",
    "direct_product",
    "strong_product",
    "lexicographic_product",
    "product_graph",
    "product_nbc",
    "join_graph",
    "join_nbc",
    "embed_in_nbkc",
    "vertex_addition",
]
