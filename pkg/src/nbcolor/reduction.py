"""Hardness machinery: equal-sum-subsets instances compiled to coloring ones.

The compiler attaches one (k, a)-house per multiset element a plus k shared
"distributive" vertices.  House structure forces, in any balanced coloring
of the compiled graph, all of a house's index vertices to share one color —
so each element effectively picks a subset — and balance at the distributive
vertices forces the k subset sums equal.  ``decode`` reads the partition
back out of a balanced coloring; ``ess_brute_force`` is the independent
ground truth for the underlying partition problem.

``flawed_gadget`` reproduces, as a regression artifact, an earlier
construction from the literature whose correctness argument breaks: its
hub pair u1, u2 may legally share a color, which desynchronizes the
numeric-vertex split the argument relied on.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .balance import Coloring, is_nbkc
from .graph import Graph


@dataclass(frozen=True)
class EssInstance:
    """A k-equal-sum-subsets question: split T into k parts of equal sum.

    ``target`` (the common sum), when provided, must equal sum(T)/k.  An
    instance whose total is not divisible by k is representable — it is
    simply unsatisfiable — so divisibility is reported, not enforced.
    """

    values: tuple[int, ...]
    k: int
    target: int | None = None

    def __post_init__(self) -> None:
        values = tuple(self.values)
        object.__setattr__(self, "values", values)
        if not values:
            raise ValueError("the multiset must be nonempty")
        if any(a < 1 for a in values):
            raise ValueError(f"all elements must be positive integers: {values}")
        if self.k < 2:
            raise ValueError(f"subset count must be at least 2, got {self.k}")
        if self.target is not None and self.k * self.target != sum(values):
            raise ValueError(
                f"target {self.target} inconsistent: k*target = "
                f"{self.k * self.target} but sum(T) = {sum(values)}"
            )

    @property
    def total(self) -> int:
        return sum(self.values)

    @property
    def divisible(self) -> bool:
        return self.total % self.k == 0


@dataclass(frozen=True)
class HouseGadget:
    """The (k, n)-house: k-1 bases, kn supports, n index vertices.

    Every base is adjacent to every support; support number j is adjacent to
    index number j // k (consecutive blocks of k supports per index).  So a
    support has degree exactly k, which is what forces rainbow neighborhoods
    around supports and, from there, a single shared color on all indexes.

    Local labels: bases 0..k-2, supports k-1..k-1+kn-1, indexes after that.
    """

    k: int
    n: int
    graph: Graph
    bases: tuple[int, ...]
    supports: tuple[int, ...]
    indexes: tuple[int, ...]


def house(k: int, n: int) -> HouseGadget:
    """Build a (k, n)-house and self-test its canonical balanced coloring."""
    if k < 2:
        raise ValueError(f"need k >= 2, got {k}")
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    bases = tuple(range(k - 1))
    supports = tuple(range(k - 1, k - 1 + k * n))
    indexes = tuple(range(k - 1 + k * n, k - 1 + k * n + n))
    edges = []
    for b in bases:
        for s in supports:
            edges.append((b, s))
    for pos, s in enumerate(supports):
        edges.append((s, indexes[pos // k]))
    g = Graph((k + 1) * n + (k - 1), edges)
    assert g.m == k * k * n, f"(k,n)-house edge count {g.m} != k^2 n = {k * k * n}"
    gadget = HouseGadget(k=k, n=n, graph=g, bases=bases, supports=supports,
                         indexes=indexes)
    scheme = house_scheme_coloring(gadget)
    assert is_nbkc(g, scheme).balanced, "house scheme coloring must balance"
    return gadget


def house_scheme_coloring(gadget: HouseGadget) -> Coloring:
    """The proof-scheme coloring of an isolated house.

    Bases take the k-1 distinct colors 1..k-1, every index takes color k,
    and each index's block of k supports is a rainbow.
    """
    k = gadget.k
    colors = [0] * gadget.graph.n
    for i, b in enumerate(gadget.bases):
        colors[b] = i + 1
    for idx in gadget.indexes:
        colors[idx] = k
    for pos, s in enumerate(gadget.supports):
        colors[s] = (pos % k) + 1
    return Coloring(k, tuple(colors))


def index_monochromatic(gadget: HouseGadget, c: Coloring, offset: int = 0) -> int:
    """The shared color of a house's index vertices under a balanced coloring.

    ``offset`` relocates the house's local labels inside a larger host.
    Disagreement between index vertices is an assertion failure: for hosts
    that keep every support at degree exactly k it cannot happen unless the
    coloring is unbalanced or the construction is wrong.
    """
    seen = {c.colors[offset + idx] for idx in gadget.indexes}
    assert len(seen) == 1, (
        f"index vertices of the ({gadget.k},{gadget.n})-house at offset "
        f"{offset} carry colors {sorted(seen)}; balance forces agreement"
    )
    return seen.pop()


@dataclass(frozen=True)
class HousePlacement:
    """One house inside a compiled instance, at a fixed vertex offset."""

    element: int
    gadget: HouseGadget
    offset: int

    def bases(self) -> tuple[int, ...]:
        return tuple(self.offset + b for b in self.gadget.bases)

    def supports(self) -> tuple[int, ...]:
        return tuple(self.offset + s for s in self.gadget.supports)

    def indexes(self) -> tuple[int, ...]:
        return tuple(self.offset + i for i in self.gadget.indexes)


@dataclass(frozen=True)
class ReductionInstance:
    """A compiled equal-sum-subsets question.

    ``houses[i]`` hosts element ``instance.values[i]``; ``distributive`` are
    the k vertices adjacent to every index vertex of every house.
    """

    instance: EssInstance
    graph: Graph
    houses: tuple[HousePlacement, ...]
    distributive: tuple[int, ...]

    def roles(self) -> dict[int, tuple[str, int | None]]:
        """Vertex -> (role, element) table; distributive vertices carry None."""
        table: dict[int, tuple[str, int | None]] = {}
        for placement in self.houses:
            for b in placement.bases():
                table[b] = ("base", placement.element)
            for s in placement.supports():
                table[s] = ("support", placement.element)
            for i in placement.indexes():
                table[i] = ("index", placement.element)
        for d in self.distributive:
            table[d] = ("distributive", None)
        return table


def reduce_ess_to_nbc(inst: EssInstance) -> ReductionInstance:
    """Compile an equal-sum-subsets instance to a balanced-coloring instance.

    One (k, a)-house per element a, in input order, followed by k mutually
    nonadjacent distributive vertices each adjacent to every index vertex.
    Total vertex count: sum over elements of ((k+1)a + k-1), plus k.
    """
    k = inst.k
    placements: list[HousePlacement] = []
    edges: list[tuple[int, int]] = []
    offset = 0
    for a in inst.values:
        gadget = house(k, a)
        placements.append(HousePlacement(element=a, gadget=gadget, offset=offset))
        for u, v in gadget.graph.edges:
            edges.append((offset + u, offset + v))
        offset += gadget.graph.n
    distributive = tuple(range(offset, offset + k))
    for placement in placements:
        for idx in placement.indexes():
            for d in distributive:
                edges.append((idx, d))
    graph = Graph(offset + k, edges)
    return ReductionInstance(
        instance=inst,
        graph=graph,
        houses=tuple(placements),
        distributive=distributive,
    )


def decode(rinst: ReductionInstance, c: Coloring) -> tuple[tuple[int, ...], ...]:
    """Read the equal-sum partition out of a balanced coloring.

    Element a joins subset i when its house's index vertices carry color i.
    The k subset sums are asserted equal — balance at the distributive
    vertices guarantees it, so inequality would mean a broken verifier or
    construction, not bad input.
    """
    report = is_nbkc(rinst.graph, c)
    if not report.balanced:
        raise ValueError(
            f"coloring is not balanced on the compiled graph; violations at "
            f"{[v for v, _ in report.violations[:5]]}"
        )
    k = rinst.instance.k
    subsets: list[list[int]] = [[] for _ in range(k)]
    for placement in rinst.houses:
        color = index_monochromatic(placement.gadget, c, placement.offset)
        subsets[color - 1].append(placement.element)
    sums = [sum(part) for part in subsets]
    assert len(set(sums)) == 1, (
        f"decoded subset sums {sums} differ; distributive balance must "
        f"force equality"
    )
    return tuple(tuple(part) for part in subsets)


def decode_from_roles(
    g: Graph,
    roles: dict[int, tuple[str, int | None]],
    c: Coloring,
) -> tuple[tuple[int, ...], ...]:
    """Decode a partition from a graph plus an untrusted role sidecar.

    Unlike :func:`decode`, which trusts its own construction and asserts,
    this boundary-facing variant validates everything it reads: the sidecar
    must label every vertex, houses are recovered as connected components
    after removing the distributive vertices, each house's element is its
    index-vertex count (cross-checked against the sidecar's element labels),
    and any inconsistency raises ``ValueError``.
    """
    if set(roles) != set(range(g.n)):
        missing = sorted(set(range(g.n)) - set(roles))
        extra = sorted(set(roles) - set(range(g.n)))
        raise ValueError(
            f"role sidecar does not label the graph exactly: missing "
            f"{missing[:5]}, extraneous {extra[:5]}"
        )
    known = {"base", "support", "index", "distributive"}
    alien = sorted(v for v, (role, _) in roles.items() if role not in known)
    if alien:
        raise ValueError(
            f"sidecar assigns roles outside {sorted(known)} to vertices {alien[:5]}"
        )
    distributive = sorted(v for v, (role, _) in roles.items() if role == "distributive")
    k = len(distributive)
    if k < 2:
        raise ValueError(f"sidecar lists {k} distributive vertices; need at least 2")
    if c.k != k:
        raise ValueError(
            f"coloring palette {c.k} does not match the {k} distributive vertices"
        )
    report = is_nbkc(g, c)
    if not report.balanced:
        raise ValueError("coloring is not balanced on the compiled graph")

    skip = set(distributive)
    seen: set[int] = set()
    subsets: list[list[int]] = [[] for _ in range(k)]
    for start in range(g.n):
        if start in skip or start in seen:
            continue
        component = [start]
        seen.add(start)
        frontier = [start]
        while frontier:
            v = frontier.pop()
            for u in g.neighbors(v):
                if u not in skip and u not in seen:
                    seen.add(u)
                    component.append(u)
                    frontier.append(u)
        indexes = [v for v in component if roles[v][0] == "index"]
        if not indexes:
            raise ValueError(
                f"component containing vertex {start} has no index vertices"
            )
        elements = {roles[v][1] for v in component if roles[v][1] is not None}
        if elements != {len(indexes)}:
            raise ValueError(
                f"component containing vertex {start} has {len(indexes)} index "
                f"vertices but sidecar element labels {sorted(elements)}"
            )
        colors = {c.colors[v] for v in indexes}
        if len(colors) != 1:
            raise ValueError(
                f"index vertices of the house at {start} carry colors "
                f"{sorted(colors)}; a balanced coloring of a well-formed "
                f"instance cannot do that"
            )
        subsets[colors.pop() - 1].append(len(indexes))
    sums = [sum(part) for part in subsets]
    if len(set(sums)) != 1:
        raise ValueError(f"decoded subset sums {sums} differ; sidecar is inconsistent")
    return tuple(tuple(part) for part in subsets)


_ESS_CAP = 3**12


def ess_brute_force(
    inst: EssInstance, cap: int = _ESS_CAP
) -> tuple[tuple[int, ...], ...] | None:
    """Ground-truth partition search by plain enumeration.

    Assigns each element to one of k subsets (all k^|T| ways, first hit in
    odometer order) and demands every subset sum equal sum(T)/k.  Subsets
    partition the whole multiset — nothing may be left out.
    """
    k = inst.k
    values = inst.values
    if k ** len(values) > cap:
        raise ValueError(
            f"instance too large to enumerate: k^|T| = {k}^{len(values)} "
            f"exceeds the cap {cap}"
        )
    if not inst.divisible:
        return None
    share = inst.total // k
    for assignment in product(range(k), repeat=len(values)):
        sums = [0] * k
        for value, bucket in zip(values, assignment):
            sums[bucket] += value
        if all(s == share for s in sums):
            subsets: list[list[int]] = [[] for _ in range(k)]
            for value, bucket in zip(values, assignment):
                subsets[bucket].append(value)
            return tuple(tuple(part) for part in subsets)
    return None


@dataclass(frozen=True)
class FlawedGadget:
    """The appendix regression artifact: a 2-coloring gadget that leaks.

    ``v1, v2`` form the side A every numeric vertex attaches to; ``u1, u2``
    form side B.  The broken argument assumed a balanced coloring splits the
    numeric vertices evenly; taking u1 and u2 monochromatic shifts that
    split by two, which is exactly what the regression test exhibits.
    """

    graph: Graph
    v1: int
    v2: int
    u1: int
    u2: int
    packs: tuple[tuple[int, tuple[int, ...], tuple[int, ...], int], ...]
    # each pack: (element, supports, numerics, base)

    def roles(self) -> dict[int, tuple[str, int | None]]:
        table: dict[int, tuple[str, int | None]] = {
            self.v1: ("hub-A", None),
            self.v2: ("hub-A", None),
            self.u1: ("hub-B", None),
            self.u2: ("hub-B", None),
        }
        for element, supports, numerics, base in self.packs:
            table[base] = ("base", element)
            for s in supports:
                table[s] = ("support", element)
            for t in numerics:
                table[t] = ("numeric", element)
        return table


def flawed_gadget(values: tuple[int, ...] | list[int]) -> FlawedGadget:
    """Build the appendix construction for a multiset of positive integers.

    Start from K_{2,2} on A = {v1, v2}, B = {u1, u2}.  For each element a,
    add an a-pack: a base adjacent to 2a supports, numeric vertex t adjacent
    to supports 2t-1 and 2t, and every numeric vertex adjacent to both
    vertices of A.  Numeric vertices end up with degree 4.
    """
    values = tuple(values)
    if not values:
        raise ValueError("the multiset must be nonempty")
    if any(a < 1 for a in values):
        raise ValueError(f"all elements must be positive integers: {values}")
    v1, v2, u1, u2 = 0, 1, 2, 3
    edges = [(v1, u1), (v1, u2), (v2, u1), (v2, u2)]
    packs = []
    offset = 4
    for a in values:
        base = offset
        supports = tuple(range(offset + 1, offset + 1 + 2 * a))
        numerics = tuple(range(offset + 1 + 2 * a, offset + 1 + 3 * a))
        for s in supports:
            edges.append((base, s))
        for t_pos, t in enumerate(numerics):
            edges.append((t, supports[2 * t_pos]))
            edges.append((t, supports[2 * t_pos + 1]))
            edges.append((t, v1))
            edges.append((t, v2))
        packs.append((a, supports, numerics, base))
        offset += 1 + 3 * a
    graph = Graph(offset, edges)
    return FlawedGadget(
        graph=graph, v1=v1, v2=v2, u1=u1, u2=u2, packs=tuple(packs)
    )


__all__ = [
    "EssInstance",
    "HouseGadget",
    "HousePlacement",
    "ReductionInstance",
    "FlawedGadget",
    "house",
    "house_scheme_coloring",
    "index_monochromatic",
    "reduce_ess_to_nbc",
    "decode",
    "ess_brute_force",
    "flawed_gadget",
]
