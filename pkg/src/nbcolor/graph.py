"""Immutable simple undirected graphs on vertices 0..n-1.

Everything else in the package builds on this representation, so it is kept
deliberately small: dense integer vertices, adjacency precomputed once,
deterministic iteration order everywhere.
"""

from __future__ import annotations

from typing import Iterable, Iterator


class Graph:
    """A simple undirected graph.

    Vertices are the integers ``0..n-1``.  Self-loops are rejected outright;
    duplicate edges are deduplicated silently.  Instances are immutable and
    hashable, and may be shared freely between threads.
    """

    __slots__ = ("_n", "_edges", "_adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()) -> None:
        if n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {n}")
        normalized: set[tuple[int, int]] = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u} is not representable")
            normalized.add((u, v) if u < v else (v, u))
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in sorted(normalized):
            adj[u].append(v)
            adj[v].append(u)
        self._n = n
        self._edges: tuple[tuple[int, int], ...] = tuple(sorted(normalized))
        self._adj: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(nb)) for nb in adj)

    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return len(self._edges)

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """All edges as (min, max) pairs in lexicographic order."""
        return self._edges

    def neighbors(self, v: int) -> tuple[int, ...]:
        if not 0 <= v < self._n:
            raise ValueError(f"vertex {v} outside 0..{self._n - 1}")
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def degrees(self) -> tuple[int, ...]:
        return tuple(len(nb) for nb in self._adj)

    def has_edge(self, u: int, v: int) -> bool:
        # Membership in the sorted neighbor tuple is fine at these sizes and
        # avoids carrying a side set around.
        if not (0 <= u < self._n and 0 <= v < self._n):
            return False
        return v in self._adj[u]

    def is_regular(self) -> bool:
        degs = self.degrees()
        return self._n == 0 or all(d == degs[0] for d in degs)

    def vertices(self) -> range:
        return range(self._n)

    def __iter__(self) -> Iterator[int]:
        return iter(range(self._n))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._n, self._edges))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, m={self.m})"


def graph_from_edges(n: int, pairs: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an edge list, deduplicating; self-loops are an error."""
    return Graph(n, pairs)


def neighbors(g: Graph, v: int) -> frozenset[int]:
    """The open neighborhood N(v) as a set."""
    return frozenset(g.neighbors(v))


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph induced by the vertex set ``s``, relabeled to 0..|s|-1.

    Returns the subgraph together with the remapping table: entry ``i`` of the
    table is the original label of new vertex ``i`` (members in ascending order).
    """
    members = sorted(set(s))
    for v in members:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} outside 0..{g.n - 1}")
    position = {v: i for i, v in enumerate(members)}
    member_set = set(members)
    edges = [
        (position[u], position[v])
        for u, v in g.edges
        if u in member_set and v in member_set
    ]
    return Graph(len(members), edges), tuple(members)


def cycle_graph(m: int) -> Graph:
    if m < 3:
        raise ValueError(f"a cycle needs at least 3 vertices, got {m}")
    return Graph(m, [(i, (i + 1) % m) for i in range(m)])


def complete_graph(n: int) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def complete_multipartite_graph(part_sizes: Iterable[int]) -> Graph:
    """Complete multipartite graph; part ``i`` occupies a consecutive index block."""
    sizes = list(part_sizes)
    if any(s < 1 for s in sizes):
        raise ValueError(f"part sizes must be positive, got {sizes}")
    starts = [0]
    for s in sizes:
        starts.append(starts[-1] + s)
    n = starts[-1]
    edges = []
    for i in range(len(sizes)):
        for j in range(i + 1, len(sizes)):
            for u in range(starts[i], starts[i + 1]):
                for v in range(starts[j], starts[j + 1]):
                    edges.append((u, v))
    return Graph(n, edges)
