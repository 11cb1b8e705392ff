"""Exact decision procedure for balanced k-colorability.

``solve`` runs pruned backtracking over a fixed vertex order with four
pruning devices:

(a) the arithmetic necessity gate (any failure is immediate UNSAT),
(b) per-vertex color quotas deg(v)/k enforced incrementally,
(c) forward checking — saturating a color in some neighborhood bans it on
    the uncolored vertices adjacent to that neighborhood's center, and a
    vertex left with no feasible color kills the branch,
(d) color-symmetry breaking — a vertex may use at most one color beyond the
    largest color used so far.

``brute_force`` is the deliberately theory-free oracle: it enumerates every
assignment and checks balance by counting, sharing no code path with
``solve`` beyond the graph type, so the two can legitimately cross-check
each other.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import product

from .balance import Coloring, check_necessary, is_nbkc
from .graph import Graph

_MODES = ("first-witness", "canonical-min", "count")


@dataclass(frozen=True)
class SolveConfig:
    """Search configuration.

    ``mode`` selects what to produce: any witness, the canonical
    (lexicographically smallest under the fixed vertex order) witness, or the
    number of balanced colorings.  ``node_budget`` caps assignments made
    before giving up; setting it forces single-threaded search so the cap is
    exact.  ``same_color`` adds pairwise equal-color side constraints (used
    by gadget analysis); these are color-permutation invariant, so symmetry
    breaking stays sound.
    """

    mode: str = "first-witness"
    node_budget: int | None = None
    parallel: bool = False
    same_color: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        if self.mode not in _MODES:
            raise ValueError(f"mode must be one of {_MODES}, got {self.mode!r}")
        if self.node_budget is not None and self.node_budget <= 0:
            raise ValueError(f"node budget must be positive, got {self.node_budget}")


@dataclass
class SolveOutcome:
    """Result of a solve or brute-force run.

    ``status`` is SAT, UNSAT, or BUDGET_EXCEEDED.  ``witness`` is present
    exactly when SAT (and has been verified balanced before being returned).
    ``count`` is present in count mode.  ``pruned_by`` tallies how often each
    pruning rule fired, keyed by rule name.
    """

    status: str
    witness: Coloring | None = None
    count: int | None = None
    nodes_explored: int = 0
    pruned_by: dict[str, int] = field(default_factory=dict)


class _Budget(Exception):
    """Raised internally when the node budget runs out."""


class _Search:
    """One backtracking run over a fixed vertex order.

    All state is per-instance, so independent instances may run in parallel
    threads over the same (immutable) graph.
    """

    def __init__(
        self,
        g: Graph,
        k: int,
        cfg: SolveConfig,
        order: tuple[int, ...],
    ) -> None:
        self.g = g
        self.k = k
        self.cfg = cfg
        self.order = order
        self.adj = tuple(g.neighbors(v) for v in range(g.n))
        self.quota = tuple(g.degree(v) // k for v in range(g.n))
        self.color = [0] * g.n
        self.counts = [[0] * (k + 1) for _ in range(g.n)]  # counts[v][c]
        self.bans = [[0] * (k + 1) for _ in range(g.n)]  # bans[v][c]
        self.eligible = [k] * g.n
        self.maxused = 0
        self.nodes = 0
        self.pruned: dict[str, int] = {}
        self.solutions: list[tuple[int, ...]] = []
        self.count = 0
        # Union the same-color pairs into groups; each group forces one color.
        leader = list(range(g.n))

        def find(x: int) -> int:
            while leader[x] != x:
                leader[x] = leader[leader[x]]
                x = leader[x]
            return x

        for a, b in cfg.same_color:
            if not (0 <= a < g.n and 0 <= b < g.n):
                raise ValueError(f"same-color pair ({a}, {b}) out of range")
            leader[find(a)] = find(b)
        self.group = tuple(find(v) for v in range(g.n))
        self.group_color: dict[int, int] = {}

    def _tally(self, rule: str, amount: int = 1) -> None:
        self.pruned[rule] = self.pruned.get(rule, 0) + amount

    def _assign(self, v: int, c: int) -> bool:
        """Apply an assignment; returns False when forward checking wipes out
        some uncolored vertex (the assignment still stands and must be undone).
        """
        self.nodes += 1
        budget = self.cfg.node_budget
        if budget is not None and self.nodes > budget:
            raise _Budget
        self.color[v] = c
        ok = True
        for u in self.adj[v]:
            cu = self.counts[u]
            cu[c] += 1
            if cu[c] == self.quota[u]:
                for w in self.adj[u]:
                    if self.color[w] == 0:
                        bw = self.bans[w]
                        bw[c] += 1
                        if bw[c] == 1:
                            self.eligible[w] -= 1
                            if self.eligible[w] == 0:
                                ok = False
        return ok

    def _unassign(self, v: int, c: int) -> None:
        for u in self.adj[v]:
            cu = self.counts[u]
            if cu[c] == self.quota[u]:
                for w in self.adj[u]:
                    if self.color[w] == 0:
                        bw = self.bans[w]
                        bw[c] -= 1
                        if bw[c] == 0:
                            self.eligible[w] += 1
            cu[c] -= 1
        self.color[v] = 0

    def run(self, depth: int) -> bool:
        """Explore assignments for order[depth:]; returns True to stop early
        (a witness was found and one is all the caller wants)."""
        if depth == len(self.order):
            self.solutions.append(tuple(self.color))
            if self.cfg.mode == "count":
                used = len(set(self.color))
                orbit = 1
                for i in range(used):
                    orbit *= self.k - i
                self.count += orbit
                self.solutions.clear()  # keep memory flat; only tallying
                return False
            return True
        v = self.order[depth]
        gid = self.group[v]
        forced = self.group_color.get(gid)
        cap = min(self.k, self.maxused + 1)
        if cap < self.k and forced is None:
            self._tally("symmetry", self.k - cap)
        if forced is not None:
            candidates = (forced,) if forced <= cap else ()
        else:
            candidates = tuple(range(1, cap + 1))
        bv = self.bans[v]
        for c in candidates:
            if bv[c] != 0:
                self._tally("quota")
                continue
            prev_max = self.maxused
            if c > self.maxused:
                self.maxused = c
            set_group = False
            if forced is None:
                self.group_color[gid] = c
                set_group = True
            viable = self._assign(v, c)
            if viable:
                if self.run(depth + 1):
                    return True
            else:
                self._tally("deficit")
            self._unassign(v, c)
            if set_group:
                del self.group_color[gid]
            self.maxused = prev_max
        return False


def _vertex_order(g: Graph) -> tuple[int, ...]:
    """Fixed search order: descending degree, index as tiebreak."""
    return tuple(sorted(range(g.n), key=lambda v: (-g.degree(v), v)))


def _merge_tallies(into: dict[str, int], other: dict[str, int]) -> None:
    for key, value in other.items():
        into[key] = into.get(key, 0) + value


def solve(g: Graph, k: int, cfg: SolveConfig | None = None) -> SolveOutcome:
    """Decide balanced k-colorability of g exactly.

    Runs the necessity gate first, then backtracking search.  In
    ``canonical-min`` mode the witness is the lexicographically smallest
    color vector under the fixed vertex order (descending degree, index
    tiebreak); because candidate colors are tried in increasing order and
    every balanced coloring can be palette-permuted into the symmetry-broken
    form, the first witness the ordered search finds *is* that minimum.
    """
    if k < 2:
        raise ValueError(f"palette size must be at least 2, got {k}")
    cfg = cfg or SolveConfig()
    gate = check_necessary(g, k)
    if not gate.possibly_colorable:
        assert gate.failed_rule is not None
        return SolveOutcome(
            status="UNSAT",
            count=0 if cfg.mode == "count" else None,
            nodes_explored=0,
            pruned_by={gate.failed_rule: 1},
        )
    order = _vertex_order(g)

    if cfg.parallel and cfg.node_budget is None and g.n >= 2:
        return _solve_parallel(g, k, cfg, order)

    search = _Search(g, k, cfg, order)
    try:
        found = search.run(0)
    except _Budget:
        return SolveOutcome(
            status="BUDGET_EXCEEDED",
            nodes_explored=search.nodes,
            pruned_by=search.pruned,
        )
    return _finish(g, k, cfg, search, found)


def _finish(
    g: Graph, k: int, cfg: SolveConfig, search: _Search, found: bool
) -> SolveOutcome:
    if cfg.mode == "count":
        status = "SAT" if search.count > 0 else "UNSAT"
        witness = None
        return SolveOutcome(
            status=status,
            witness=witness,
            count=search.count,
            nodes_explored=search.nodes,
            pruned_by=search.pruned,
        )
    if found:
        witness = Coloring(k, tuple(search.solutions[-1]))
        assert is_nbkc(g, witness).balanced, "solver returned an unbalanced witness"
        return SolveOutcome(
            status="SAT",
            witness=witness,
            nodes_explored=search.nodes,
            pruned_by=search.pruned,
        )
    return SolveOutcome(
        status="UNSAT",
        nodes_explored=search.nodes,
        pruned_by=search.pruned,
    )


def _solve_parallel(
    g: Graph, k: int, cfg: SolveConfig, order: tuple[int, ...]
) -> SolveOutcome:
    """Partition the search across depth-2 prefixes and reduce deterministically.

    Workers race, but results are combined in prefix order: the earliest
    SAT prefix supplies the witness, which in canonical-min mode is exactly
    the global minimum (prefix order refines the lexicographic order).
    """
    probe = _Search(g, k, cfg, order)
    prefixes: list[tuple[int, ...]] = []
    depth = min(2, g.n)

    def enumerate_prefixes(d: int) -> None:
        if d == depth:
            prefixes.append(tuple(probe.color[order[i]] for i in range(depth)))
            return
        v = order[d]
        gid = probe.group[v]
        forced = probe.group_color.get(gid)
        cap = min(k, probe.maxused + 1)
        candidates = (
            ((forced,) if forced <= cap else ()) if forced is not None
            else tuple(range(1, cap + 1))
        )
        for c in candidates:
            if probe.bans[v][c] != 0:
                continue
            prev_max = probe.maxused
            probe.maxused = max(probe.maxused, c)
            set_group = forced is None
            if set_group:
                probe.group_color[gid] = c
            viable = probe._assign(v, c)
            if viable:
                enumerate_prefixes(d + 1)
            probe._unassign(v, c)
            if set_group:
                del probe.group_color[gid]
            probe.maxused = prev_max

    enumerate_prefixes(0)

    def run_prefix(prefix: tuple[int, ...]) -> tuple[_Search, bool]:
        search = _Search(g, k, cfg, order)
        for d, c in enumerate(prefix):
            v = order[d]
            gid = search.group[v]
            if gid not in search.group_color:
                search.group_color[gid] = c
            search.maxused = max(search.maxused, c)
            viable = search._assign(v, c)
            assert viable, "prefix was enumerated as viable"
        found = search.run(depth)
        return search, found

    workers = min(len(prefixes), os.cpu_count() or 4) or 1
    with ThreadPoolExecutor(max_workers=workers) as pool:
        results = list(pool.map(run_prefix, prefixes))

    nodes = probe.nodes + sum(s.nodes for s, _ in results)
    pruned: dict[str, int] = dict(probe.pruned)
    for s, _ in results:
        _merge_tallies(pruned, s.pruned)
    if cfg.mode == "count":
        total = sum(s.count for s, _ in results)
        return SolveOutcome(
            status="SAT" if total > 0 else "UNSAT",
            count=total,
            nodes_explored=nodes,
            pruned_by=pruned,
        )
    for s, found in results:
        if found:
            witness = Coloring(k, tuple(s.solutions[-1]))
            assert is_nbkc(g, witness).balanced, (
                "solver returned an unbalanced witness"
            )
            return SolveOutcome(
                status="SAT",
                witness=witness,
                nodes_explored=nodes,
                pruned_by=pruned,
            )
    return SolveOutcome(status="UNSAT", nodes_explored=nodes, pruned_by=pruned)


_DEFAULT_CAP_BITS = 24


def _enumeration_cap(n: int, k: int, cap_bits: int) -> None:
    total_bits = n * max(1, (k - 1).bit_length())
    if k**n > 2**cap_bits:
        raise ValueError(
            f"instance too large for exhaustive enumeration: k^n = {k}^{n} "
            f"exceeds 2^{cap_bits} (≈{total_bits} assignment bits)"
        )


def brute_force(g: Graph, k: int, cap_bits: int = _DEFAULT_CAP_BITS) -> SolveOutcome:
    """Exhaustive ground-truth check, sharing no pruning theory with solve.

    Enumerates all k^n assignments in lexicographic order (vertex 0 varies
    slowest) and tests balance by direct counting.  No degree gate, no
    symmetry breaking — deliberately, so this oracle cannot inherit a bug
    from the clever path.
    """
    if k < 2:
        raise ValueError(f"palette size must be at least 2, got {k}")
    _enumeration_cap(g.n, k, cap_bits)
    adj = tuple(g.neighbors(v) for v in range(g.n))
    nodes = 0
    for assignment in product(range(1, k + 1), repeat=g.n):
        nodes += 1
        if _balanced(adj, assignment, k):
            witness = Coloring(k, assignment)
            assert is_nbkc(g, witness).balanced
            return SolveOutcome(status="SAT", witness=witness, nodes_explored=nodes)
    return SolveOutcome(status="UNSAT", nodes_explored=nodes)


def count_colorings(g: Graph, k: int, cap_bits: int = _DEFAULT_CAP_BITS) -> int:
    """Number of balanced k-colorings with labeled colors, by enumeration."""
    if k < 2:
        raise ValueError(f"palette size must be at least 2, got {k}")
    _enumeration_cap(g.n, k, cap_bits)
    adj = tuple(g.neighbors(v) for v in range(g.n))
    return sum(
        1
        for assignment in product(range(1, k + 1), repeat=g.n)
        if _balanced(adj, assignment, k)
    )


def _balanced(
    adj: tuple[tuple[int, ...], ...], assignment: tuple[int, ...], k: int
) -> bool:
    for nb in adj:
        if not nb:
            continue
        share, rem = divmod(len(nb), k)
        if rem:
            return False
        counts = [0] * (k + 1)
        for u in nb:
            counts[assignment[u]] += 1
        for c in range(1, k + 1):
            if counts[c] != share:
                return False
    return True


__all__ = [
    "SolveConfig",
    "SolveOutcome",
    "solve",
    "brute_force",
    "count_colorings",
]
