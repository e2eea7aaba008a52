"""Exact primitives for simple undirected graphs.

Vertices are the integers ``0 .. n-1``.  Edges are stored as a strictly
increasing tuple of pairs ``(u, v)`` with ``u < v``; that fixed order is what
orientation bit-vectors index into, so it is part of the data contract, not
an implementation detail.

All functions are pure: a :class:`Graph` is frozen and hashable, and nothing
here mutates shared state, so values can be passed between threads freely.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations

from .errors import (
    IsolatedVertexError,
    NotATreeError,
    ParameterError,
    SizeLimitError,
)
from .limits import MAX_MATCHING_VERTICES


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1 with a sorted edge tuple."""

    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ParameterError(f"graph needs at least one vertex, got n={self.n}")
        prev = None
        for edge in self.edges:
            u, v = edge
            if not (0 <= u < v < self.n):
                raise ParameterError(f"edge {edge} invalid for n={self.n}")
            if prev is not None and edge <= prev:
                raise ParameterError(f"edges not strictly increasing at {edge}")
            prev = edge

    @classmethod
    def from_edges(cls, n: int, pairs) -> "Graph":
        """Build a graph from endpoint pairs in any order, normalizing them."""
        normalized = set()
        for a, b in pairs:
            if a == b:
                raise ParameterError(f"loop at vertex {a} not allowed")
            normalized.add((min(a, b), max(a, b)))
        return cls(n, tuple(sorted(normalized)))

    def degrees(self) -> tuple[int, ...]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return tuple(deg)

    def adjacency_masks(self) -> tuple[int, ...]:
        """Per-vertex neighbor sets as bitmasks."""
        masks = [0] * self.n
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    def neighbors(self, v: int) -> tuple[int, ...]:
        mask = self.adjacency_masks()[v]
        return tuple(w for w in range(self.n) if (mask >> w) & 1)

    def adjacency_lists(self) -> tuple[tuple[int, ...], ...]:
        lists: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            lists[u].append(v)
            lists[v].append(u)
        return tuple(tuple(sorted(l)) for l in lists)


@dataclass(frozen=True)
class Matching:
    """A set of pairwise vertex-disjoint edges of some graph."""

    edges: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        seen: set[int] = set()
        for u, v in self.edges:
            if u in seen or v in seen:
                raise ParameterError(f"matching edges share vertex at {(u, v)}")
            seen.add(u)
            seen.add(v)

    def __len__(self) -> int:
        return len(self.edges)

    def saturated(self) -> frozenset[int]:
        return frozenset(v for e in self.edges for v in e)


def is_connected(g: Graph) -> bool:
    if g.n == 1:
        return True
    adj = g.adjacency_masks()
    seen = 1
    stack = [0]
    while stack:
        v = stack.pop()
        todo = adj[v] & ~seen
        while todo:
            w = (todo & -todo).bit_length() - 1
            todo &= todo - 1
            seen |= 1 << w
            stack.append(w)
    return seen == (1 << g.n) - 1


def m1_undirected(g: Graph) -> int:
    """First Zagreb index: sum of endpoint-degree sums over the edges.

    Equals the sum of squared degrees.  Rejects graphs with isolated
    vertices (degree 0) when n > 1; the index is meaningless there.
    """
    deg = g.degrees()
    if g.n > 1 and 0 in deg:
        raise IsolatedVertexError(
            f"vertex {deg.index(0)} is isolated; index undefined"
        )
    return sum(deg[u] + deg[v] for u, v in g.edges)


def two_coloring(g: Graph) -> tuple[int, ...] | None:
    """A proper 2-coloring (0/1 per vertex), or None if an odd cycle exists.

    Every component is colored starting from its smallest vertex with
    color 0, which makes the witness deterministic.
    """
    adj = g.adjacency_lists()
    color = [-1] * g.n
    for start in range(g.n):
        if color[start] != -1:
            continue
        color[start] = 0
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w in adj[v]:
                if color[w] == -1:
                    color[w] = 1 - color[v]
                    queue.append(w)
                elif color[w] == color[v]:
                    return None
    return tuple(color)


def is_bipartite(g: Graph) -> bool:
    return two_coloring(g) is not None


def is_unicyclic(g: Graph) -> bool:
    """Connected with exactly one cycle, i.e. exactly n edges."""
    return len(g.edges) == g.n and is_connected(g)


def is_tree(g: Graph) -> bool:
    return len(g.edges) == g.n - 1 and is_connected(g)


def _bfs_dist(adj, start: int, n: int) -> tuple[list[int], list[int]]:
    dist = [-1] * n
    parent = [-1] * n
    dist[start] = 0
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if dist[w] == -1:
                dist[w] = dist[v] + 1
                parent[w] = v
                queue.append(w)
    return dist, parent


def diametrical_path(g: Graph) -> tuple[int, ...]:
    """One longest path of a tree, found by the double breadth-first sweep.

    Ties are broken toward smaller vertex indices, so the result is
    deterministic.  Raises NotATreeError on anything but a tree.
    """
    if not is_tree(g):
        raise NotATreeError("diametrical path is defined for trees only")
    if g.n == 1:
        return (0,)
    adj = g.adjacency_lists()
    dist0, _ = _bfs_dist(adj, 0, g.n)
    u = dist0.index(max(dist0))
    dist_u, parent = _bfs_dist(adj, u, g.n)
    v = dist_u.index(max(dist_u))
    path = [v]
    while path[-1] != u:
        path.append(parent[path[-1]])
    return tuple(reversed(path))


def tree_diameter(g: Graph) -> int:
    return len(diametrical_path(g)) - 1


# ---------------------------------------------------------------------------
# Maximum matching
# ---------------------------------------------------------------------------
#
# The solver tabulates the maximum matching size of every induced vertex
# subset (2^n states, O(deg) transitions).  At the engine's size cap this is
# instant and, unlike augmenting-path search without blossom handling, it is
# exact on graphs with odd cycles.


def _matching_table(g: Graph) -> list[int]:
    if g.n > MAX_MATCHING_VERTICES:
        raise SizeLimitError(
            f"matching solver supports n <= {MAX_MATCHING_VERTICES}, got {g.n}"
        )
    adj = g.adjacency_masks()
    size = 1 << g.n
    table = [0] * size
    for mask in range(1, size):
        v = (mask & -mask).bit_length() - 1
        rest = mask ^ (1 << v)
        best = table[rest]
        nbrs = adj[v] & rest
        while nbrs:
            u = (nbrs & -nbrs).bit_length() - 1
            nbrs &= nbrs - 1
            cand = 1 + table[rest ^ (1 << u)]
            if cand > best:
                best = cand
        table[mask] = best
    return table


def matching_number(g: Graph) -> int:
    """Size of a maximum matching."""
    return _matching_table(g)[(1 << g.n) - 1]


def maximum_matching(g: Graph) -> Matching:
    """One maximum matching, reconstructed deterministically."""
    table = _matching_table(g)
    adj = g.adjacency_masks()
    mask = (1 << g.n) - 1
    chosen: list[tuple[int, int]] = []
    while mask:
        v = (mask & -mask).bit_length() - 1
        rest = mask ^ (1 << v)
        if table[mask] == table[rest]:
            mask = rest
            continue
        nbrs = adj[v] & rest
        while nbrs:
            u = (nbrs & -nbrs).bit_length() - 1
            nbrs &= nbrs - 1
            if 1 + table[rest ^ (1 << u)] == table[mask]:
                chosen.append((v, u) if v < u else (u, v))
                mask = rest ^ (1 << u)
                break
    return Matching(tuple(sorted(chosen)))


def all_maximum_matchings(g: Graph) -> tuple[Matching, ...]:
    """Every maximum matching, by exhaustive subset search.

    Complete enumeration is required before concluding that no maximum
    matching has some property; feasible at desk scale.
    """
    m = matching_number(g)
    found = []
    for subset in combinations(g.edges, m):
        seen: set[int] = set()
        ok = True
        for u, v in subset:
            if u in seen or v in seen:
                ok = False
                break
            seen.add(u)
            seen.add(v)
        if ok:
            found.append(Matching(subset))
    return tuple(found)


def has_perfect_matching(g: Graph) -> bool:
    return g.n % 2 == 0 and matching_number(g) == g.n // 2
