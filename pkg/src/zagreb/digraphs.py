"""Primitives for digraphs and for orientations of undirected graphs.

The index of a digraph is computed by two distinct routes every time:

* arc route     -- half the sum over arcs of (tail out-degree + head in-degree)
* vertex route  -- half the sum over vertices of (out-degree^2 + in-degree^2)

The two sums are equal for every digraph (each out-degree d+ appears d+ times
across the arc sum, likewise for in-degrees), and the doubled value has the
parity of twice the arc count, so the index is always an exact integer.  Both
facts are asserted on every call; a violation raises FormulaMismatchError
and means the engine itself is broken.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    FormulaMismatchError,
    IsolatedVertexError,
    NotBipartiteError,
    NotConnectedError,
    ParameterError,
)
from .graphs import Graph, is_connected, two_coloring


@dataclass(frozen=True)
class Digraph:
    """Simple digraph on vertices 0..n-1 with a sorted arc tuple, no loops."""

    n: int
    arcs: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ParameterError(f"digraph needs at least one vertex, got n={self.n}")
        prev = None
        for arc in self.arcs:
            u, v = arc
            if u == v:
                raise ParameterError(f"loop at vertex {u} not allowed")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ParameterError(f"arc {arc} invalid for n={self.n}")
            if prev is not None and arc <= prev:
                raise ParameterError(f"arcs not strictly increasing at {arc}")
            prev = arc

    @classmethod
    def from_arcs(cls, n: int, pairs) -> "Digraph":
        return cls(n, tuple(sorted(set((int(a), int(b)) for a, b in pairs))))

    def out_degrees(self) -> tuple[int, ...]:
        deg = [0] * self.n
        for u, _ in self.arcs:
            deg[u] += 1
        return tuple(deg)

    def in_degrees(self) -> tuple[int, ...]:
        deg = [0] * self.n
        for _, v in self.arcs:
            deg[v] += 1
        return tuple(deg)

    def out_masks(self) -> tuple[int, ...]:
        masks = [0] * self.n
        for u, v in self.arcs:
            masks[u] |= 1 << v
        return tuple(masks)

    def in_masks(self) -> tuple[int, ...]:
        masks = [0] * self.n
        for u, v in self.arcs:
            masks[v] |= 1 << u
        return tuple(masks)

    def underlying_graph(self) -> Graph:
        return Graph.from_edges(self.n, self.arcs)


@dataclass(frozen=True)
class Orientation:
    """One direction bit per edge of a base graph, in sorted edge order.

    Bit 0 for stored edge (u, v) means the arc u -> v; bit 1 means v -> u.
    """

    base: Graph
    bits: int

    def __post_init__(self) -> None:
        if not 0 <= self.bits < (1 << len(self.base.edges)):
            raise ParameterError(
                f"bits {self.bits:#x} out of range for {len(self.base.edges)} edges"
            )

    def digraph(self) -> Digraph:
        arcs = []
        for index, (u, v) in enumerate(self.base.edges):
            if (self.bits >> index) & 1:
                arcs.append((v, u))
            else:
                arcs.append((u, v))
        return Digraph(self.base.n, tuple(sorted(arcs)))

    def hex(self) -> str:
        width = max(1, (len(self.base.edges) + 3) // 4)
        return format(self.bits, f"0{width}x")


def m1_digraph(d: Digraph) -> int:
    """First Zagreb index of a digraph, exact, with the dual-route assertion."""
    outs = d.out_degrees()
    ins = d.in_degrees()
    if d.n > 1:
        for v in range(d.n):
            if outs[v] == 0 and ins[v] == 0:
                raise IsolatedVertexError(f"vertex {v} is isolated; index undefined")
    doubled_arc = 0
    for u, v in d.arcs:
        doubled_arc += outs[u] + ins[v]
    doubled_vertex = sum(o * o + i * i for o, i in zip(outs, ins))
    if doubled_arc != doubled_vertex:
        raise FormulaMismatchError(
            f"arc route {doubled_arc} != vertex route {doubled_vertex} on {d}"
        )
    if doubled_arc % 2 != 0:
        raise FormulaMismatchError(f"doubled index {doubled_arc} is odd on {d}")
    return doubled_arc // 2


def is_sink_source(d: Digraph) -> bool:
    """True when every vertex has out-degree 0 or in-degree 0."""
    return all(o == 0 or i == 0 for o, i in zip(d.out_degrees(), d.in_degrees()))


def reverse(d: Digraph) -> Digraph:
    """Flip every arc; the underlying graph is unchanged."""
    return Digraph(d.n, tuple(sorted((v, u) for u, v in d.arcs)))


def sink_source_orientations(g: Graph) -> tuple[Digraph, Digraph]:
    """The exactly-two sink-source orientations of a connected bipartite graph.

    Every edge is directed from color class 0 to class 1, and the reverse.
    The coloring starts with color 0 at vertex 0, so the pair is
    deterministic.
    """
    if not is_connected(g):
        raise NotConnectedError("sink-source orientations need a connected graph")
    coloring = two_coloring(g)
    if coloring is None:
        raise NotBipartiteError("graph has an odd cycle; no sink-source orientation")
    forward = []
    for u, v in g.edges:
        forward.append((u, v) if coloring[u] == 0 else (v, u))
    first = Digraph(g.n, tuple(sorted(forward)))
    return first, reverse(first)
