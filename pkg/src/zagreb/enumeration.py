"""Isomorphism-free generation of trees, unicyclic graphs, and orientations.

Generators emit exactly one representative per isomorphism class, in
increasing canonical-code order, so every downstream enumeration (and hence
every certificate) is reproducible byte for byte.

Construction arguments are completeness arguments:

* trees on n vertices: every tree arises from a tree on n-1 vertices by
  attaching a leaf, so growing all trees by one leaf in every position and
  deduplicating by canonical code reaches every class;
* unicyclic graphs: deleting one cycle edge of a unicyclic graph leaves a
  spanning tree, so inserting every possible non-tree edge into every tree
  reaches every class;
* all graphs on n vertices: every graph arises from a graph on n-1 vertices
  by adding one vertex with some neighborhood.

Orientations are indexed by an integer mask over the sorted edge list, which
makes the 2^E stream splittable into ranges with no coordination.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterator

from .canon import canonical_code
from .digraphs import Digraph, Orientation
from .errors import ParameterError, SizeLimitError
from .graphs import Graph, is_connected, matching_number
from .limits import MAX_ORIENTATION_EDGES, max_vertices


@dataclass(frozen=True)
class GraphClassSpec:
    """A class of graphs: trees or unicyclic graphs with fixed n and
    matching number m, within the ranges the extremal results cover."""

    kind: str
    n: int
    m: int

    def __post_init__(self) -> None:
        if self.kind not in ("tree", "unicyclic"):
            raise ParameterError(f"kind must be 'tree' or 'unicyclic', got {self.kind!r}")
        low = 1 if self.kind == "tree" else 2
        if not low <= self.m <= self.n // 2:
            raise ParameterError(
                f"{self.kind} class needs {low} <= m <= n//2, got n={self.n}, m={self.m}"
            )


def _check_cap(n: int, least: int, what: str) -> None:
    cap = max_vertices()
    if not least <= n <= cap:
        raise SizeLimitError(f"{what} supports {least} <= n <= {cap}, got {n}")


def _dedupe_sorted(candidates) -> tuple[Graph, ...]:
    by_code: dict[bytes, Graph] = {}
    for g in candidates:
        code = canonical_code(g)
        if code not in by_code:
            by_code[code] = g
    return tuple(g for _, g in sorted(by_code.items()))


@lru_cache(maxsize=None)
def _trees(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph(1, ()),)
    candidates = []
    for t in _trees(n - 1):
        for v in range(t.n):
            candidates.append(Graph(n, tuple(sorted(t.edges + ((v, n - 1),)))))
    return _dedupe_sorted(candidates)


def all_trees(n: int) -> tuple[Graph, ...]:
    """One representative per unlabeled tree on n vertices."""
    _check_cap(n, 1, "tree generation")
    return _trees(n)


@lru_cache(maxsize=None)
def _unicyclic(n: int) -> tuple[Graph, ...]:
    seen_labeled: set[tuple] = set()
    candidates = []
    for t in _trees(n):
        present = set(t.edges)
        for u, v in combinations(range(n), 2):
            if (u, v) in present:
                continue
            edges = tuple(sorted(t.edges + ((u, v),)))
            if edges in seen_labeled:
                continue
            seen_labeled.add(edges)
            candidates.append(Graph(n, edges))
    return _dedupe_sorted(candidates)


def all_unicyclic(n: int) -> tuple[Graph, ...]:
    """One representative per unlabeled connected graph with exactly n edges."""
    _check_cap(n, 3, "unicyclic generation")
    return _unicyclic(n)


@lru_cache(maxsize=None)
def _graphs(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph(1, ()),)
    seen_labeled: set[tuple] = set()
    candidates = []
    for g in _graphs(n - 1):
        for neighborhood in range(1 << (n - 1)):
            extra = tuple(
                (v, n - 1) for v in range(n - 1) if (neighborhood >> v) & 1
            )
            edges = tuple(sorted(g.edges + extra))
            if edges in seen_labeled:
                continue
            seen_labeled.add(edges)
            candidates.append(Graph(n, edges))
    return _dedupe_sorted(candidates)


def all_graphs(n: int) -> tuple[Graph, ...]:
    """One representative per unlabeled simple graph on n vertices."""
    _check_cap(n, 1, "graph generation")
    return _graphs(n)


def all_connected(n: int) -> tuple[Graph, ...]:
    """One representative per unlabeled connected simple graph on n vertices."""
    return tuple(g for g in all_graphs(n) if is_connected(g))


@lru_cache(maxsize=None)
def _class_members(kind: str, n: int, m: int) -> tuple[Graph, ...]:
    pool = _trees(n) if kind == "tree" else _unicyclic(n)
    return tuple(g for g in pool if matching_number(g) == m)


def graphs_in_class(spec: GraphClassSpec) -> tuple[Graph, ...]:
    """The members of the class, filtered by exact matching number.

    An empty class yields an empty tuple, not an error.
    """
    _check_cap(spec.n, 1 if spec.kind == "tree" else 3, "class generation")
    return _class_members(spec.kind, spec.n, spec.m)


def orientation_count(g: Graph) -> int:
    return 1 << len(g.edges)


def orientation_at(g: Graph, index: int) -> Digraph:
    """The orientation with direction bits ``index`` over the sorted edges."""
    if len(g.edges) > MAX_ORIENTATION_EDGES:
        raise SizeLimitError(
            f"orientation masks support |E| <= {MAX_ORIENTATION_EDGES}, "
            f"got {len(g.edges)}"
        )
    return Orientation(g, index).digraph()


def orientations(g: Graph) -> Iterator[Digraph]:
    """All 2^|E| orientations, in increasing mask order."""
    if len(g.edges) > MAX_ORIENTATION_EDGES:
        raise SizeLimitError(
            f"orientation masks support |E| <= {MAX_ORIENTATION_EDGES}, "
            f"got {len(g.edges)}"
        )
    for mask in range(1 << len(g.edges)):
        yield Orientation(g, mask).digraph()
