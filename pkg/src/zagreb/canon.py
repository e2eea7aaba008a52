"""Canonical codes for small graphs and digraphs.

A code is the minimum, over all vertex orderings, of the adjacency bit-matrix
read in a fixed traversal order, packed into bytes.  Two (di)graphs get equal
codes exactly when they are isomorphic, which is what the extremal-set
comparisons need.  The search is exact (it ranges over all n! orderings) and
is kept fast by branch-and-bound on the encoding prefix plus a sound
symmetry rule: interchangeable vertex pairs (twins) are branched only once.

Traversal order: placing vertex number k appends its adjacency bits toward
the k already-placed vertices.  For digraphs the in-bits come first, then the
out-bits.  Earlier bits are more significant, so the minimum prefers graphs
whose early vertices are pairwise non-adjacent.

Sizes are capped (default 12 vertices): beyond desk scale the exhaustive
minimum is the wrong tool and the cap makes that explicit.
"""

from __future__ import annotations

from functools import lru_cache

from .digraphs import Digraph
from .errors import SizeLimitError
from .graphs import Graph
from .limits import max_vertices

_KIND_GRAPH = ord("G")
_KIND_DIGRAPH = ord("D")

# Strictly larger than any column value (columns carry at most 2n < 64 bits).
_INF = 1 << 64


def _swap_bits(mask: int, a: int, b: int) -> int:
    if ((mask >> a) ^ (mask >> b)) & 1:
        return mask ^ ((1 << a) | (1 << b))
    return mask


def _twin_pairs(out_masks, in_masks) -> set[tuple[int, int]]:
    """Vertex pairs whose transposition is an automorphism."""
    n = len(out_masks)
    pairs = set()
    for u in range(n):
        for v in range(u + 1, n):
            if _swap_bits(out_masks[u], u, v) != out_masks[v]:
                continue
            if in_masks is not None and _swap_bits(in_masks[u], u, v) != in_masks[v]:
                continue
            pairs.add((u, v))
    return pairs


def _min_encoding(n: int, out_masks, in_masks) -> list[int]:
    """Minimum per-level column values over all vertex orderings.

    ``best`` is updated in place during the search: whenever a strictly
    smaller column is found at some level, all deeper levels reset to the
    sentinel and the first completed leaf below refreshes them.  Branches
    whose column exceeds the current best prefix are cut, as are branches
    starting at a twin of an already-explored sibling.
    """
    directed = in_masks is not None
    twins = _twin_pairs(out_masks, in_masks)
    best = [_INF] * n
    placed = [0] * n
    used = [False] * n

    def column(v: int, level: int) -> int:
        col = 0
        if directed:
            for i in range(level):
                col = (col << 1) | ((out_masks[placed[i]] >> v) & 1)
            for i in range(level):
                col = (col << 1) | ((out_masks[v] >> placed[i]) & 1)
        else:
            for i in range(level):
                col = (col << 1) | ((out_masks[v] >> placed[i]) & 1)
        return col

    def descend(level: int) -> None:
        if level == n:
            return
        scored = sorted(
            (column(v, level), v) for v in range(n) if not used[v]
        )
        tried: list[int] = []
        for col, v in scored:
            if level > 0:
                if col > best[level]:
                    break
                if col < best[level]:
                    best[level] = col
                    for j in range(level + 1, n):
                        best[j] = _INF
            if any((min(u, v), max(u, v)) in twins for u in tried):
                continue
            tried.append(v)
            used[v] = True
            placed[level] = v
            descend(level + 1)
            used[v] = False

    descend(0)
    return best[1:]


def _pack(kind: int, n: int, columns, directed: bool) -> bytes:
    value = 0
    nbits = 0
    for level, col in enumerate(columns, start=1):
        width = 2 * level if directed else level
        value = (value << width) | col
        nbits += width
    return bytes([kind, n]) + value.to_bytes((nbits + 7) // 8, "big")


def _check_size(n: int) -> None:
    cap = max_vertices()
    if n > cap:
        raise SizeLimitError(f"canonical code supports n <= {cap}, got {n}")


@lru_cache(maxsize=262144)
def canonical_code(g: Graph) -> bytes:
    """Isomorphism-invariant byte code of an undirected graph."""
    _check_size(g.n)
    cols = _min_encoding(g.n, g.adjacency_masks(), None)
    return _pack(_KIND_GRAPH, g.n, cols, directed=False)


@lru_cache(maxsize=262144)
def canonical_code_digraph(d: Digraph) -> bytes:
    """Isomorphism-invariant byte code of a digraph (full ordered matrix)."""
    _check_size(d.n)
    cols = _min_encoding(d.n, d.out_masks(), d.in_masks())
    return _pack(_KIND_DIGRAPH, d.n, cols, directed=True)
