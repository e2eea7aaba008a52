"""Constructors for the named extremal graphs and the closed-form bounds.

Vertex numbering is fixed so that serialized output is reproducible:

* broom tree T(n, m): hub 0; star leaves 1 .. n-m; leaf j (1 <= j <= m-1)
  carries the outer pendant n-m+j.  It is the star on n-m+1 vertices with a
  pendant attached to each of m-1 of its leaves, has matching number m, and
  maximizes the undirected index among trees with a perfect matching when
  n = 2m.
* hub unicyclic graph U(n, m): triangle 0-1-2 with hub 0; pendants
  3 .. 3+(n-2m+1)-1 on the hub; then m-2 two-edge paths hub-a-b stored as
  consecutive pairs.  The hub ends with degree n-m+1 and the graph has
  matching number m.

The four distinguished orientations of U(n, m) make the hub a full source or
a full sink and try both directions of the far triangle edge 1-2; path middle
vertices become pure sinks (hub-source case) or pure sources (hub-sink case).
Each attains the closed-form orientation bound exactly, which the
verification harness checks against exhaustive search.
"""

from __future__ import annotations

from .digraphs import Digraph, sink_source_orientations
from .errors import FormulaMismatchError, ParameterError
from .graphs import Graph


def make_cycle(k: int) -> Graph:
    if k < 3:
        raise ParameterError(f"cycle needs k >= 3 vertices, got {k}")
    return Graph.from_edges(k, [(i, (i + 1) % k) for i in range(k)])


def make_star(k: int) -> Graph:
    """The star with k leaves (hub 0)."""
    if k < 1:
        raise ParameterError(f"star needs k >= 1 leaves, got {k}")
    return Graph(k + 1, tuple((0, i) for i in range(1, k + 1)))


def make_g1() -> Graph:
    """Triangle 0-1-2 with one pendant on each triangle vertex."""
    return Graph.from_edges(6, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 4), (2, 5)])


def make_c4_two_pendants() -> Graph:
    """Four-cycle 0-1-2-3 with pendants on the adjacent vertices 0 and 1."""
    return Graph.from_edges(6, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 4), (1, 5)])


def make_named(name: str, k: int | None = None) -> Graph:
    """Named-graph dispatch used by the command line."""
    if name == "cycle":
        if k is None:
            raise ParameterError("cycle needs a size parameter")
        return make_cycle(k)
    if name == "star":
        if k is None:
            raise ParameterError("star needs a size parameter")
        return make_star(k)
    if name == "g1":
        return make_g1()
    if name == "u42":
        return u_nm(4, 2)
    if name == "c4_two_pendants":
        return make_c4_two_pendants()
    raise ParameterError(f"unknown family name {name!r}")


def _check_tree_range(n: int, m: int) -> None:
    if not 1 <= m <= n // 2:
        raise ParameterError(f"tree family needs 1 <= m <= n//2, got n={n}, m={m}")


def _check_unicyclic_range(n: int, m: int) -> None:
    if not 2 <= m <= n // 2:
        raise ParameterError(
            f"unicyclic family needs 2 <= m <= n//2, got n={n}, m={m}"
        )


def t_nm(n: int, m: int) -> Graph:
    """The broom tree: star with n-m leaves, m-1 of them carrying a pendant."""
    _check_tree_range(n, m)
    edges = [(0, i) for i in range(1, n - m + 1)]
    edges += [(j, n - m + j) for j in range(1, m)]
    return Graph(n, tuple(sorted(edges)))


def u_nm(n: int, m: int) -> Graph:
    """The hub unicyclic graph: triangle plus pendants and two-edge paths."""
    _check_unicyclic_range(n, m)
    pendants = n - 2 * m + 1
    edges = [(0, 1), (0, 2), (1, 2)]
    edges += [(0, 3 + i) for i in range(pendants)]
    first_path = 3 + pendants
    for i in range(m - 2):
        a = first_path + 2 * i
        b = a + 1
        edges += [(0, a), (a, b)]
    return Graph(n, tuple(sorted(edges)))


def u_extremal_orientations(n: int, m: int) -> tuple[Digraph, ...]:
    """The four distinguished orientations of the hub unicyclic graph.

    Order: hub-source with triangle arc 1->2, hub-source with 2->1, then the
    two hub-sink mirrors with the same triangle arcs.  Reversal maps the
    hub-source pair onto the hub-sink pair.
    """
    g = u_nm(n, m)
    hub_out = [(0, v) for v in range(1, g.n) if (0, v) in g.edges]
    paths = [(u, v) for u, v in g.edges if u != 0]
    paths = [e for e in paths if e != (1, 2)]

    def build(hub_is_source: bool, triangle_arc: tuple[int, int]) -> Digraph:
        arcs = []
        for _, v in hub_out:
            arcs.append((0, v) if hub_is_source else (v, 0))
        arcs.append(triangle_arc)
        for a, b in paths:
            # middle vertex a (hub neighbor) is a pure sink when the hub is
            # a source, a pure source otherwise
            arcs.append((b, a) if hub_is_source else (a, b))
        return Digraph(g.n, tuple(sorted(arcs)))

    return (
        build(True, (1, 2)),
        build(True, (2, 1)),
        build(False, (1, 2)),
        build(False, (2, 1)),
    )


def extremal_set(n: int, m: int) -> tuple[Digraph, ...]:
    """Every construction attaining the orientation bound for the class.

    The four hub orientations always; additionally the two sink-source
    orientations of the 4-cycle for (4, 2) and of the 4-cycle with two
    pendants for (6, 3).
    """
    constructions = list(u_extremal_orientations(n, m))
    if (n, m) == (4, 2):
        constructions.extend(sink_source_orientations(make_cycle(4)))
    elif (n, m) == (6, 3):
        constructions.extend(sink_source_orientations(make_c4_two_pendants()))
    return tuple(constructions)


def _halved(numerator: int, label: str) -> int:
    if numerator % 2 != 0:
        raise FormulaMismatchError(f"{label} gave odd value {numerator}")
    return numerator // 2


def bound_unicyclic(n: int, m: int) -> int:
    """Maximum orientation index over unicyclic graphs with matching number m."""
    _check_unicyclic_range(n, m)
    return _halved(n * n + (-2 * m + 3) * n + m * m + m - 2, "unicyclic bound")


def bound_unicyclic_perfect(m: int) -> int:
    """The unicyclic orientation bound specialized to a perfect matching."""
    if m < 2:
        raise ParameterError(f"perfect-matching bound needs m >= 2, got {m}")
    return _halved(m * m + 7 * m - 2, "perfect-matching unicyclic bound")


def bound_tree(m: int) -> int:
    """Maximum undirected index over trees with a perfect matching of size m."""
    if m < 1:
        raise ParameterError(f"tree bound needs m >= 1, got {m}")
    return m * m + 5 * m - 4


def bound_tree_oriented(m: int) -> int:
    """Maximum orientation index over trees with a perfect matching of size m."""
    if m < 1:
        raise ParameterError(f"oriented tree bound needs m >= 1, got {m}")
    return _halved(m * m + 5 * m - 4, "oriented tree bound")
