"""Exhaustive verification of the orientation-index bounds, with certificates.

Every claim is checked by brute force at desk scale: enumerate each graph
class up to isomorphism, sweep all 2^|E| orientations of every member with
the scan kernels, and compare the exact maximum and the full achiever set
against the closed-form bound and the constructed extremal orientations.
The outcome is a :class:`Certificate` carrying everything needed to
reproduce or refute the claim; a FAIL certificate serializes a
counterexample instead of raising.

Two invariants are enforced unconditionally during every sweep and raise
:class:`FormulaMismatchError` (an engine bug, not a refutation) when hit:
the arc route and the vertex route of the doubled index must agree on every
orientation examined, and the doubled value must be even.

Achiever sets are compared as digraph isomorphism classes (canonical codes),
since the extremal constructions are given as unlabeled drawings; labeled
achievers remain available through :func:`max_over_orientations`.

Work splits over orientation-mask ranges, and certificates are merged with
associative max/union reductions in fixed range order, so results are
byte-identical no matter how many threads run.
"""

from __future__ import annotations

import json
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .canon import canonical_code, canonical_code_digraph
from .digraphs import Digraph, sink_source_orientations
from .enumeration import (
    GraphClassSpec,
    all_connected,
    all_trees,
    all_unicyclic,
    graphs_in_class,
    orientation_at,
    orientation_count,
)
from .errors import FormulaMismatchError, IsolatedVertexError, SizeLimitError
from .families import (
    bound_tree,
    bound_tree_oriented,
    bound_unicyclic,
    bound_unicyclic_perfect,
    extremal_set,
    make_g1,
    t_nm,
    u_extremal_orientations,
    u_nm,
)
from .formats import format_digraph, format_graph
from .graphs import (
    Graph,
    all_maximum_matchings,
    has_perfect_matching,
    is_bipartite,
    is_unicyclic,
    m1_undirected,
    matching_number,
    diametrical_path,
)
from .kernels import doubled_m1_scan, edge_arrays, sink_source_scan
from .limits import MAX_DISTRIBUTION_EDGES, MAX_ORIENTATION_EDGES, max_vertices

PASS = "PASS"
FAIL = "FAIL"

_CHUNK = 1 << 16

# The half-bound sweep is exhaustive over all connected graphs; beyond seven
# vertices the orientation space of the dense graphs alone exceeds desk scale.
HALF_BOUND_MAX_N = 7

# The diametrical-path property stays exact and cheap through twelve vertices.
DIAMETRICAL_MAX_N = 12


@dataclass
class Certificate:
    """Machine-readable record of one verified claim."""

    claim_id: str
    params: dict
    expected_bound: int | None
    observed_max: int | None
    status: str
    graphs_examined: int
    orientations_examined: int
    achiever_codes: tuple[str, ...] = ()
    expected_codes: tuple[str, ...] = ()
    counterexample: str | None = None

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def to_dict(self) -> dict:
        record = {
            "claim_id": self.claim_id,
            "params": self.params,
            "expected_bound": self.expected_bound,
            "observed_max": self.observed_max,
            "status": self.status,
            "graphs_examined": self.graphs_examined,
            "orientations_examined": self.orientations_examined,
            "achiever_codes": list(self.achiever_codes),
            "expected_codes": list(self.expected_codes),
        }
        if self.counterexample is not None:
            record["counterexample"] = self.counterexample
        return record

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


# ---------------------------------------------------------------------------
# Orientation sweeps
# ---------------------------------------------------------------------------


def _reject_isolated(g: Graph) -> None:
    if g.n > 1 and 0 in g.degrees():
        raise IsolatedVertexError("orientation sweep needs a graph without isolated vertices")


def _scan_chunks(g: Graph, *, with_ss: bool, threads: int, backend: str | None):
    """Yield (lo, hi, index values, sink-source flags) over all masks, in order.

    Runs both index routes on every chunk and asserts they agree; this is the
    always-on identity check every consumer inherits.
    """
    _reject_isolated(g)
    eu, ev = edge_arrays(g.edges)
    total = 1 << len(g.edges)
    ranges = [(lo, min(lo + _CHUNK, total)) for lo in range(0, total, _CHUNK)]

    def work(rng):
        lo, hi = rng
        vert2, arc2 = doubled_m1_scan(g.n, eu, ev, lo, hi, backend)
        if not np.array_equal(vert2, arc2):
            bad = int(np.nonzero(vert2 != arc2)[0][0])
            raise FormulaMismatchError(
                f"index routes disagree at mask {lo + bad} of graph {g.edges}"
            )
        if (vert2 & 1).any():
            bad = int(np.nonzero(vert2 & 1)[0][0])
            raise FormulaMismatchError(
                f"odd doubled index at mask {lo + bad} of graph {g.edges}"
            )
        flags = sink_source_scan(g.n, eu, ev, lo, hi, backend) if with_ss else None
        return lo, hi, vert2 >> 1, flags

    if threads > 1 and len(ranges) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            yield from pool.map(work, ranges)
    else:
        for rng in ranges:
            yield work(rng)


def max_over_orientations(
    g: Graph, *, threads: int = 1, backend: str | None = None
) -> tuple[int, tuple[Digraph, ...]]:
    """Exact orientation-index maximum and every labeled achiever."""
    if len(g.edges) > MAX_ORIENTATION_EDGES:
        raise SizeLimitError(
            f"orientation sweep supports |E| <= {MAX_ORIENTATION_EDGES}, got {len(g.edges)}"
        )
    best = -1
    masks: list[int] = []
    for lo, _, values, _ in _scan_chunks(g, with_ss=False, threads=threads, backend=backend):
        chunk_max = int(values.max())
        if chunk_max < best:
            continue
        where = (np.nonzero(values == chunk_max)[0] + lo).tolist()
        if chunk_max > best:
            best = chunk_max
            masks = where
        else:
            masks.extend(where)
    return best, tuple(orientation_at(g, mask) for mask in masks)


def distribution(
    g: Graph, *, threads: int = 1, backend: str | None = None
) -> dict[int, int]:
    """Exact histogram of the index over all 2^|E| orientations."""
    if len(g.edges) > MAX_DISTRIBUTION_EDGES:
        raise SizeLimitError(
            f"distribution supports |E| <= {MAX_DISTRIBUTION_EDGES}, got {len(g.edges)}"
        )
    hist: Counter = Counter()
    for _, _, values, _ in _scan_chunks(g, with_ss=False, threads=threads, backend=backend):
        uniq, counts = np.unique(values, return_counts=True)
        hist.update({int(v): int(c) for v, c in zip(uniq, counts)})
    return dict(sorted(hist.items()))


def _class_maximum(
    members, *, threads: int, backend: str | None
) -> tuple[int, list[Digraph], int]:
    """Maximum and labeled achievers over all orientations of all members."""
    best = -1
    achievers: list[Digraph] = []
    examined = 0
    for g in members:
        examined += orientation_count(g)
        gmax, gach = max_over_orientations(g, threads=threads, backend=backend)
        if gmax > best:
            best = gmax
            achievers = list(gach)
        elif gmax == best:
            achievers.extend(gach)
    return best, achievers, examined


def _code_set(digraphs) -> tuple[str, ...]:
    return tuple(sorted({canonical_code_digraph(d).hex() for d in digraphs}))


# ---------------------------------------------------------------------------
# Theorem-level certificates
# ---------------------------------------------------------------------------


def verify_theorem1(
    n: int,
    m: int,
    *,
    threads: int = 1,
    backend: str | None = None,
    claim_id: str | None = None,
    expected_bound: int | None = None,
) -> Certificate:
    """Exhaustively check the unicyclic orientation bound and its achievers.

    Sweeps every orientation of every unicyclic graph with the given vertex
    count and matching number; PASS requires the observed maximum to equal
    the closed form exactly and the achiever isomorphism classes to equal
    the constructed extremal set.
    """
    bound = bound_unicyclic(n, m) if expected_bound is None else expected_bound
    members = graphs_in_class(GraphClassSpec("unicyclic", n, m))
    best, achievers, examined = _class_maximum(members, threads=threads, backend=backend)
    for d in achievers:
        base = d.underlying_graph()
        if not is_unicyclic(base) or matching_number(base) != m:
            raise FormulaMismatchError("achiever escaped its graph class")
    achiever_codes = _code_set(achievers)
    expected_codes = _code_set(extremal_set(n, m))
    status = PASS if (best == bound and achiever_codes == expected_codes) else FAIL
    counterexample = None
    if best > bound and achievers:
        counterexample = (
            f"orientation exceeding the bound ({best} > {bound}):\n"
            + format_digraph(achievers[0])
        )
    elif status == FAIL:
        counterexample = _describe_code_mismatch(achiever_codes, expected_codes, achievers)
    return Certificate(
        claim_id=claim_id or f"theorem1-n{n}-m{m}",
        params={"n": n, "m": m},
        expected_bound=bound,
        observed_max=best,
        status=status,
        graphs_examined=len(members),
        orientations_examined=examined,
        achiever_codes=achiever_codes,
        expected_codes=expected_codes,
        counterexample=counterexample,
    )


def verify_theorem2(m: int, *, threads: int = 1, backend: str | None = None) -> Certificate:
    """The perfect-matching case n = 2m, against its specialized closed form."""
    bound = bound_unicyclic_perfect(m)
    if bound != bound_unicyclic(2 * m, m):
        raise FormulaMismatchError("perfect-matching bound disagrees with general bound")
    return verify_theorem1(
        2 * m,
        m,
        threads=threads,
        backend=backend,
        claim_id=f"theorem2-m{m}",
        expected_bound=bound,
    )


def _describe_code_mismatch(observed, expected, achievers) -> str:
    missing = sorted(set(expected) - set(observed))
    extra = sorted(set(observed) - set(expected))
    lines = []
    if missing:
        lines.append(f"expected achiever classes not attained: {', '.join(missing)}")
    if extra:
        lines.append(f"unexpected achiever classes: {', '.join(extra)}")
        extra_set = set(extra)
        for d in achievers:
            if canonical_code_digraph(d).hex() in extra_set:
                lines.append("one unexpected achiever:")
                lines.append(format_digraph(d))
                break
    if not lines:
        lines.append("observed maximum differs from the expected bound")
    return "\n".join(lines)


def verify_u42(*, threads: int = 1, backend: str | None = None) -> Certificate:
    """Check the published 16-orientation value table of the hub graph on 4
    vertices: histogram {5:4, 6:4, 7:4, 8:4}, maximum 8, exactly the four
    distinguished orientations attaining it."""
    g = u_nm(4, 2)
    expected_hist = {5: 4, 6: 4, 7: 4, 8: 4}
    hist = distribution(g, threads=threads, backend=backend)
    best, achievers = max_over_orientations(g, threads=threads, backend=backend)
    achiever_codes = _code_set(achievers)
    expected_codes = _code_set(u_extremal_orientations(4, 2))
    expected_labeled = {d.arcs for d in u_extremal_orientations(4, 2)}
    observed_labeled = {d.arcs for d in achievers}
    ok = (
        hist == expected_hist
        and best == 8
        and observed_labeled == expected_labeled
        and achiever_codes == expected_codes
    )
    counterexample = None
    if not ok:
        counterexample = f"observed histogram {hist}, expected {expected_hist}"
    return Certificate(
        claim_id="u42-table",
        params={"n": 4, "m": 2},
        expected_bound=8,
        observed_max=best,
        status=PASS if ok else FAIL,
        graphs_examined=1,
        orientations_examined=orientation_count(g),
        achiever_codes=achiever_codes,
        expected_codes=expected_codes,
        counterexample=counterexample,
    )


def _g1_extremal_orientations() -> tuple[Digraph, ...]:
    """The twelve maximum orientations of the triangle-with-pendants graph.

    Structure proved by the case analysis: one triangle vertex keeps mixed
    degrees, one is a full source, one is a full sink; the mixed vertex's
    pendant edge is free.
    """
    out = []
    for mixed in range(3):
        others = [v for v in range(3) if v != mixed]
        for source, sink in (others, others[::-1]):
            base = [
                (source, mixed),
                (source, sink),
                (mixed, sink),
                (source, 3 + source),
                (3 + sink, sink),
            ]
            for pendant_arc in ((mixed, 3 + mixed), (3 + mixed, mixed)):
                out.append(Digraph.from_arcs(6, base + [pendant_arc]))
    return tuple(out)


def verify_g1(*, threads: int = 1, backend: str | None = None) -> Certificate:
    """Check the published 64-orientation analysis of the triangle with a
    pendant on each vertex: histogram {9:28, 11:24, 13:12}, maximum 13,
    attained by exactly the twelve source/sink/mixed orientations."""
    g = make_g1()
    expected_hist = {9: 28, 11: 24, 13: 12}
    hist = distribution(g, threads=threads, backend=backend)
    best, achievers = max_over_orientations(g, threads=threads, backend=backend)
    expected = _g1_extremal_orientations()
    achiever_codes = _code_set(achievers)
    expected_codes = _code_set(expected)
    ok = (
        hist == expected_hist
        and best == 13
        and {d.arcs for d in achievers} == {d.arcs for d in expected}
        and len(achievers) == 12
    )
    counterexample = None
    if not ok:
        counterexample = f"observed histogram {hist}, expected {expected_hist}"
    return Certificate(
        claim_id="g1-table",
        params={"n": 6},
        expected_bound=13,
        observed_max=best,
        status=PASS if ok else FAIL,
        graphs_examined=1,
        orientations_examined=orientation_count(g),
        achiever_codes=achiever_codes,
        expected_codes=expected_codes,
        counterexample=counterexample,
    )


def verify_tree_lemmas(m: int, *, threads: int = 1, backend: str | None = None) -> Certificate:
    """Exhaustively check both tree results for perfect matchings of size m:
    the undirected maximum with its unique extremal tree, and the oriented
    maximum with its two sink-source achievers."""
    n = 2 * m
    members = graphs_in_class(GraphClassSpec("tree", n, m))
    target = t_nm(n, m)
    target_code = canonical_code(target).hex()

    und_bound = bound_tree(m)
    und_best = -1
    und_achievers: list[Graph] = []
    for g in members:
        value = m1_undirected(g)
        if value > und_best:
            und_best = value
            und_achievers = [g]
        elif value == und_best:
            und_achievers.append(g)
    und_codes = tuple(sorted({canonical_code(g).hex() for g in und_achievers}))
    undirected_ok = und_best == und_bound and und_codes == (target_code,)

    ori_bound = bound_tree_oriented(m)
    best, achievers, examined = _class_maximum(members, threads=threads, backend=backend)
    achiever_codes = _code_set(achievers)
    expected_codes = _code_set(sink_source_orientations(target))
    oriented_ok = best == ori_bound and achiever_codes == expected_codes

    status = PASS if (undirected_ok and oriented_ok) else FAIL
    counterexample = None
    if not undirected_ok:
        counterexample = (
            f"undirected maximum {und_best} (expected {und_bound}) attained by "
            f"{len(und_codes)} classes:\n"
            + "".join(format_graph(g) for g in und_achievers[:2])
        )
    elif not oriented_ok:
        counterexample = _describe_code_mismatch(achiever_codes, expected_codes, achievers)
    return Certificate(
        claim_id=f"trees-m{m}",
        params={"m": m},
        expected_bound=ori_bound,
        observed_max=best,
        status=status,
        graphs_examined=len(members),
        orientations_examined=examined,
        achiever_codes=achiever_codes,
        expected_codes=expected_codes,
        counterexample=counterexample,
    )


# ---------------------------------------------------------------------------
# Property suites
# ---------------------------------------------------------------------------


def verify_half_bound(n_max: int, *, threads: int = 1, backend: str | None = None) -> Certificate:
    """Half-bound with its equality characterization, exhaustively.

    Over every orientation of every connected graph with 2 <= n <=
    min(n_max, 7): the oriented index never exceeds half the undirected one,
    with equality exactly at sink-source orientations.  Single-vertex graphs
    are excluded by the no-isolated-vertices convention.
    """
    top = min(n_max, HALF_BOUND_MAX_N)
    graphs_examined = 0
    orientations_examined = 0
    violations = 0
    counterexample = None
    for n in range(2, top + 1):
        for g in all_connected(n):
            m1g = m1_undirected(g)
            graphs_examined += 1
            orientations_examined += orientation_count(g)
            for lo, _, values, flags in _scan_chunks(
                g, with_ss=True, threads=threads, backend=backend
            ):
                over = 2 * values > m1g
                equal = 2 * values == m1g
                mismatch = over | (equal != (flags == 1))
                if mismatch.any():
                    violations += int(mismatch.sum())
                    if counterexample is None:
                        mask = int(np.nonzero(mismatch)[0][0]) + lo
                        counterexample = (
                            "half-bound violation:\n"
                            + format_digraph(orientation_at(g, mask))
                        )
    return Certificate(
        claim_id="half-bound",
        params={"n_max": top},
        expected_bound=None,
        observed_max=None,
        status=PASS if violations == 0 else FAIL,
        graphs_examined=graphs_examined,
        orientations_examined=orientations_examined,
        counterexample=counterexample,
    )


def verify_sink_source_count(
    n_max: int, *, threads: int = 1, backend: str | None = None
) -> Certificate:
    """Connected graphs have exactly two sink-source orientations when
    bipartite and none otherwise, exhaustively for 2 <= n <= min(n_max, 7)."""
    top = min(n_max, HALF_BOUND_MAX_N)
    graphs_examined = 0
    orientations_examined = 0
    violations = 0
    counterexample = None
    for n in range(2, top + 1):
        for g in all_connected(n):
            graphs_examined += 1
            orientations_examined += orientation_count(g)
            count = 0
            for _, _, _, flags in _scan_chunks(
                g, with_ss=True, threads=threads, backend=backend
            ):
                count += int(flags.sum())
            expected = 2 if is_bipartite(g) else 0
            if count != expected:
                violations += 1
                if counterexample is None:
                    counterexample = (
                        f"graph with {count} sink-source orientations, expected {expected}:\n"
                        + format_graph(g)
                    )
    return Certificate(
        claim_id="sink-source-count",
        params={"n_max": top},
        expected_bound=None,
        observed_max=None,
        status=PASS if violations == 0 else FAIL,
        graphs_examined=graphs_examined,
        orientations_examined=orientations_examined,
        counterexample=counterexample,
    )


def verify_pendent_unsaturated(n_max: int) -> Certificate:
    """Every non-cycle unicyclic graph with n > 2m has a maximum matching
    leaving some pendant vertex unsaturated; all maximum matchings are
    enumerated before any FAIL."""
    graphs_examined = 0
    violations = 0
    counterexample = None
    for n in range(4, n_max + 1):
        for g in all_unicyclic(n):
            m = matching_number(g)
            if n <= 2 * m:
                continue
            degrees = g.degrees()
            pendants = [v for v in range(n) if degrees[v] == 1]
            if not pendants:
                continue  # the cycle itself
            graphs_examined += 1
            witness = False
            for matching in all_maximum_matchings(g):
                saturated = matching.saturated()
                if any(p not in saturated for p in pendants):
                    witness = True
                    break
            if not witness:
                violations += 1
                if counterexample is None:
                    counterexample = (
                        "every maximum matching saturates every pendant:\n"
                        + format_graph(g)
                    )
    return Certificate(
        claim_id="pendent-unsaturated",
        params={"n_max": n_max},
        expected_bound=None,
        observed_max=None,
        status=PASS if violations == 0 else FAIL,
        graphs_examined=graphs_examined,
        orientations_examined=0,
        counterexample=counterexample,
    )


def verify_bound_gap(n_max: int = 200) -> Certificate:
    """The unicyclic orientation bound strictly exceeds 2n whenever n > 2m."""
    pairs = 0
    violations = 0
    counterexample = None
    for n in range(5, n_max + 1):
        for m in range(2, n // 2 + 1):
            if n <= 2 * m:
                continue
            pairs += 1
            if bound_unicyclic(n, m) <= 2 * n:
                violations += 1
                if counterexample is None:
                    counterexample = f"bound({n},{m}) = {bound_unicyclic(n, m)} <= {2 * n}"
    return Certificate(
        claim_id="bound-gap",
        params={"n_max": n_max},
        expected_bound=None,
        observed_max=None,
        status=PASS if violations == 0 else FAIL,
        graphs_examined=pairs,
        orientations_examined=0,
        counterexample=counterexample,
    )


def verify_diametrical(n_max: int = DIAMETRICAL_MAX_N) -> Certificate:
    """On every tree with a perfect matching and at least four vertices, the
    unique neighbor of every diametrical-path endpoint has degree two.

    Checks every endpoint of every longest path (all vertices of maximum
    eccentricity), not just the one path the double sweep returns.
    """
    top = min(n_max, max_vertices())
    graphs_examined = 0
    violations = 0
    counterexample = None
    for n in range(4, top + 1, 2):
        for g in all_trees(n):
            if not has_perfect_matching(g):
                continue
            graphs_examined += 1
            adj = g.adjacency_lists()
            degrees = g.degrees()
            ecc = []
            for start in range(n):
                dist = _bfs_distances(adj, start, n)
                ecc.append(max(dist))
            diameter = max(ecc)
            returned = diametrical_path(g)
            ok = len(returned) - 1 == diameter
            for v in range(n):
                if ecc[v] != diameter:
                    continue
                if degrees[v] != 1 or degrees[adj[v][0]] != 2:
                    ok = False
            if not ok:
                violations += 1
                if counterexample is None:
                    counterexample = "diametrical endpoint neighbor not of degree two:\n" + format_graph(g)
    return Certificate(
        claim_id="diametrical-degree-two",
        params={"n_min": 4, "n_max": top},
        expected_bound=None,
        observed_max=None,
        status=PASS if violations == 0 else FAIL,
        graphs_examined=graphs_examined,
        orientations_examined=0,
        counterexample=counterexample,
    )


def _bfs_distances(adj, start: int, n: int) -> list[int]:
    dist = [-1] * n
    dist[start] = 0
    queue = [start]
    for v in queue:
        for w in adj[v]:
            if dist[w] == -1:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def property_suite(
    n_max: int, *, threads: int = 1, backend: str | None = None
) -> tuple[Certificate, ...]:
    """All structural property certificates, in fixed order."""
    return (
        verify_half_bound(n_max, threads=threads, backend=backend),
        verify_sink_source_count(n_max, threads=threads, backend=backend),
        verify_pendent_unsaturated(n_max),
        verify_bound_gap(),
        verify_diametrical(),
    )


# ---------------------------------------------------------------------------
# Umbrella
# ---------------------------------------------------------------------------


def verify_all(
    n_max: int, *, threads: int = 1, backend: str | None = None
) -> tuple[Certificate, ...]:
    """Run every claim up to n_max and append one aggregate certificate."""
    if n_max > max_vertices():
        raise SizeLimitError(f"n_max {n_max} exceeds the vertex cap {max_vertices()}")
    certificates: list[Certificate] = []
    for n in range(4, n_max + 1):
        for m in range(2, n // 2 + 1):
            certificates.append(
                verify_theorem1(n, m, threads=threads, backend=backend)
            )
    for m in range(2, n_max // 2 + 1):
        certificates.append(verify_theorem2(m, threads=threads, backend=backend))
    for m in range(1, min(6, n_max // 2) + 1):
        certificates.append(verify_tree_lemmas(m, threads=threads, backend=backend))
    certificates.append(verify_u42(threads=threads, backend=backend))
    certificates.append(verify_g1(threads=threads, backend=backend))
    certificates.extend(property_suite(n_max, threads=threads, backend=backend))
    summary = Certificate(
        claim_id="all",
        params={"n_max": n_max},
        expected_bound=None,
        observed_max=None,
        status=PASS if all(c.passed for c in certificates) else FAIL,
        graphs_examined=sum(c.graphs_examined for c in certificates),
        orientations_examined=sum(c.orientations_examined for c in certificates),
    )
    return tuple(certificates) + (summary,)
