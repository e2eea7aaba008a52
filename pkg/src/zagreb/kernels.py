"""Orientation-scan kernels: the hot inner loops of the exhaustive searches.

An orientation of a graph with E stored edges is a mask in [0, 2^E); bit e
set means stored edge (u, v) is directed v -> u, clear means u -> v.  Each
kernel sweeps a contiguous mask range and returns one value per mask:

* doubled index by the vertex route, sum_v (outdeg^2 + indeg^2)
* doubled index by the arc route, sum_arcs (outdeg[tail] + indeg[head])
* a sink-source flag (every vertex a sink or a source)

Two interchangeable backends exist.  The default is numba @njit machine code;
a pure-numpy vectorized path is selected with ZAGREB_BACKEND=numpy (or used
automatically when numba is absent).  Both produce identical arrays;
bench/bench_kernels.py compares their throughput.
"""

from __future__ import annotations

import os

import numpy as np

from .errors import ParameterError

try:
    from numba import njit

    NUMBA_AVAILABLE = True
except ImportError:  # pragma: no cover - exercised only without numba
    NUMBA_AVAILABLE = False

BACKEND_ENV = "ZAGREB_BACKEND"


def active_backend() -> str:
    """Backend selected by ZAGREB_BACKEND, defaulting to numba when present."""
    choice = os.environ.get(BACKEND_ENV, "").strip().lower()
    if not choice:
        return "numba" if NUMBA_AVAILABLE else "numpy"
    if choice not in ("numba", "numpy"):
        raise ParameterError(f"{BACKEND_ENV} must be 'numba' or 'numpy', got {choice!r}")
    if choice == "numba" and not NUMBA_AVAILABLE:
        raise ParameterError("ZAGREB_BACKEND=numba but numba is not importable")
    return choice


def edge_arrays(edges) -> tuple[np.ndarray, np.ndarray]:
    """Split a sorted edge tuple into contiguous endpoint arrays."""
    eu = np.array([e[0] for e in edges], dtype=np.int64)
    ev = np.array([e[1] for e in edges], dtype=np.int64)
    return eu, ev


# ---------------------------------------------------------------------------
# numba backend
# ---------------------------------------------------------------------------

if NUMBA_AVAILABLE:

    @njit(cache=True, nogil=True)
    def _vertex_route_numba(n, eu, ev, lo, hi, out):
        E = eu.shape[0]
        outdeg = np.empty(n, np.int64)
        indeg = np.empty(n, np.int64)
        for idx in range(hi - lo):
            mask = lo + idx
            for v in range(n):
                outdeg[v] = 0
                indeg[v] = 0
            for e in range(E):
                if (mask >> e) & 1:
                    outdeg[ev[e]] += 1
                    indeg[eu[e]] += 1
                else:
                    outdeg[eu[e]] += 1
                    indeg[ev[e]] += 1
            total = 0
            for v in range(n):
                total += outdeg[v] * outdeg[v] + indeg[v] * indeg[v]
            out[idx] = total

    @njit(cache=True, nogil=True)
    def _arc_route_numba(n, eu, ev, lo, hi, out):
        E = eu.shape[0]
        outdeg = np.empty(n, np.int64)
        indeg = np.empty(n, np.int64)
        for idx in range(hi - lo):
            mask = lo + idx
            for v in range(n):
                outdeg[v] = 0
                indeg[v] = 0
            for e in range(E):
                if (mask >> e) & 1:
                    outdeg[ev[e]] += 1
                    indeg[eu[e]] += 1
                else:
                    outdeg[eu[e]] += 1
                    indeg[ev[e]] += 1
            total = 0
            for e in range(E):
                if (mask >> e) & 1:
                    total += outdeg[ev[e]] + indeg[eu[e]]
                else:
                    total += outdeg[eu[e]] + indeg[ev[e]]
            out[idx] = total

    @njit(cache=True, nogil=True)
    def _sink_source_numba(n, eu, ev, lo, hi, out):
        E = eu.shape[0]
        outdeg = np.empty(n, np.int64)
        indeg = np.empty(n, np.int64)
        for idx in range(hi - lo):
            mask = lo + idx
            for v in range(n):
                outdeg[v] = 0
                indeg[v] = 0
            for e in range(E):
                if (mask >> e) & 1:
                    outdeg[ev[e]] += 1
                    indeg[eu[e]] += 1
                else:
                    outdeg[eu[e]] += 1
                    indeg[ev[e]] += 1
            flag = 1
            for v in range(n):
                if outdeg[v] != 0 and indeg[v] != 0:
                    flag = 0
                    break
            out[idx] = flag


# ---------------------------------------------------------------------------
# numpy backend
# ---------------------------------------------------------------------------


def _degree_tables_numpy(n, eu, ev, lo, hi):
    E = eu.shape[0]
    masks = np.arange(lo, hi, dtype=np.int64)
    bits = ((masks[:, None] >> np.arange(E, dtype=np.int64)[None, :]) & 1).astype(
        np.int32
    )
    one_hot_u = np.zeros((E, n), dtype=np.int32)
    one_hot_u[np.arange(E), eu] = 1
    one_hot_v = np.zeros((E, n), dtype=np.int32)
    one_hot_v[np.arange(E), ev] = 1
    outdeg = (1 - bits) @ one_hot_u + bits @ one_hot_v
    indeg = (1 - bits) @ one_hot_v + bits @ one_hot_u
    return bits, outdeg, indeg


def _vertex_route_numpy(n, eu, ev, lo, hi):
    _, outdeg, indeg = _degree_tables_numpy(n, eu, ev, lo, hi)
    outdeg = outdeg.astype(np.int64)
    indeg = indeg.astype(np.int64)
    return (outdeg * outdeg + indeg * indeg).sum(axis=1)


def _arc_route_numpy(n, eu, ev, lo, hi):
    bits, outdeg, indeg = _degree_tables_numpy(n, eu, ev, lo, hi)
    tails = np.where(bits == 1, ev[None, :], eu[None, :])
    heads = np.where(bits == 1, eu[None, :], ev[None, :])
    tail_deg = np.take_along_axis(outdeg, tails, axis=1).astype(np.int64)
    head_deg = np.take_along_axis(indeg, heads, axis=1).astype(np.int64)
    return tail_deg.sum(axis=1) + head_deg.sum(axis=1)


def _sink_source_numpy(n, eu, ev, lo, hi):
    _, outdeg, indeg = _degree_tables_numpy(n, eu, ev, lo, hi)
    return ((outdeg == 0) | (indeg == 0)).all(axis=1).astype(np.uint8)


# ---------------------------------------------------------------------------
# dispatch
# ---------------------------------------------------------------------------


def doubled_m1_scan(
    n: int,
    eu: np.ndarray,
    ev: np.ndarray,
    lo: int,
    hi: int,
    backend: str | None = None,
) -> tuple[np.ndarray, np.ndarray]:
    """Doubled index per mask in [lo, hi), by the vertex and the arc routes."""
    backend = backend or active_backend()
    if backend == "numba":
        vert = np.empty(hi - lo, dtype=np.int64)
        arc = np.empty(hi - lo, dtype=np.int64)
        _vertex_route_numba(n, eu, ev, lo, hi, vert)
        _arc_route_numba(n, eu, ev, lo, hi, arc)
        return vert, arc
    return (
        _vertex_route_numpy(n, eu, ev, lo, hi),
        _arc_route_numpy(n, eu, ev, lo, hi),
    )


def sink_source_scan(
    n: int,
    eu: np.ndarray,
    ev: np.ndarray,
    lo: int,
    hi: int,
    backend: str | None = None,
) -> np.ndarray:
    """Sink-source flag (0/1) per mask in [lo, hi)."""
    backend = backend or active_backend()
    if backend == "numba":
        out = np.empty(hi - lo, dtype=np.uint8)
        _sink_source_numba(n, eu, ev, lo, hi, out)
        return out
    return _sink_source_numpy(n, eu, ev, lo, hi)
