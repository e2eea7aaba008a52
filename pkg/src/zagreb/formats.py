"""Text formats for graphs, digraphs, and orientation bit-vectors.

Edge-list format: first line is the vertex count, then one ``u v`` line per
edge, 0-based, whitespace-separated, in any order; loading normalizes the
order.  Digraph format is the same with ``u > v`` arc lines.  Multi-graph
streams separate entries with a line containing exactly ``---``.
"""

from __future__ import annotations

from .digraphs import Digraph
from .errors import EngineError, ParseError
from .graphs import Graph

SEPARATOR = "---"


def format_graph(g: Graph) -> str:
    lines = [str(g.n)]
    lines += [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> Graph:
    header, rows = _split(text)
    pairs = []
    for row in rows:
        parts = row.split()
        if len(parts) != 2:
            raise ParseError(f"expected 'u v' edge line, got {row!r}")
        pairs.append((_vertex(parts[0]), _vertex(parts[1])))
    try:
        return Graph.from_edges(header, pairs)
    except EngineError as exc:
        raise ParseError(str(exc)) from exc


def format_digraph(d: Digraph) -> str:
    lines = [str(d.n)]
    lines += [f"{u} > {v}" for u, v in d.arcs]
    return "\n".join(lines) + "\n"


def parse_digraph(text: str) -> Digraph:
    header, rows = _split(text)
    pairs = []
    for row in rows:
        parts = row.split(">")
        if len(parts) != 2:
            raise ParseError(f"expected 'u > v' arc line, got {row!r}")
        pairs.append((_vertex(parts[0]), _vertex(parts[1])))
    try:
        return Digraph.from_arcs(header, pairs)
    except EngineError as exc:
        raise ParseError(str(exc)) from exc


def format_many(texts) -> str:
    return f"{SEPARATOR}\n".join(texts)


def split_many(text: str) -> list[str]:
    chunks = []
    current: list[str] = []
    for line in text.splitlines():
        if line.strip() == SEPARATOR:
            chunks.append("\n".join(current) + "\n")
            current = []
        else:
            current.append(line)
    if any(line.strip() for line in current):
        chunks.append("\n".join(current) + "\n")
    return chunks


def _split(text: str) -> tuple[int, list[str]]:
    rows = [line.strip() for line in text.splitlines()]
    rows = [line for line in rows if line]
    if not rows:
        raise ParseError("empty graph text")
    try:
        n = int(rows[0])
    except ValueError as exc:
        raise ParseError(f"first line must be the vertex count, got {rows[0]!r}") from exc
    return n, rows[1:]


def _vertex(token: str) -> int:
    try:
        return int(token.strip())
    except ValueError as exc:
        raise ParseError(f"vertex index expected, got {token!r}") from exc
