"""
Text formats: 0-based edge lists, graph6 (via networkx), DOT, and colorings.

Canonical edge-list text is one ``"u v"`` line per edge with ``u < v`` in
edge-index order. A ``# vertices N`` header is written only when trailing
isolated vertices would otherwise be lost, so parse -> emit is byte-identical
for canonical inputs.
"""

from __future__ import annotations

import logging
import re
from typing import Sequence

import networkx as nx

from rainbow.errors import ColoringError, GraphError
from rainbow.graph_core import Graph

logger = logging.getLogger(__name__)

GRAPH6_HEADER = ">>graph6<<"
_VERTICES_HEADER = re.compile(r"^#\s*vertices\s+(\d+)\s*$")


def parse_edge_list(text: str) -> Graph:
    n_declared: int | None = None
    edges: list[tuple[int, int]] = []
    for line_no, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.strip()
        if not line:
            continue
        if line.startswith("#"):
            header = _VERTICES_HEADER.match(line)
            if header:
                n_declared = int(header.group(1))
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphError(f"Line {line_no}: expected 'u v', got {raw_line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise GraphError(f"Line {line_no}: non-integer vertex in {raw_line!r}") from exc
        if u < 0 or v < 0:
            raise GraphError(f"Line {line_no}: vertex indices are 0-based and non-negative")
        edges.append((u, v))

    n = max((max(u, v) + 1 for u, v in edges), default=0)
    if n_declared is not None:
        if n_declared < n:
            raise GraphError(
                f"Header declares {n_declared} vertices but edges reference vertex {n - 1}"
            )
        n = n_declared
    return Graph.from_edges(n, edges)


def emit_edge_list(g: Graph) -> str:
    lines = []
    used = max((v + 1 for _, v in g.edges), default=0)
    if g.n != used:
        lines.append(f"# vertices {g.n}")
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "".join(f"{line}\n" for line in lines)


def to_networkx(g: Graph) -> nx.Graph:
    graph = nx.Graph()
    graph.add_nodes_from(range(g.n))
    graph.add_edges_from(g.edges)
    return graph


def from_networkx(graph: nx.Graph) -> Graph:
    """Convert a networkx graph; nodes are renumbered in sorted order."""
    order = sorted(graph.nodes())
    position = {node: i for i, node in enumerate(order)}
    edges = sorted(
        tuple(sorted((position[u], position[v]))) for u, v in graph.edges()
    )
    return Graph.from_edges(len(order), edges)


def parse_graph6(text: str | bytes) -> Graph:
    data = text.encode("ascii") if isinstance(text, str) else text
    data = data.strip()
    if b"\n" in data:
        raise GraphError("graph6 input must contain a single graph")
    try:
        graph = nx.from_graph6_bytes(data)
    except (ValueError, nx.NetworkXError) as exc:
        raise GraphError(f"Invalid graph6 data: {exc}") from exc
    return from_networkx(graph)


def emit_graph6(g: Graph) -> str:
    return nx.to_graph6_bytes(to_networkx(g), header=False).decode("ascii")


def looks_like_graph6(text: str) -> bool:
    stripped = text.strip()
    if stripped.startswith(GRAPH6_HEADER):
        return True
    if not stripped or any(ch.isspace() for ch in stripped):
        return False
    return all(63 <= ord(ch) <= 126 for ch in stripped)


def parse_graph(text: str) -> Graph:
    """Auto-detect graph6 versus edge-list content."""
    if looks_like_graph6(text):
        logger.debug("parse_graph: detected graph6 input")
        return parse_graph6(text)
    logger.debug("parse_graph: detected edge-list input")
    return parse_edge_list(text)


def emit_dot(
    g: Graph, name: str = "G", colors: Sequence[int] | None = None
) -> str:
    if colors is not None and len(colors) != g.m:
        raise ColoringError(f"Coloring has {len(colors)} entries for {g.m} edges")
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        if g.labels is not None:
            lines.append(f'  {v} [label="{g.labels[v]}"];')
        else:
            lines.append(f"  {v};")
    for index, (u, v) in enumerate(g.edges):
        if colors is None:
            lines.append(f"  {u} -- {v};")
        else:
            lines.append(f'  {u} -- {v} [label="{colors[index]}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def parse_coloring(text: str, edge_count: int | None = None) -> list[int]:
    """Parse ``"edgeIndex color"`` lines into a dense per-edge list."""
    assigned: dict[int, int] = {}
    for line_no, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ColoringError(f"Line {line_no}: expected 'edge color', got {raw_line!r}")
        try:
            edge, color = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise ColoringError(f"Line {line_no}: non-integer field in {raw_line!r}") from exc
        if edge < 0 or color < 0:
            raise ColoringError(f"Line {line_no}: indices must be non-negative")
        if edge in assigned:
            raise ColoringError(f"Line {line_no}: edge {edge} colored twice")
        assigned[edge] = color

    size = edge_count if edge_count is not None else len(assigned)
    missing = [e for e in range(size) if e not in assigned]
    extra = [e for e in assigned if e >= size]
    if missing or extra:
        raise ColoringError(
            f"Coloring must cover edges 0..{size - 1} exactly "
            f"(missing {missing[:5]}, unexpected {extra[:5]})"
        )
    return [assigned[e] for e in range(size)]


def emit_coloring(colors: Sequence[int]) -> str:
    return "".join(f"{edge} {color}\n" for edge, color in enumerate(colors))
