"""
Immutable simple graphs with exact structural metrics.

Vertices and edges are identified by dense integer indices. Edge ``i`` is
``graph.edges[i]`` and is always stored as ``(u, v)`` with ``u < v``; the
order of the edge sequence is whatever the constructor received, so a
deterministic builder gives deterministic edge indices.
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass, field
from enum import StrEnum
from functools import cached_property
from typing import Iterable, Sequence

from rainbow.errors import GraphError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``."""

    n: int
    edges: tuple[tuple[int, int], ...]
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise GraphError(f"Vertex count must be non-negative, got {self.n}")

        normalised = []
        seen = set()
        for index, (u, v) in enumerate(self.edges):
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(
                    f"Edge {index} ({u}, {v}) references a vertex outside 0..{self.n - 1}"
                )
            if u == v:
                raise GraphError(f"Edge {index} is a loop at vertex {u}")
            pair = (u, v) if u < v else (v, u)
            if pair in seen:
                raise GraphError(f"Edge {index} {pair} duplicates an earlier edge")
            seen.add(pair)
            normalised.append(pair)
        object.__setattr__(self, "edges", tuple(normalised))

        if self.labels is not None and len(self.labels) != self.n:
            raise GraphError(
                f"Label table has {len(self.labels)} entries for {self.n} vertices"
            )

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[Sequence[int]],
        labels: Sequence[str] | None = None,
    ) -> Graph:
        return cls(
            n=n,
            edges=tuple((int(u), int(v)) for u, v in edges),
            labels=tuple(labels) if labels is not None else None,
        )

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Per vertex, the sorted ``(neighbor, edge index)`` pairs."""
        table: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
        for index, (u, v) in enumerate(self.edges):
            table[u].append((v, index))
            table[v].append((u, index))
        return tuple(tuple(sorted(row)) for row in table)

    @cached_property
    def neighbors(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(w for w, _ in row) for row in self.adjacency)

    @cached_property
    def neighbor_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(row) for row in self.neighbors)

    @cached_property
    def edge_ids(self) -> dict[tuple[int, int], int]:
        return {pair: index for index, pair in enumerate(self.edges)}

    def edge_id(self, u: int, v: int) -> int:
        key = (u, v) if u < v else (v, u)
        try:
            return self.edge_ids[key]
        except KeyError:
            raise GraphError(f"No edge between {u} and {v}") from None

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.neighbor_sets[u]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(row) for row in self.adjacency)

    @property
    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    @property
    def min_degree(self) -> int:
        return min(self.degrees, default=0)

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)


def bfs_distances(
    g: Graph, root: int, allowed: frozenset[int] | set[int] | None = None
) -> list[int]:
    """Distances from ``root``; -1 marks unreachable (or disallowed) vertices."""
    dist = [-1] * g.n
    dist[root] = 0
    queue = deque([root])
    neighbors = g.neighbors
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in neighbors[u]:
            if dist[w] < 0 and (allowed is None or w in allowed):
                dist[w] = du
                queue.append(w)
    return dist


def bfs_levels(
    g: Graph, root: int, allowed: frozenset[int] | set[int] | None = None
) -> list[list[int]]:
    """Breadth-first levels L0, L1, ... from ``root`` inside ``allowed``."""
    levels: list[list[int]] = []
    for v, d in enumerate(bfs_distances(g, root, allowed)):
        if d < 0:
            continue
        while len(levels) <= d:
            levels.append([])
        levels[d].append(v)
    return levels


def components(g: Graph) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by smallest vertex."""
    seen = [False] * g.n
    result = []
    for start in range(g.n):
        if seen[start]:
            continue
        dist = bfs_distances(g, start)
        members = [v for v, d in enumerate(dist) if d >= 0]
        for v in members:
            seen[v] = True
        result.append(members)
    return result


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(components(g)) == 1


def girth(g: Graph) -> int | None:
    """
    Exact girth by a truncated breadth-first search from every vertex.

    Returns None for forests.
    """
    best: int | None = None
    neighbors = g.neighbors
    for root in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            du = dist[u]
            # Any cycle closed from here on has length >= 2 * du.
            if best is not None and 2 * du >= best:
                break
            for w in neighbors[u]:
                if dist[w] < 0:
                    dist[w] = du + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u]:
                    length = du + dist[w] + 1
                    if best is None or length < best:
                        best = length
        if best == 3:
            break
    return best


def eccentricity(g: Graph, v: int) -> int | None:
    dist = bfs_distances(g, v)
    if min(dist, default=0) < 0:
        return None
    return max(dist, default=0)


def diameter(g: Graph) -> int | None:
    """Maximum eccentricity over all sources; None when the graph is disconnected."""
    best = 0
    for v in range(g.n):
        ecc = eccentricity(g, v)
        if ecc is None:
            return None
        best = max(best, ecc)
    return best


def bipartition(g: Graph) -> tuple[frozenset[int], frozenset[int]] | None:
    """Two-coloring of the vertices (smallest vertex of each component in A), or None."""
    side = [-1] * g.n
    for start in range(g.n):
        if side[start] >= 0:
            continue
        side[start] = 0
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in g.neighbors[u]:
                if side[w] < 0:
                    side[w] = 1 - side[u]
                    queue.append(w)
                elif side[w] == side[u]:
                    return None
    part_a = frozenset(v for v in range(g.n) if side[v] == 0)
    part_b = frozenset(v for v in range(g.n) if side[v] == 1)
    return part_a, part_b


def relabel(g: Graph, permutation: Sequence[int]) -> Graph:
    """Apply ``v -> permutation[v]``; edge order is preserved."""
    if sorted(permutation) != list(range(g.n)):
        raise GraphError("Relabeling must be a permutation of the vertex indices")
    labels = None
    if g.labels is not None:
        inverse = [0] * g.n
        for v, image in enumerate(permutation):
            inverse[image] = v
        labels = tuple(g.labels[inverse[v]] for v in range(g.n))
    return Graph(
        n=g.n,
        edges=tuple((permutation[u], permutation[v]) for u, v in g.edges),
        labels=labels,
    )


def induced_subgraph(
    g: Graph, vertices: Iterable[int]
) -> tuple[Graph, list[int], list[int]]:
    """
    Subgraph induced on ``vertices``, renumbered densely in increasing order.

    Returns ``(subgraph, vertex_origin, edge_origin)`` mapping new indices back
    to the indices of ``g``.
    """
    keep = sorted(set(vertices))
    position = {v: i for i, v in enumerate(keep)}
    sub_edges = []
    edge_origin = []
    for index, (u, v) in enumerate(g.edges):
        if u in position and v in position:
            sub_edges.append((position[u], position[v]))
            edge_origin.append(index)
    labels = tuple(g.labels[v] for v in keep) if g.labels is not None else None
    return Graph(n=len(keep), edges=tuple(sub_edges), labels=labels), keep, edge_origin


class StructureKind(StrEnum):
    MOORE = "moore"
    GENERALIZED_POLYGON = "generalized-polygon"
    NEITHER = "neither"


@dataclass(frozen=True)
class StructureClass:
    kind: StructureKind
    diameter: int
    girth: int | None
    degree_set: frozenset[int]
    thick: bool
    bipartition: tuple[frozenset[int], frozenset[int]] | None

    @property
    def regular_degree(self) -> int | None:
        if len(self.degree_set) == 1:
            return next(iter(self.degree_set))
        return None

    @property
    def is_bipartite(self) -> bool:
        return self.bipartition is not None

    def describe(self) -> str:
        if self.kind is StructureKind.MOORE:
            return f"Moore(d={self.diameter}, r={self.regular_degree})"
        if self.kind is StructureKind.GENERALIZED_POLYGON:
            degrees = ",".join(str(d) for d in sorted(self.degree_set))
            return f"GeneralizedPolygon(d={self.diameter}, {{{degrees}}})"
        return "Neither"


def classify(g: Graph) -> StructureClass:
    """
    Classify a connected graph as a Moore graph (girth 2d+1, regular), a
    generalized polygon (girth 2d) or neither.
    """
    if g.n < 3:
        raise GraphError(f"classify needs at least 3 vertices, got {g.n}")
    d = diameter(g)
    if d is None:
        raise GraphError("classify requires a connected graph")

    g_len = girth(g)
    degree_set = frozenset(g.degrees)
    parts = bipartition(g)
    thick = g.min_degree >= 3

    kind = StructureKind.NEITHER
    if g_len is not None:
        if g_len == 2 * d + 1 and len(degree_set) == 1:
            kind = StructureKind.MOORE
        elif g_len == 2 * d:
            kind = StructureKind.GENERALIZED_POLYGON

    result = StructureClass(
        kind=kind,
        diameter=d,
        girth=g_len,
        degree_set=degree_set,
        thick=thick,
        bipartition=parts,
    )
    logger.debug("classify: n=%d m=%d -> %s thick=%s", g.n, g.m, result.describe(), thick)
    return result
