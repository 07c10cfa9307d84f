"""
Deterministic constructors for the graph families under study, plus the
k-fold subdivision operator and its inverse (smoothing).

Every builder fixes its vertex and edge numbering so that two builds of the
same FamilySpec produce identical edge sequences.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from enum import StrEnum
from functools import cached_property

import numpy as np
from sympy import isprime

from rainbow.errors import FamilyError, GraphError
from rainbow.graph_core import Graph, StructureKind, classify, induced_subgraph

logger = logging.getLogger(__name__)

PG_MAX_ORDER = 31


class FamilyKind(StrEnum):
    CYCLE = "cycle"
    PATH = "path"
    COMPLETE = "complete"
    COMPLETE_BIPARTITE = "complete-bipartite"
    PETERSEN = "petersen"
    HOFFMAN_SINGLETON = "hoffman-singleton"
    PG_INCIDENCE = "pg-incidence"
    THETA = "theta"
    SUBDIVISION = "subdivision"


# CLI spellings -> canonical kind
FAMILY_ALIASES = {
    "cycle": FamilyKind.CYCLE,
    "c": FamilyKind.CYCLE,
    "path": FamilyKind.PATH,
    "complete": FamilyKind.COMPLETE,
    "k": FamilyKind.COMPLETE,
    "complete-bipartite": FamilyKind.COMPLETE_BIPARTITE,
    "kmn": FamilyKind.COMPLETE_BIPARTITE,
    "k2n": FamilyKind.COMPLETE_BIPARTITE,
    "petersen": FamilyKind.PETERSEN,
    "hoffman-singleton": FamilyKind.HOFFMAN_SINGLETON,
    "hosi": FamilyKind.HOFFMAN_SINGLETON,
    "pg-incidence": FamilyKind.PG_INCIDENCE,
    "pg": FamilyKind.PG_INCIDENCE,
    "theta": FamilyKind.THETA,
}


@dataclass(frozen=True)
class FamilySpec:
    kind: FamilyKind
    params: tuple[int, ...] = ()
    inner: FamilySpec | None = None

    def validate(self) -> None:
        p = self.params
        kind = self.kind

        def need(count: int) -> None:
            if len(p) != count:
                raise FamilyError(
                    f"{kind.value} takes {count} integer parameter(s), got {len(p)}"
                )

        if kind is FamilyKind.CYCLE:
            need(1)
            if p[0] < 3:
                raise FamilyError(f"cycle requires n >= 3, got n={p[0]}")
        elif kind is FamilyKind.PATH:
            need(1)
            if p[0] < 1:
                raise FamilyError(f"path requires n >= 1 vertices, got n={p[0]}")
        elif kind is FamilyKind.COMPLETE:
            need(1)
            if p[0] < 1:
                raise FamilyError(f"complete requires n >= 1, got n={p[0]}")
        elif kind is FamilyKind.COMPLETE_BIPARTITE:
            need(2)
            if p[0] < 1 or p[1] < 1:
                raise FamilyError(
                    f"complete-bipartite requires m, n >= 1, got m={p[0]}, n={p[1]}"
                )
        elif kind in (FamilyKind.PETERSEN, FamilyKind.HOFFMAN_SINGLETON):
            need(0)
        elif kind is FamilyKind.PG_INCIDENCE:
            need(1)
            q = p[0]
            if not 2 <= q <= PG_MAX_ORDER:
                raise FamilyError(
                    f"pg-incidence requires 2 <= q <= {PG_MAX_ORDER}, got q={q}"
                )
            if not isprime(q):
                raise FamilyError(
                    f"pg-incidence requires q prime (prime-power fields are not "
                    f"supported), got q={q}"
                )
        elif kind is FamilyKind.THETA:
            need(2)
            if p[0] < 2:
                raise FamilyError(f"theta requires n >= 2 paths, got n={p[0]}")
            if p[1] < 1:
                raise FamilyError(f"theta requires k >= 1 subdivision vertices, got k={p[1]}")
        elif kind is FamilyKind.SUBDIVISION:
            need(1)
            if self.inner is None:
                raise FamilyError("subdivision needs an inner family")
            if p[0] < 1:
                raise FamilyError(f"subdivision requires k >= 1, got k={p[0]}")
            self.inner.validate()

    def describe(self) -> str:
        if self.kind is FamilyKind.SUBDIVISION:
            return f"subdivision({self.inner.describe()}, {self.params[0]})"
        if not self.params:
            return self.kind.value
        return f"{self.kind.value}({', '.join(str(x) for x in self.params)})"


@dataclass(frozen=True)
class Subdivision:
    """
    A subdivided graph together with its provenance.

    ``branch[x]`` is the vertex of ``graph`` standing for base vertex ``x``.
    ``edge_paths[e]`` lists the edge indices of ``graph`` replacing base edge
    ``e = (u, v)``, walking from u's side to v's side; ``interior[e]`` lists the
    k interior vertices in the same direction.
    """

    graph: Graph
    base: Graph
    k: int
    branch: tuple[int, ...]
    edge_paths: tuple[tuple[int, ...], ...]
    interior: tuple[tuple[int, ...], ...]

    @cached_property
    def edge_origin(self) -> tuple[tuple[int, int], ...]:
        """For each edge of ``graph``: (base edge, position along its path)."""
        origin: list[tuple[int, int] | None] = [None] * self.graph.m
        for base_edge, path in enumerate(self.edge_paths):
            for position, edge in enumerate(path):
                origin[edge] = (base_edge, position)
        if any(item is None for item in origin):
            raise FamilyError("Subdivision provenance does not cover every edge")
        return tuple(origin)

    def check(self, g: Graph) -> None:
        """Raise FamilyError unless this provenance describes ``g``."""
        if g != self.graph:
            raise FamilyError("Provenance was produced for a different graph")
        if len(self.edge_paths) != self.base.m:
            raise FamilyError("Provenance has one path per base edge")
        if any(len(path) != self.k + 1 for path in self.edge_paths):
            raise FamilyError(f"Every replacement path must have {self.k + 1} edges")
        if self.graph.n != self.base.n + self.k * self.base.m:
            raise FamilyError("Vertex count does not match |V| + k|E|")
        if self.graph.m != (self.k + 1) * self.base.m:
            raise FamilyError("Edge count does not match (k+1)|E|")
        # forces edge_origin and its totality check
        self.edge_origin


def cycle(n: int) -> Graph:
    return build(FamilySpec(FamilyKind.CYCLE, (n,)))


def path(n: int) -> Graph:
    return build(FamilySpec(FamilyKind.PATH, (n,)))


def complete(n: int) -> Graph:
    return build(FamilySpec(FamilyKind.COMPLETE, (n,)))


def complete_bipartite(m: int, n: int) -> Graph:
    return build(FamilySpec(FamilyKind.COMPLETE_BIPARTITE, (m, n)))


def petersen() -> Graph:
    return build(FamilySpec(FamilyKind.PETERSEN))


def hoffman_singleton() -> Graph:
    return build(FamilySpec(FamilyKind.HOFFMAN_SINGLETON))


def pg_incidence(q: int) -> Graph:
    return build(FamilySpec(FamilyKind.PG_INCIDENCE, (q,)))


def theta(n: int, k: int) -> Graph:
    return build(FamilySpec(FamilyKind.THETA, (n, k)))


def _cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def _path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def _complete(n: int) -> Graph:
    return Graph.from_edges(n, itertools.combinations(range(n), 2))


def _complete_bipartite(m: int, n: int) -> Graph:
    return Graph.from_edges(m + n, [(i, m + j) for i in range(m) for j in range(n)])


def _petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def _hoffman_singleton() -> Graph:
    # Pentagon P_h vertex j -> 5h + j; pentagram Q_i vertex j -> 25 + 5i + j.
    def pentagon(h: int, j: int) -> int:
        return 5 * h + j

    def pentagram(i: int, j: int) -> int:
        return 25 + 5 * i + j

    edges = []
    for h in range(5):
        edges.extend((pentagon(h, j), pentagon(h, (j + 1) % 5)) for j in range(5))
    for i in range(5):
        edges.extend((pentagram(i, j), pentagram(i, (j + 2) % 5)) for j in range(5))
    for h in range(5):
        for j in range(5):
            for i in range(5):
                edges.append((pentagon(h, j), pentagram(i, (h * i + j) % 5)))
    labels = [f"P{h}.{j}" for h in range(5) for j in range(5)]
    labels += [f"Q{i}.{j}" for i in range(5) for j in range(5)]
    return Graph.from_edges(50, edges, labels)


def _projective_points(q: int) -> np.ndarray:
    """Normalised representatives (first non-zero coordinate 1) of PG(2, q)."""
    rows = [
        vector
        for vector in itertools.product(range(q), repeat=3)
        if any(vector) and next(c for c in vector if c) == 1
    ]
    return np.array(rows, dtype=np.int64)


def _pg_incidence(q: int) -> Graph:
    points = _projective_points(q)
    # A line is the kernel of a non-zero functional; the same normalised
    # vectors enumerate the functionals up to scalars.
    lines = points
    incidence = (points @ lines.T) % q == 0
    count = len(points)
    edges = [
        (i, count + int(j))
        for i in range(count)
        for j in np.flatnonzero(incidence[i])
    ]
    labels = [f"p{tuple(int(c) for c in row)}" for row in points]
    labels += [f"L{tuple(int(c) for c in row)}" for row in lines]
    return Graph.from_edges(2 * count, edges, labels)


def _theta(n: int, k: int) -> Graph:
    edges = []
    for i in range(n):
        interior = [2 + i * k + t for t in range(k)]
        chain = [0, *interior, 1]
        edges.extend(zip(chain, chain[1:]))
    return Graph.from_edges(2 + n * k, edges)


def build(spec: FamilySpec) -> Graph:
    """Build the graph described by ``spec`` after validating its parameters."""
    spec.validate()
    kind, p = spec.kind, spec.params
    if kind is FamilyKind.CYCLE:
        g = _cycle(p[0])
    elif kind is FamilyKind.PATH:
        g = _path(p[0])
    elif kind is FamilyKind.COMPLETE:
        g = _complete(p[0])
    elif kind is FamilyKind.COMPLETE_BIPARTITE:
        g = _complete_bipartite(p[0], p[1])
    elif kind is FamilyKind.PETERSEN:
        g = _petersen()
    elif kind is FamilyKind.HOFFMAN_SINGLETON:
        g = _hoffman_singleton()
    elif kind is FamilyKind.PG_INCIDENCE:
        g = _pg_incidence(p[0])
    elif kind is FamilyKind.THETA:
        g = _theta(p[0], p[1])
    else:
        g = build_subdivision(spec).graph
    logger.debug("build: %s -> n=%d m=%d", spec.describe(), g.n, g.m)
    return g


def build_subdivision(spec: FamilySpec) -> Subdivision:
    if spec.kind is not FamilyKind.SUBDIVISION:
        raise FamilyError(f"{spec.describe()} is not a subdivision spec")
    spec.validate()
    return subdivide(build(spec.inner), spec.params[0])


def subdivide(g: Graph, k: int) -> Subdivision:
    """
    Replace every edge by a path of length k+1.

    Interior vertices are appended after the original vertices in edge-index
    order: edge e's interior vertices are ``n + e*k .. n + e*k + k - 1``, and its
    path edges get indices ``e*(k+1) .. e*(k+1) + k``.
    """
    if k < 1:
        raise FamilyError(f"subdivide requires k >= 1, got k={k}")
    edges = []
    edge_paths = []
    interior = []
    for index, (u, v) in enumerate(g.edges):
        inner = tuple(g.n + index * k + t for t in range(k))
        chain = [u, *inner, v]
        first = len(edges)
        edges.extend(zip(chain, chain[1:]))
        edge_paths.append(tuple(range(first, len(edges))))
        interior.append(inner)
    labels = None
    if g.labels is not None:
        labels = list(g.labels)
        labels += [f"z{index}.{t}" for index in range(g.m) for t in range(k)]
    graph = Graph.from_edges(g.n + k * g.m, edges, labels)
    return Subdivision(
        graph=graph,
        base=g,
        k=k,
        branch=tuple(range(g.n)),
        edge_paths=tuple(edge_paths),
        interior=tuple(interior),
    )


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """Vertices of ``h`` are shifted by ``g.n``; edges of ``g`` come first."""
    shifted = [(u + g.n, v + g.n) for u, v in h.edges]
    labels = None
    if g.labels is not None or h.labels is not None:
        labels = [g.label(v) for v in range(g.n)] + [h.label(v) for v in range(h.n)]
    return Graph.from_edges(g.n + h.n, list(g.edges) + shifted, labels)


def delete_vertex(g: Graph, v: int) -> Graph:
    if not 0 <= v < g.n:
        raise GraphError(f"Vertex {v} is not in 0..{g.n - 1}")
    sub, _, _ = induced_subgraph(g, (w for w in range(g.n) if w != v))
    return sub


@dataclass(frozen=True)
class _Chain:
    start: int
    end: int
    interior: tuple[int, ...]
    edges: tuple[int, ...]


def _chains(g: Graph) -> tuple[list[int], list[_Chain]]:
    """Maximal paths through degree-2 vertices between branch vertices."""
    branch = [v for v in range(g.n) if g.degree(v) != 2]
    if not branch:
        raise FamilyError("Graph has no branch vertices (every vertex has degree 2)")
    used_edges: set[int] = set()
    chains = []
    for start in branch:
        for first_neighbor, first_edge in g.adjacency[start]:
            if first_edge in used_edges:
                continue
            interior = []
            edge_ids = [first_edge]
            current = first_neighbor
            while g.degree(current) == 2:
                interior.append(current)
                (a, ea), (b, eb) = g.adjacency[current]
                current, edge = (b, eb) if ea == edge_ids[-1] else (a, ea)
                edge_ids.append(edge)
            used_edges.update(edge_ids)
            chains.append(_Chain(start, current, tuple(interior), tuple(edge_ids)))
    if len(used_edges) != g.m:
        raise FamilyError("Graph has a cycle component made only of degree-2 vertices")
    return branch, chains


def smooth(g: Graph) -> Subdivision:
    """
    Recover ``(base, k)`` such that ``g`` is the k-fold subdivision of ``base``.

    Raises FamilyError when the degree-2 chains are not all of one length k >= 1
    or when contracting them would create loops or parallel edges.
    """
    branch, chains = _chains(g)
    lengths = {len(chain.interior) for chain in chains}
    if len(lengths) != 1:
        raise FamilyError(
            f"Degree-2 chains have unequal lengths {sorted(lengths)}; not a uniform subdivision"
        )
    k = lengths.pop()
    if k < 1:
        raise FamilyError("Graph has no degree-2 chains; it is not a subdivision")

    position = {v: i for i, v in enumerate(branch)}
    base_edges = []
    seen = set()
    edge_paths = []
    interior = []
    for chain in chains:
        if chain.start == chain.end:
            raise FamilyError(
                f"Contracting the chain at vertex {chain.start} would create a loop"
            )
        u, v = position[chain.start], position[chain.end]
        pair = (min(u, v), max(u, v))
        if pair in seen:
            raise FamilyError(
                f"Vertices {chain.start} and {chain.end} are joined by parallel "
                "chains; contraction gives a multiple edge"
            )
        seen.add(pair)
        base_edges.append(pair)
        # Orient paths from the smaller base endpoint.
        if u < v:
            edge_paths.append(chain.edges)
            interior.append(chain.interior)
        else:
            edge_paths.append(tuple(reversed(chain.edges)))
            interior.append(tuple(reversed(chain.interior)))

    base = Graph.from_edges(len(branch), base_edges)
    result = Subdivision(
        graph=g,
        base=base,
        k=k,
        branch=tuple(branch),
        edge_paths=tuple(edge_paths),
        interior=tuple(interior),
    )
    result.check(g)
    return result


class NonThickKind(StrEnum):
    EVEN_CYCLE = "even-cycle"
    SUBDIVIDED_MULTIPLE_EDGE = "subdivided-multiple-edge"
    SUBDIVIDED_THICK_POLYGON = "subdivided-thick-polygon"


@dataclass(frozen=True)
class NonThickForm:
    kind: NonThickKind
    k: int = 0
    multiplicity: int = 0
    subdivision: Subdivision | None = None
    paths: tuple[tuple[int, ...], ...] = ()

    def describe(self) -> str:
        if self.kind is NonThickKind.EVEN_CYCLE:
            return "even cycle"
        if self.kind is NonThickKind.SUBDIVIDED_MULTIPLE_EDGE:
            return f"{self.k}-fold subdivision of a {self.multiplicity}-fold multiple edge"
        return f"{self.k}-fold subdivision of a thick generalized polygon"


def non_thick_form(g: Graph) -> NonThickForm:
    """Place a non-thick generalized polygon in one of its three structural forms."""
    structure = classify(g)
    if structure.kind is not StructureKind.GENERALIZED_POLYGON:
        raise FamilyError(f"Not a generalized polygon ({structure.describe()})")
    if structure.thick:
        raise FamilyError("Generalized polygon is thick")

    if structure.degree_set == frozenset({2}):
        return NonThickForm(NonThickKind.EVEN_CYCLE)

    branch, chains = _chains(g)
    lengths = {len(chain.interior) for chain in chains}
    if len(branch) == 2 and len(lengths) == 1:
        return NonThickForm(
            NonThickKind.SUBDIVIDED_MULTIPLE_EDGE,
            k=lengths.pop(),
            multiplicity=len(chains),
            paths=tuple(chain.edges for chain in chains),
        )

    sub = smooth(g)
    base_structure = classify(sub.base)
    if (
        base_structure.kind is not StructureKind.GENERALIZED_POLYGON
        or not base_structure.thick
    ):
        raise FamilyError(
            f"Smoothed graph is {base_structure.describe()}, not a thick generalized polygon"
        )
    return NonThickForm(NonThickKind.SUBDIVIDED_THICK_POLYGON, k=sub.k, subdivision=sub)


def parse_family(
    name: str,
    *,
    n: int | None = None,
    m: int | None = None,
    k: int | None = None,
    q: int | None = None,
    subdivide_k: int | None = None,
) -> FamilySpec:
    """Turn CLI flags into a FamilySpec (``k2n`` fixes m=2)."""
    key = name.strip().lower()
    try:
        kind = FAMILY_ALIASES[key]
    except KeyError:
        known = ", ".join(sorted(FAMILY_ALIASES))
        raise FamilyError(f"Unknown family {name!r}; expected one of: {known}") from None

    def required(value: int | None, flag: str) -> int:
        if value is None:
            raise FamilyError(f"Family {key!r} requires --{flag}")
        return value

    if kind in (FamilyKind.CYCLE, FamilyKind.PATH, FamilyKind.COMPLETE):
        params: tuple[int, ...] = (required(n, "n"),)
    elif kind is FamilyKind.COMPLETE_BIPARTITE:
        left = 2 if key == "k2n" else required(m, "m")
        params = (left, required(n, "n"))
    elif kind is FamilyKind.PG_INCIDENCE:
        params = (required(q, "q"),)
    elif kind is FamilyKind.THETA:
        params = (required(n, "n"), required(k, "k"))
    else:
        params = ()

    spec = FamilySpec(kind, params)
    if subdivide_k is not None:
        spec = FamilySpec(FamilyKind.SUBDIVISION, (subdivide_k,), inner=spec)
    spec.validate()
    return spec
