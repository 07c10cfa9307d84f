"""
Edge colorings: properness and rainbow-cycle checks, the exhaustive PRCF
decision procedure, Vizing colorings and the constructive colorers for
subdivisions.

A coloring is PRCF when it is proper and no cycle has pairwise distinct
colors. Every colorer here re-verifies its output before returning it.
"""

from __future__ import annotations

import logging
import multiprocessing
import sys
from collections import deque
from dataclasses import dataclass, field
from enum import StrEnum
from typing import Any, Iterator, Sequence

from rainbow.budget import Budget, Meter, partition, run_chunks
from rainbow.errors import BudgetExceeded, ColoringError, FamilyError, GraphError
from rainbow.families import NonThickKind, Subdivision, non_thick_form, smooth
from rainbow.graph_core import (
    Graph,
    StructureKind,
    bfs_distances,
    classify,
    components,
    girth,
    induced_subgraph,
)

logger = logging.getLogger(__name__)

if sys.getrecursionlimit() < 10_000:
    sys.setrecursionlimit(10_000)

RED = 0


@dataclass(frozen=True)
class EdgeColoring:
    """Color index per edge index; the used colors are exactly 0..count-1."""

    colors: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "colors", tuple(int(c) for c in self.colors))
        if any(c < 0 for c in self.colors):
            raise ColoringError("Color indices must be non-negative")
        if set(self.colors) != set(range(self.count)):
            raise ColoringError("Color indices must be dense (0..max all used)")

    @classmethod
    def dense(cls, colors: Sequence[int]) -> EdgeColoring:
        """Renumber used colors to 0..count-1, keeping their relative order."""
        remap = {c: i for i, c in enumerate(sorted(set(colors)))}
        return cls(tuple(remap[c] for c in colors))

    @property
    def count(self) -> int:
        return max(self.colors) + 1 if self.colors else 0

    def __len__(self) -> int:
        return len(self.colors)

    def __getitem__(self, edge: int) -> int:
        return self.colors[edge]


class Outcome(StrEnum):
    GOOD = "good"
    BAD = "bad"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class PrcfVerdict:
    """
    Result of a PRCF decision.

    ``evidence`` names how the outcome was reached: ``exhaustion``,
    ``certificate``, ``search``, ``few-colors``, ``acyclic``, ``even-cycle``,
    ``subdivision`` or ``budget``.
    """

    outcome: Outcome
    witness: EdgeColoring | None = None
    evidence: str = ""
    detail: str = ""
    nodes: int = 0
    certificate: Any = field(default=None, compare=False)

    def __post_init__(self):
        if self.outcome is Outcome.GOOD and self.witness is None:
            raise ColoringError("A Good verdict needs a witness coloring")
        if self.outcome is Outcome.BAD and self.evidence not in ("exhaustion", "certificate"):
            raise ColoringError("A Bad verdict needs exhaustion or certificate evidence")


def _colors_of(g: Graph, c: EdgeColoring | Sequence[int]) -> Sequence[int]:
    colors = c.colors if isinstance(c, EdgeColoring) else c
    if len(colors) != g.m:
        raise ColoringError(f"Coloring has {len(colors)} entries for {g.m} edges")
    return colors


def check_proper(g: Graph, c: EdgeColoring | Sequence[int]) -> bool:
    colors = _colors_of(g, c)
    for row in g.adjacency:
        seen = set()
        for _, edge in row:
            if colors[edge] in seen:
                return False
            seen.add(colors[edge])
    return True


def _walk_cycles(
    g: Graph, meter: Meter, colors: Sequence[int] | None = None
) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    """
    Yield every simple cycle once as ``(vertices, edges)``.

    A cycle is rooted at its smallest vertex and walked toward the smaller of
    the root's two cycle neighbors. With ``colors`` given, only rainbow cycles
    are produced and non-rainbow paths are never extended.
    """
    adjacency = g.adjacency
    for root in range(g.n):
        vertices = [root]
        edges: list[int] = []
        used: set[int] = set()
        on_path = {root}
        stack = [iter(adjacency[root])]
        while stack:
            advanced = False
            for w, e in stack[-1]:
                if w < root:
                    continue
                if colors is not None and colors[e] in used:
                    continue
                if w == root:
                    if len(vertices) >= 3 and vertices[1] < vertices[-1]:
                        yield tuple(vertices), tuple(edges) + (e,)
                    continue
                if w in on_path:
                    continue
                if not meter.charge():
                    raise BudgetExceeded(f"cycle enumeration: {meter.reason}", nodes=meter.nodes)
                vertices.append(w)
                edges.append(e)
                on_path.add(w)
                if colors is not None:
                    used.add(colors[e])
                stack.append(iter(adjacency[w]))
                advanced = True
                break
            if not advanced:
                stack.pop()
                if edges:
                    on_path.discard(vertices.pop())
                    last = edges.pop()
                    if colors is not None:
                        used.discard(colors[last])


def find_rainbow_cycle(
    g: Graph, c: EdgeColoring | Sequence[int], budget: Budget | None = None
) -> tuple[int, ...] | None:
    """Some cycle whose edges carry pairwise distinct colors, as a vertex sequence, or None."""
    colors = _colors_of(g, c)
    budget = budget or Budget()
    meter = Meter(budget.max_nodes, budget.deadline())
    for vertices, _ in _walk_cycles(g, meter, colors):
        logger.debug("find_rainbow_cycle: found %s after %d nodes", vertices, meter.nodes)
        return vertices
    return None


def _verified(g: Graph, colors: Sequence[int], what: str) -> EdgeColoring:
    coloring = EdgeColoring.dense(colors)
    if not check_proper(g, coloring):
        raise ColoringError(f"{what}: produced an improper coloring")
    rainbow = find_rainbow_cycle(g, coloring)
    if rainbow is not None:
        raise ColoringError(f"{what}: coloring has the rainbow cycle {list(rainbow)}")
    return coloring


# ---------------------------------------------------------------------------
# Vizing (Misra-Gries fan recoloring)
# ---------------------------------------------------------------------------


def vizing_color(g: Graph) -> EdgeColoring:
    """Proper edge coloring with at most max_degree + 1 colors."""
    if g.m == 0:
        return EdgeColoring(())
    palette = g.max_degree + 1
    edges = g.edges
    color = [-1] * g.m
    at: list[dict[int, int]] = [{} for _ in range(g.n)]

    def other(e: int, v: int) -> int:
        a, b = edges[e]
        return b if a == v else a

    def paint(e: int, c: int) -> None:
        a, b = edges[e]
        old = color[e]
        if old >= 0:
            del at[a][old]
            del at[b][old]
        color[e] = c
        if c >= 0:
            at[a][c] = e
            at[b][c] = e

    def free(v: int) -> int:
        return next(c for c in range(palette) if c not in at[v])

    for e, (u, v) in enumerate(edges):
        shared = next(
            (c for c in range(palette) if c not in at[u] and c not in at[v]), None
        )
        if shared is not None:
            paint(e, shared)
            continue

        # Maximal fan at u: color(u, fan[i]) is free on fan[i-1].
        fan = [v]
        fan_edges = [e]
        in_fan = {v}
        while True:
            last = fan[-1]
            for x, ex in g.adjacency[u]:
                if x in in_fan or color[ex] < 0:
                    continue
                if color[ex] not in at[last]:
                    fan.append(x)
                    fan_edges.append(ex)
                    in_fan.add(x)
                    break
            else:
                break

        c_free = free(u)
        d_free = free(fan[-1])

        # Swap c and d along the alternating path leaving u by a d edge.
        path = []
        x, want = u, d_free
        while want in at[x]:
            ex = at[x][want]
            path.append(ex)
            x = other(ex, x)
            want = c_free if want == d_free else d_free
        swapped = [(ex, c_free if color[ex] == d_free else d_free) for ex in path]
        for ex, _ in swapped:
            paint(ex, -1)
        for ex, new in swapped:
            paint(ex, new)

        target = None
        for j, w in enumerate(fan):
            if j > 0 and color[fan_edges[j]] in at[fan[j - 1]]:
                break
            if d_free not in at[w]:
                target = j
                break
        if target is None:
            raise ColoringError(f"vizing_color: no rotatable fan prefix at edge {e}")

        for i in range(target):
            shifted = color[fan_edges[i + 1]]
            paint(fan_edges[i + 1], -1)
            paint(fan_edges[i], shifted)
        paint(fan_edges[target], d_free)

    coloring = EdgeColoring.dense(color)
    if not check_proper(g, coloring):
        raise ColoringError("vizing_color: result is not proper")
    logger.info("vizing_color: m=%d max_degree=%d colors=%d", g.m, g.max_degree, coloring.count)
    return coloring


def few_colors_certificate(g: Graph) -> PrcfVerdict | None:
    """
    Good when a Vizing coloring uses fewer colors than the girth, since then
    no cycle can be rainbow; None (inconclusive) otherwise.
    """
    g_len = girth(g)
    if g_len is None:
        raise ColoringError("few_colors_certificate needs a graph with a cycle")
    coloring = vizing_color(g)
    if coloring.count >= g_len:
        logger.info("few_colors_certificate: %d colors >= girth %d, inconclusive", coloring.count, g_len)
        return None
    witness = _verified(g, coloring.colors, "few_colors_certificate")
    return PrcfVerdict(
        Outcome.GOOD,
        witness=witness,
        evidence="few-colors",
        detail=f"{coloring.count} colors < girth {g_len}",
    )


# ---------------------------------------------------------------------------
# Constructive colorers
# ---------------------------------------------------------------------------


def greedy_complete(
    g: Graph, partial: Sequence[int], reserved: frozenset[int] | set[int] = frozenset()
) -> list[int]:
    """Color every ``-1`` entry, in edge order, with the smallest color that keeps
    the coloring proper and is not ``reserved``."""
    colors = list(_colors_of(g, partial))
    at: list[set[int]] = [set() for _ in range(g.n)]
    for e, (u, v) in enumerate(g.edges):
        if colors[e] >= 0:
            if colors[e] in at[u] or colors[e] in at[v]:
                raise ColoringError(f"Partial coloring is improper at edge {e}")
            at[u].add(colors[e])
            at[v].add(colors[e])
    for e, (u, v) in enumerate(g.edges):
        if colors[e] >= 0:
            continue
        c = 0
        while c in reserved or c in at[u] or c in at[v]:
            c += 1
        colors[e] = c
        at[u].add(c)
        at[v].add(c)
    return colors


def _red_paths_coloring(g: Graph, paths: Sequence[Sequence[int]], what: str) -> EdgeColoring:
    """Red on the second edge of every path; the rest greedily with non-red colors."""
    partial = [-1] * g.m
    for path in paths:
        partial[path[1]] = RED
    return _verified(g, greedy_complete(g, partial, {RED}), what)


def _provenance(g_sub: Graph, provenance: Subdivision | None) -> Subdivision:
    try:
        if provenance is None:
            provenance = smooth(g_sub)
        provenance.check(g_sub)
    except FamilyError as exc:
        raise ColoringError(f"Not a usable subdivision: {exc}") from exc
    return provenance


def color_subdivision_k(
    g_sub: Graph, provenance: Subdivision | None = None, k: int | None = None
) -> EdgeColoring:
    """
    PRCF coloring of a k-fold subdivision, k >= 2.

    Each replacement path gets one red edge between two interior vertices, so
    every cycle, which runs through at least three whole paths, repeats red.
    """
    provenance = _provenance(g_sub, provenance)
    if k is not None and k != provenance.k:
        raise ColoringError(f"Provenance is a {provenance.k}-fold subdivision, expected k={k}")
    if provenance.k < 2:
        raise ColoringError(f"color_subdivision_k needs k >= 2, got k={provenance.k}")
    coloring = _red_paths_coloring(g_sub, provenance.edge_paths, "color_subdivision_k")
    logger.info(
        "color_subdivision_k: k=%d base_edges=%d colors=%d",
        provenance.k,
        provenance.base.m,
        coloring.count,
    )
    return coloring


def color_subdivision_1(
    g_sub: Graph, provenance: Subdivision | None = None
) -> EdgeColoring:
    """
    PRCF coloring of the 1-fold subdivision of a thick generalized polygon.

    Repeatedly: take the smallest surviving base vertex as root, grow its
    breadth-first levels L0..Ld inside the surviving vertices, give one fresh
    color to the subdivision edge next to y for every tree edge x -> y with
    x in L_i, i <= d-2, then delete L0..L_{d-2}. Leftover edges are completed
    greedily with colors above every level color.
    """
    provenance = _provenance(g_sub, provenance)
    if provenance.k != 1:
        raise ColoringError(f"color_subdivision_1 needs a 1-fold subdivision, got k={provenance.k}")
    base = provenance.base
    try:
        structure = classify(base)
    except GraphError as exc:
        raise ColoringError(f"Base graph cannot be classified: {exc}") from exc
    if structure.kind is not StructureKind.GENERALIZED_POLYGON or not structure.thick:
        raise ColoringError(
            f"Base graph is {structure.describe()}, not a thick generalized polygon"
        )
    d = structure.diameter

    partial = [-1] * g_sub.m
    remaining = set(range(base.n))
    rounds = 0
    while remaining:
        root = min(remaining)
        dist = bfs_distances(base, root, remaining)
        for e, (u, v) in enumerate(base.edges):
            du, dv = dist[u], dist[v]
            if du < 0 or dv < 0 or abs(du - dv) != 1:
                continue
            # path runs u -> v; take the sub-edge touching the deeper end
            deeper_is_v = dv > du
            if min(du, dv) > d - 2:
                continue
            path = provenance.edge_paths[e]
            partial[path[-1] if deeper_is_v else path[0]] = rounds
        removed = {x for x in remaining if 0 <= dist[x] <= d - 2}
        remaining -= removed
        logger.debug(
            "color_subdivision_1: round %d root=%d removed=%d left=%d",
            rounds,
            root,
            len(removed),
            len(remaining),
        )
        rounds += 1

    colors = greedy_complete(g_sub, partial, set(range(rounds)))
    coloring = _verified(g_sub, colors, "color_subdivision_1")
    logger.info(
        "color_subdivision_1: d=%d rounds=%d colors=%d", d, rounds, coloring.count
    )
    return coloring


# ---------------------------------------------------------------------------
# Exhaustive decision
# ---------------------------------------------------------------------------


class _Exhausted(Exception):
    pass


class _Stopped(Exception):
    pass


@dataclass(frozen=True)
class _SearchResult:
    status: str  # good | bad | unknown | stopped
    colors: tuple[int, ...] | None = None
    nodes: int = 0
    detail: str = ""


def _bfs_edge_order(g: Graph) -> list[int]:
    """Edges in the order a breadth-first search from vertex 0 meets them."""
    order = []
    placed = [False] * g.m
    seen = [False] * g.n
    seen[0] = True
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for w, e in g.adjacency[u]:
            if not placed[e]:
                placed[e] = True
                order.append(e)
            if not seen[w]:
                seen[w] = True
                queue.append(w)
    return order


class _Search:
    """
    Canonical enumeration of partitions of the edges into matchings.

    Edges are taken in a fixed order; each joins an existing compatible class
    or opens the next class (restricted growth), so every proper coloring is
    visited once up to renaming. ``closing[i]`` lists, as position tuples, the
    cycles whose last edge in the order is position i; a branch dies as soon as
    one of them is rainbow. Without an index every full coloring is checked.
    """

    def __init__(
        self,
        g: Graph,
        order: Sequence[int],
        closing: list[list[tuple[int, ...]]] | None,
        meter: Meter,
        stop: Any = None,
    ):
        self.g = g
        self.order = order
        self.ends = [g.edges[e] for e in order]
        self.closing = closing
        self.meter = meter
        self.stop = stop
        self._reset()

    def _reset(self) -> None:
        self.color_at = [-1] * len(self.order)
        self.vertex_colors: list[set[int]] = [set() for _ in range(self.g.n)]
        self.classes = 0

    def _choices(self, i: int) -> list[int]:
        u, v = self.ends[i]
        taken_u, taken_v = self.vertex_colors[u], self.vertex_colors[v]
        return [c for c in range(self.classes + 1) if c not in taken_u and c not in taken_v]

    def _assign(self, i: int, c: int) -> int:
        u, v = self.ends[i]
        self.color_at[i] = c
        self.vertex_colors[u].add(c)
        self.vertex_colors[v].add(c)
        previous = self.classes
        self.classes = max(self.classes, c + 1)
        return previous

    def _unassign(self, i: int, previous: int) -> None:
        u, v = self.ends[i]
        c = self.color_at[i]
        self.vertex_colors[u].discard(c)
        self.vertex_colors[v].discard(c)
        self.color_at[i] = -1
        self.classes = previous

    def _closes_rainbow(self, i: int) -> bool:
        if self.closing is None:
            return False
        color_at = self.color_at
        for cyc in self.closing[i]:
            if len({color_at[p] for p in cyc}) == len(cyc):
                return True
        return False

    def _edge_colors(self) -> tuple[int, ...]:
        colors = [0] * len(self.order)
        for position, e in enumerate(self.order):
            colors[e] = self.color_at[position]
        return tuple(colors)

    def _leaf_ok(self) -> bool:
        if self.closing is not None:
            return True
        colors = self._edge_colors()
        for _ in _walk_cycles(self.g, self.meter, colors):
            return False
        return True

    def children(self, prefix: tuple[int, ...]) -> list[tuple[int, ...]]:
        """Valid one-edge extensions of a prefix assignment."""
        self._reset()
        undo = [self._assign(i, c) for i, c in enumerate(prefix)]
        result = []
        i = len(prefix)
        for c in self._choices(i):
            previous = self._assign(i, c)
            if not self._closes_rainbow(i):
                result.append(prefix + (c,))
            self._unassign(i, previous)
        for i in reversed(range(len(prefix))):
            self._unassign(i, undo[i])
        return result

    def run(self, prefix: tuple[int, ...] = ()) -> tuple[int, ...] | None:
        self._reset()
        for i, c in enumerate(prefix):
            self._assign(i, c)
            if self._closes_rainbow(i):
                return None
        return self._descend(len(prefix))

    def _descend(self, i: int) -> tuple[int, ...] | None:
        if i == len(self.order):
            return self._edge_colors() if self._leaf_ok() else None
        for c in self._choices(i):
            if not self.meter.charge():
                raise _Exhausted
            if self.stop is not None and (self.meter.nodes & 0x3FF) == 0 and self.stop.is_set():
                raise _Stopped
            previous = self._assign(i, c)
            if not self._closes_rainbow(i):
                found = self._descend(i + 1)
                if found is not None:
                    return found
            self._unassign(i, previous)
        return None


def _search_chunk(
    prefixes: list[tuple[int, ...]],
    g: Graph,
    order: list[int],
    closing: list[list[tuple[int, ...]]] | None,
    max_nodes: int,
    deadline: float | None,
    stop: Any,
) -> _SearchResult:
    meter = Meter(max_nodes, deadline)
    search = _Search(g, order, closing, meter, stop)
    try:
        for prefix in prefixes:
            if stop is not None and stop.is_set():
                return _SearchResult("stopped", nodes=meter.nodes)
            found = search.run(prefix)
            if found is not None:
                if stop is not None:
                    stop.set()
                return _SearchResult("good", found, meter.nodes)
    except _Exhausted:
        return _SearchResult("unknown", nodes=meter.nodes, detail=meter.reason)
    except BudgetExceeded as exc:
        return _SearchResult("unknown", nodes=meter.nodes, detail=str(exc))
    except _Stopped:
        return _SearchResult("stopped", nodes=meter.nodes)
    return _SearchResult("bad", nodes=meter.nodes)


def _cycle_index(
    g: Graph, order: list[int], budget: Budget
) -> tuple[list[list[tuple[int, ...]]] | None, int]:
    """Cycles keyed by their last edge position, or None past the cycle cap."""
    position = {e: i for i, e in enumerate(order)}
    closing: list[list[tuple[int, ...]]] = [[] for _ in order]
    meter = Meter(budget.max_nodes, budget.deadline())
    count = 0
    for _, edges in _walk_cycles(g, meter):
        count += 1
        if count > budget.cycle_cap:
            logger.warning(
                "decide_prcf: more than %d cycles; checking rainbow cycles at leaves only",
                budget.cycle_cap,
            )
            return None, meter.nodes
        positions = tuple(sorted(position[e] for e in edges))
        closing[positions[-1]].append(positions)
    return closing, meter.nodes


def _decide_connected(g: Graph, budget: Budget, workers: int) -> PrcfVerdict:
    if girth(g) is None:
        witness = _verified(g, vizing_color(g).colors, "decide_prcf")
        return PrcfVerdict(Outcome.GOOD, witness=witness, evidence="acyclic")

    order = _bfs_edge_order(g)
    try:
        closing, index_nodes = _cycle_index(g, order, budget)
    except BudgetExceeded as exc:
        return PrcfVerdict(Outcome.UNKNOWN, evidence="budget", detail=str(exc), nodes=exc.nodes)

    if workers <= 1:
        results = [
            _search_chunk([()], g, order, closing, budget.max_nodes, budget.deadline(), None)
        ]
    else:
        # Split on prefix assignments until every worker has several subtrees.
        probe = _Search(g, order, closing, Meter(budget.max_nodes))
        frontier: list[tuple[int, ...]] = [()]
        while frontier and len(frontier) < 4 * workers and len(frontier[0]) < len(order):
            frontier = [child for prefix in frontier for child in probe.children(prefix)]
        chunks = partition(frontier, workers)
        logger.debug(
            "decide_prcf: %d prefixes of depth %d over %d workers",
            len(frontier),
            len(frontier[0]) if frontier else 0,
            workers,
        )
        with multiprocessing.Manager() as manager:
            stop = manager.Event()
            results = run_chunks(
                _search_chunk,
                chunks,
                workers,
                g,
                order,
                closing,
                budget.max_nodes,
                budget.deadline(),
                stop,
            )

    nodes = index_nodes + sum(r.nodes for r in results)
    for result in results:
        if result.status == "good":
            witness = _verified(g, result.colors, "decide_prcf")
            return PrcfVerdict(Outcome.GOOD, witness=witness, evidence="search", nodes=nodes)
    unknown = [r for r in results if r.status == "unknown"]
    if unknown:
        return PrcfVerdict(
            Outcome.UNKNOWN, evidence="budget", detail=unknown[0].detail, nodes=nodes
        )
    return PrcfVerdict(Outcome.BAD, evidence="exhaustion", nodes=nodes)


def decide_prcf(
    g: Graph, budget: Budget | None = None, workers: int = 1
) -> PrcfVerdict:
    """
    Decide whether ``g`` admits a PRCF coloring, component by component.

    Good carries a re-verified witness; Bad means the canonical search space
    was fully traversed; Unknown means the budget ran out first.
    """
    budget = budget or Budget()
    parts = [part for part in components(g) if len(part) > 1]
    if len(parts) == 1 and len(parts[0]) == g.n:
        verdict = _decide_connected(g, budget, workers)
    else:
        verdict = _decide_components(g, parts, budget, workers)
    logger.info(
        "decide_prcf: n=%d m=%d -> %s (%s) nodes=%d",
        g.n,
        g.m,
        verdict.outcome,
        verdict.evidence,
        verdict.nodes,
    )
    return verdict


def _decide_components(
    g: Graph, parts: list[list[int]], budget: Budget, workers: int
) -> PrcfVerdict:
    colors = [0] * g.m
    nodes = 0
    pending: PrcfVerdict | None = None
    for part in parts:
        sub, vertex_origin, edge_origin = induced_subgraph(g, part)
        verdict = _decide_connected(sub, budget, workers)
        nodes += verdict.nodes
        if verdict.outcome is Outcome.BAD:
            return PrcfVerdict(
                Outcome.BAD,
                evidence=verdict.evidence,
                detail=f"component containing vertex {vertex_origin[0]} is PRCF-bad",
                nodes=nodes,
            )
        if verdict.outcome is Outcome.UNKNOWN:
            pending = pending or verdict
            continue
        for sub_edge, original in enumerate(edge_origin):
            colors[original] = verdict.witness[sub_edge]
    if pending is not None:
        return PrcfVerdict(
            Outcome.UNKNOWN, evidence="budget", detail=pending.detail, nodes=nodes
        )
    witness = _verified(g, colors, "decide_prcf") if g.m else EdgeColoring(())
    return PrcfVerdict(Outcome.GOOD, witness=witness, evidence="search", nodes=nodes)


def _alternating_cycle(g: Graph) -> list[int]:
    """Colors 0,1,0,1,... walking once around a cycle graph from vertex 0."""
    colors = [-1] * g.m
    current, edge = 0, g.adjacency[0][0][1]
    for step in range(g.m):
        colors[edge] = step % 2
        a, b = g.edges[edge]
        current = b if a == current else a
        edge = next((e for _, e in g.adjacency[current] if colors[e] < 0), None)
    return colors


def decide_non_thick(
    g: Graph, budget: Budget | None = None, workers: int = 1
) -> PrcfVerdict:
    """
    Decide a non-thick generalized polygon from its structure: every one is
    PRCF-good except the 1-fold subdivisions of a multiple edge of
    multiplicity at least four (K_{2,n}, n >= 4), which the search settles.
    """
    form = non_thick_form(g)
    logger.info("decide_non_thick: %s", form.describe())

    if form.kind is NonThickKind.EVEN_CYCLE:
        witness = _verified(g, _alternating_cycle(g), "decide_non_thick")
        return PrcfVerdict(Outcome.GOOD, witness=witness, evidence="even-cycle", detail=form.describe())

    if form.kind is NonThickKind.SUBDIVIDED_MULTIPLE_EDGE:
        if form.k >= 2:
            witness = _red_paths_coloring(g, form.paths, "decide_non_thick")
            return PrcfVerdict(Outcome.GOOD, witness=witness, evidence="subdivision", detail=form.describe())
        return decide_prcf(g, budget, workers)

    if form.k >= 2:
        witness = color_subdivision_k(g, form.subdivision)
    else:
        witness = color_subdivision_1(g, form.subdivision)
    return PrcfVerdict(Outcome.GOOD, witness=witness, evidence="subdivision", detail=form.describe())
