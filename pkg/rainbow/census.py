"""
Exact path and cycle census.

Paths are counted once each by requiring ``first < last``; cycles once each
by starting from their smallest vertex and requiring the second vertex to be
smaller than the last. All counts are Python integers. Work is split by
starting vertex, so results are identical for any worker count.
"""

from __future__ import annotations

import logging
import sys
from dataclasses import dataclass
from fractions import Fraction

from rainbow.budget import Budget, Meter, partition, run_chunks
from rainbow.errors import BudgetExceeded, CrossCheckError, GraphError
from rainbow.graph_core import Graph, bfs_distances, girth

logger = logging.getLogger(__name__)


class _Exhausted(Exception):
    """Unwinds a search once its meter runs out."""


# Searches recurse once per path vertex.
if sys.getrecursionlimit() < 10_000:
    sys.setrecursionlimit(10_000)


@dataclass(frozen=True)
class PathTally:
    paths: int = 0
    incidences: int = 0
    covered: int = 0
    extension_min: int | None = None
    extension_max: int | None = None
    nodes: int = 0
    exceeded: str = ""

    def merge(self, other: PathTally) -> PathTally:
        def pick(a, b, f):
            if a is None:
                return b
            if b is None:
                return a
            return f(a, b)

        return PathTally(
            paths=self.paths + other.paths,
            incidences=self.incidences + other.incidences,
            covered=self.covered + other.covered,
            extension_min=pick(self.extension_min, other.extension_min, min),
            extension_max=pick(self.extension_max, other.extension_max, max),
            nodes=self.nodes + other.nodes,
            exceeded=self.exceeded or other.exceeded,
        )


@dataclass(frozen=True)
class CycleTally:
    cycles: int = 0
    nodes: int = 0
    exceeded: str = ""

    def merge(self, other: CycleTally) -> CycleTally:
        return CycleTally(
            cycles=self.cycles + other.cycles,
            nodes=self.nodes + other.nodes,
            exceeded=self.exceeded or other.exceeded,
        )


@dataclass(frozen=True)
class CensusReport:
    k: int
    g: int
    path_count: int
    cycle_count: int
    extension_min: int
    extension_max: int
    covered_path_count: int
    coverage_ratio: Fraction
    incidences: int
    nodes: int

    def __post_init__(self):
        if not 0 <= self.covered_path_count <= self.path_count:
            raise CrossCheckError("covered_path_count must lie in 0..path_count")
        if self.extension_min > self.extension_max:
            raise CrossCheckError("extension_min exceeds extension_max")
        if self.extension_min == self.extension_max == 1 and (
            self.covered_path_count != self.path_count
        ):
            raise CrossCheckError("unique extension but not every path is covered")


def path_order_for_girth(g: int) -> int:
    """Path order k used by the counting arguments: (g+3)/2 for odd g, (g+4)/2 for even g."""
    if g < 3:
        raise GraphError(f"girth must be at least 3, got {g}")
    return (g + 3) // 2 if g % 2 else (g + 4) // 2


def _finish(tally, budget: Budget, what: str):
    if tally.exceeded or tally.nodes > budget.max_nodes:
        reason = tally.exceeded or f"node budget of {budget.max_nodes} exceeded"
        logger.warning("%s: %s after %d nodes", what, reason, tally.nodes)
        raise BudgetExceeded(f"{what}: {reason}", nodes=tally.nodes)
    return tally


def _path_chunk(
    roots: list[int],
    g: Graph,
    k: int,
    closing_edges: int | None,
    max_nodes: int,
    deadline: float | None,
) -> PathTally:
    """
    Enumerate paths on k vertices starting at ``roots`` (counted at first < last).

    With ``closing_edges`` set, also count for every path the number of paths
    of exactly that many edges joining its ends through vertices off the path,
    i.e. the cycles of length (k - 1) + closing_edges containing it.
    """
    neighbors = g.neighbors
    neighbor_sets = g.neighbor_sets
    meter = Meter(max_nodes, deadline)
    on_path = [False] * g.n
    state = {"paths": 0, "incidences": 0, "covered": 0, "min": None, "max": None}

    def closing(v: int, target: int, steps: int) -> int:
        if steps == 1:
            return 1 if target in neighbor_sets[v] else 0
        if steps == 2:
            total = 0
            target_set = neighbor_sets[target]
            for w in neighbors[v]:
                if not on_path[w] and w in target_set:
                    total += 1
            if not meter.charge(len(neighbors[v])):
                raise _Exhausted
            return total
        total = 0
        for w in neighbors[v]:
            if on_path[w]:
                continue
            if not meter.charge():
                raise _Exhausted
            on_path[w] = True
            total += closing(w, target, steps - 1)
            on_path[w] = False
        return total

    def record(first: int, last: int) -> None:
        state["paths"] += 1
        if closing_edges is None:
            return
        count = closing(last, first, closing_edges)
        state["incidences"] += count
        if count:
            state["covered"] += 1
        if state["min"] is None or count < state["min"]:
            state["min"] = count
        if state["max"] is None or count > state["max"]:
            state["max"] = count

    def extend(first: int, v: int, remaining: int) -> None:
        for w in neighbors[v]:
            if on_path[w]:
                continue
            if not meter.charge():
                raise _Exhausted
            if remaining == 1:
                if w > first:
                    on_path[w] = True
                    record(first, w)
                    on_path[w] = False
            else:
                on_path[w] = True
                extend(first, w, remaining - 1)
                on_path[w] = False

    exceeded = ""
    try:
        for root in roots:
            on_path[root] = True
            if k == 1:
                record(root, root)
            else:
                extend(root, root, k - 1)
            on_path[root] = False
    except _Exhausted:
        exceeded = meter.reason

    return PathTally(
        paths=state["paths"],
        incidences=state["incidences"],
        covered=state["covered"],
        extension_min=state["min"],
        extension_max=state["max"],
        nodes=meter.nodes,
        exceeded=exceeded,
    )


def _cycle_chunk(
    roots: list[int],
    g: Graph,
    length: int,
    through: bool,
    max_nodes: int,
    deadline: float | None,
) -> CycleTally:
    """
    Count cycles of ``length`` rooted at each root.

    ``through=False``: the root is the smallest vertex of the cycle.
    ``through=True``: any cycle containing the root.
    """
    neighbors = g.neighbors
    neighbor_sets = g.neighbor_sets
    meter = Meter(max_nodes, deadline)
    on_path = [False] * g.n
    found = 0
    exceeded = ""

    def extend(root: int, second: int, v: int, depth: int, dist: list[int]) -> int:
        # depth = vertices on the path so far, v is the last of them
        if depth == length:
            return 1 if root in neighbor_sets[v] and second < v else 0
        total = 0
        budget_left = length - depth
        for w in neighbors[v]:
            if on_path[w] or (not through and w < root):
                continue
            if dist[w] > budget_left or dist[w] < 0:
                continue
            if not meter.charge():
                raise _Exhausted
            on_path[w] = True
            total += extend(root, second if depth > 1 else w, w, depth + 1, dist)
            on_path[w] = False
        return total

    try:
        for root in roots:
            if not through:
                allowed = set(range(root, g.n))
                dist = bfs_distances(g, root, allowed)
            else:
                dist = bfs_distances(g, root)
            on_path[root] = True
            found += extend(root, -1, root, 1, dist)
            on_path[root] = False
    except _Exhausted:
        exceeded = meter.reason

    return CycleTally(cycles=found, nodes=meter.nodes, exceeded=exceeded)


def _scan_paths(
    g: Graph, k: int, closing_edges: int | None, budget: Budget, workers: int
) -> PathTally:
    chunks = partition(list(range(g.n)), workers)
    results = run_chunks(
        _path_chunk, chunks, workers, g, k, closing_edges, budget.max_nodes, budget.deadline()
    )
    tally = PathTally()
    for result in results:
        tally = tally.merge(result)
    return tally


def _check_k(k: int) -> None:
    if k < 2:
        raise GraphError(f"path order must be at least 2, got {k}")


def count_paths(
    g: Graph, k: int, budget: Budget | None = None, workers: int = 1
) -> int:
    """Number of subgraphs isomorphic to the path on k vertices."""
    _check_k(k)
    budget = budget or Budget()
    tally = _finish(_scan_paths(g, k, None, budget, workers), budget, "count_paths")
    logger.info("count_paths: k=%d count=%d nodes=%d", k, tally.paths, tally.nodes)
    return tally.paths


def count_cycles(
    g: Graph, length: int, budget: Budget | None = None, workers: int = 1
) -> int:
    """Number of simple cycles of exactly ``length`` edges."""
    if length < 3:
        raise GraphError(f"cycle length must be at least 3, got {length}")
    budget = budget or Budget()
    chunks = partition(list(range(g.n)), workers)
    results = run_chunks(
        _cycle_chunk, chunks, workers, g, length, False, budget.max_nodes, budget.deadline()
    )
    tally = CycleTally()
    for result in results:
        tally = tally.merge(result)
    tally = _finish(tally, budget, "count_cycles")
    logger.info("count_cycles: len=%d count=%d nodes=%d", length, tally.cycles, tally.nodes)
    return tally.cycles


def cycles_through_vertex(
    g: Graph, v: int, length: int, budget: Budget | None = None
) -> int:
    """Number of ``length``-cycles containing vertex ``v``."""
    if not 0 <= v < g.n:
        raise GraphError(f"Vertex {v} is not in 0..{g.n - 1}")
    if length < 3:
        raise GraphError(f"cycle length must be at least 3, got {length}")
    budget = budget or Budget()
    tally = _cycle_chunk([v], g, length, True, budget.max_nodes, budget.deadline())
    tally = _finish(tally, budget, "cycles_through_vertex")
    return tally.cycles


def _extension_scan(
    g: Graph, k: int, length: int, budget: Budget | None, workers: int
) -> PathTally:
    _check_k(k)
    if length < 3:
        raise GraphError(f"cycle length must be at least 3, got {length}")
    if length <= k - 1:
        raise GraphError(f"cycle length {length} must exceed the path length {k - 1}")
    budget = budget or Budget()
    tally = _scan_paths(g, k, length - (k - 1), budget, workers)
    tally = _finish(tally, budget, "unique_extension")
    if tally.paths == 0:
        raise GraphError(f"Graph has no path on {k} vertices")
    return tally


def unique_extension(
    g: Graph, k: int, length: int, budget: Budget | None = None, workers: int = 1
) -> tuple[int, int]:
    """Min and max, over all P_k subgraphs, of the number of ``length``-cycles containing it."""
    tally = _extension_scan(g, k, length, budget, workers)
    logger.info(
        "unique_extension: k=%d len=%d paths=%d extension=(%d, %d)",
        k,
        length,
        tally.paths,
        tally.extension_min,
        tally.extension_max,
    )
    return tally.extension_min, tally.extension_max


def coverage_ratio(
    g: Graph, k: int, length: int, budget: Budget | None = None, workers: int = 1
) -> Fraction:
    """Fraction of P_k subgraphs lying on at least one ``length``-cycle."""
    tally = _extension_scan(g, k, length, budget, workers)
    return Fraction(tally.covered, tally.paths)


def census(
    g: Graph,
    k: int | None = None,
    length: int | None = None,
    budget: Budget | None = None,
    workers: int = 1,
) -> CensusReport:
    """
    Full census for one graph. ``length`` defaults to the girth and ``k`` to
    the path order the counting arguments use for that girth.
    """
    budget = budget or Budget()
    if length is None:
        length = girth(g)
        if length is None:
            raise GraphError("Graph is acyclic; pass an explicit cycle length")
    if k is None:
        k = path_order_for_girth(length)

    tally = _extension_scan(g, k, length, budget, workers)
    cycles = count_cycles(g, length, budget, workers)
    # Every length-cycle holds exactly `length` windows of k consecutive vertices.
    if tally.incidences != cycles * length:
        raise CrossCheckError(
            f"census: {tally.incidences} path/cycle incidences but "
            f"{cycles} cycles x {length} windows"
        )
    report = CensusReport(
        k=k,
        g=length,
        path_count=tally.paths,
        cycle_count=cycles,
        extension_min=tally.extension_min,
        extension_max=tally.extension_max,
        covered_path_count=tally.covered,
        coverage_ratio=Fraction(tally.covered, tally.paths),
        incidences=tally.incidences,
        nodes=tally.nodes,
    )
    logger.info(
        "census: k=%d g=%d paths=%d cycles=%d extension=(%d, %d) coverage=%s",
        k,
        length,
        report.path_count,
        report.cycle_count,
        report.extension_min,
        report.extension_max,
        report.coverage_ratio,
    )
    return report

