"""
Shared plumbing for the rainbow management commands: graph selection flags,
budget flags, error-to-exit-code mapping and report rendering.
"""

import logging
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Optional

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError

from rainbow.budget import Budget
from rainbow.coloring import EdgeColoring, check_proper, find_rainbow_cycle
from rainbow.errors import BudgetExceeded, CrossCheckError, RainbowError
from rainbow.families import FamilyKind, Subdivision, build, build_subdivision, parse_family
from rainbow.graph_core import Graph
from rainbow.graph_io import parse_graph
from rainbow.schemas import (
    ColoringSchema,
    GraphDescriptor,
    Report,
    budget_schema,
    coloring_schema,
    graph_descriptor,
)

logger = logging.getLogger(__name__)


@dataclass
class LoadedGraph:
    graph: Graph
    descriptor: GraphDescriptor
    provenance: Optional[Subdivision] = None


@dataclass
class CommandResult:
    input: dict[str, Any] | GraphDescriptor
    results: Any
    summary: list[str] = field(default_factory=list)
    # Written verbatim instead of a report (plain edge lists, graph6, DOT).
    raw: Optional[str] = None


class RainbowCommand(BaseCommand):
    """
    Base class for the subcommands. Subclasses implement ``execute_command``
    and return a CommandResult; this class turns domain errors into exit codes
    (1 invalid input, 2 budget exceeded, 3 cross-check mismatch) and writes one
    JSON report to stdout plus a short summary to stderr.
    """

    requires_system_checks = []
    command_name = ""
    # "required", "optional" or "none"
    graph_arguments = "required"

    def add_arguments(self, parser):
        if self.graph_arguments != "none":
            source = parser.add_argument_group("graph selection")
            source.add_argument(
                "--family",
                help=(
                    "Built-in family: cycle, path, complete, k2n, kmn, petersen, "
                    "hoffman-singleton, pg, theta."
                ),
            )
            source.add_argument("--n", type=int, help="Family size parameter n.")
            source.add_argument("--m", type=int, help="Family size parameter m (kmn).")
            source.add_argument("--k", type=int, help="Path length parameter k (theta).")
            source.add_argument("--q", type=int, help="Field order q (pg).")
            source.add_argument(
                "--subdivide",
                type=int,
                metavar="K",
                help="Replace every edge of the family graph by a path with K interior vertices.",
            )
            source.add_argument(
                "--input",
                type=str,
                help="Path to a graph file (0-based edge list or graph6, auto-detected).",
            )

        limits = parser.add_argument_group("limits")
        limits.add_argument(
            "--max-nodes",
            type=int,
            help=f"Enumeration node cap (default {settings.PRCF_MAX_NODES}).",
        )
        limits.add_argument(
            "--max-seconds",
            type=float,
            help="Wall-clock cap in seconds (default unlimited).",
        )
        limits.add_argument(
            "--workers",
            type=int,
            help=f"Worker processes (default {settings.PRCF_WORKERS}; 1 is deterministic).",
        )
        limits.add_argument(
            "--timing",
            action="store_true",
            help="Include elapsed time in the report even in deterministic mode.",
        )
        self.add_command_arguments(parser)

    def add_command_arguments(self, parser):
        pass

    def execute_command(self, options, budget: Budget, workers: int) -> CommandResult:
        raise NotImplementedError

    def handle(self, *args, **options):
        started = time.perf_counter()
        try:
            budget = Budget.from_settings(
                max_nodes=options.get("max_nodes"),
                max_seconds=options.get("max_seconds"),
            )
            workers = options.get("workers")
            if workers is None:
                workers = settings.PRCF_WORKERS
            if workers < 1:
                raise CommandError("--workers must be at least 1", returncode=1)
            result = self.execute_command(options, budget, workers)
        except BudgetExceeded as exc:
            raise CommandError(f"Budget exceeded: {exc}", returncode=exc.exit_code) from exc
        except CrossCheckError as exc:
            raise CommandError(f"Cross-check failed: {exc}", returncode=exc.exit_code) from exc
        except RainbowError as exc:
            raise CommandError(str(exc), returncode=exc.exit_code) from exc
        elapsed = time.perf_counter() - started

        if result.raw is not None:
            self.stdout.write(result.raw, ending="")
        else:
            report = Report(
                command=self.command_name,
                input=(
                    result.input.model_dump()
                    if isinstance(result.input, GraphDescriptor)
                    else result.input
                ),
                results=result.results,
                timing=elapsed if (workers > 1 or options.get("timing")) else None,
                budget=budget_schema(budget, workers),
            )
            self.stdout.write(report.model_dump_json(indent=2))

        self.stderr.write("=" * 60, style_func=self.style.SUCCESS)
        self.stderr.write(f"prcf {self.command_name}", style_func=self.style.SUCCESS)
        self.stderr.write("=" * 60, style_func=self.style.SUCCESS)
        for line in result.summary:
            self.stderr.write(line)
        self.stderr.write(f"Elapsed: {elapsed:.3f}s")

    def load_graph(self, options) -> LoadedGraph:
        family = options.get("family")
        path = options.get("input")
        if family and path:
            raise CommandError("Use either --family or --input, not both", returncode=1)
        if family:
            spec = parse_family(
                family,
                n=options.get("n"),
                m=options.get("m"),
                k=options.get("k"),
                q=options.get("q"),
                subdivide_k=options.get("subdivide"),
            )
            provenance = None
            if spec.kind is FamilyKind.SUBDIVISION:
                provenance = build_subdivision(spec)
                graph = provenance.graph
            else:
                graph = build(spec)
            logger.debug("load_graph: built %s (n=%d, m=%d)", spec.describe(), graph.n, graph.m)
            return LoadedGraph(
                graph,
                graph_descriptor("family", spec.describe(), graph),
                provenance,
            )
        if path:
            try:
                text = Path(path).read_text()
            except OSError as exc:
                raise CommandError(f"Cannot read {path}: {exc}", returncode=1) from exc
            graph = parse_graph(text)
            return LoadedGraph(graph, graph_descriptor("input", path, graph))
        raise CommandError("A graph is required: pass --family or --input", returncode=1)

    def has_graph(self, options) -> bool:
        return bool(options.get("family") or options.get("input"))


def verified_coloring(
    g: Graph, method: str, coloring: EdgeColoring, budget: Budget
) -> ColoringSchema:
    """Coloring schema carrying its own properness and rainbow-cycle check."""
    proper = check_proper(g, coloring)
    rainbow = find_rainbow_cycle(g, coloring, budget)
    return coloring_schema(method, coloring, proper, rainbow)
