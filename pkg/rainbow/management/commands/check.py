from pathlib import Path

from django.core.management.base import CommandError

from rainbow.coloring import EdgeColoring
from rainbow.graph_io import parse_coloring
from rainbow.management.base import CommandResult, RainbowCommand, verified_coloring


class Command(RainbowCommand):
    help = "Check a supplied 'edgeIndex color' coloring for properness and rainbow cycles."
    command_name = "check"

    def add_command_arguments(self, parser):
        parser.add_argument("--coloring", required=True, help="Path to the coloring file.")

    def execute_command(self, options, budget, workers):
        loaded = self.load_graph(options)
        g = loaded.graph
        try:
            text = Path(options["coloring"]).read_text()
        except OSError as exc:
            raise CommandError(f"Cannot read {options['coloring']}: {exc}", returncode=1) from exc
        coloring = EdgeColoring.dense(parse_coloring(text, g.m))
        schema = verified_coloring(g, "supplied", coloring, budget)

        summary = [
            f"Graph:   {loaded.descriptor.name} (n={g.n}, m={g.m})",
            f"Colors:  {schema.color_count}",
            f"Proper:  {schema.proper}",
            f"Rainbow: {schema.rainbow_cycle if schema.rainbow_cycle else 'none'}",
            f"PRCF:    {schema.verified}",
        ]
        descriptor = dict(loaded.descriptor.model_dump(), coloring=options["coloring"])
        return CommandResult(descriptor, schema, summary)
