from rainbow.graph_io import emit_dot, emit_edge_list, emit_graph6
from rainbow.management.base import CommandResult, RainbowCommand

EMIT_CHOICES = ("edges", "graph6", "dot", "json")


class Command(RainbowCommand):
    help = (
        "Build a graph from a family spec (or read one) and write it as a 0-based "
        "edge list, graph6, DOT, or a JSON report."
    )
    command_name = "family"

    def add_command_arguments(self, parser):
        parser.add_argument(
            "--emit",
            choices=EMIT_CHOICES,
            default="edges",
            help="Output format (default: edges).",
        )

    def execute_command(self, options, budget, workers):
        loaded = self.load_graph(options)
        g = loaded.graph
        summary = [f"{loaded.descriptor.name}: n={g.n}, m={g.m}"]
        emit = options["emit"]

        if emit == "edges":
            return CommandResult(loaded.descriptor, None, summary, raw=emit_edge_list(g))
        if emit == "graph6":
            return CommandResult(loaded.descriptor, None, summary, raw=emit_graph6(g))
        if emit == "dot":
            name = "".join(ch if ch.isalnum() else "_" for ch in loaded.descriptor.name)
            return CommandResult(loaded.descriptor, None, summary, raw=emit_dot(g, name))

        results = {
            "n": g.n,
            "m": g.m,
            "edges": [list(edge) for edge in g.edges],
            "labels": list(g.labels) if g.labels is not None else None,
        }
        return CommandResult(loaded.descriptor, results, summary)
