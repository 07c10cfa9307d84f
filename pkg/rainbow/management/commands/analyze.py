from rainbow.graph_core import classify, diameter, girth, is_connected
from rainbow.management.base import CommandResult, RainbowCommand
from rainbow.schemas import analysis_schema


class Command(RainbowCommand):
    help = "Report girth, diameter, degrees and the Moore / generalized-polygon classification."
    command_name = "analyze"

    def execute_command(self, options, budget, workers):
        loaded = self.load_graph(options)
        g = loaded.graph
        g_len = girth(g)
        diam = diameter(g)
        structure = classify(g) if g.n >= 3 and is_connected(g) else None
        results = analysis_schema(g, structure, g_len, diam)

        summary = [
            f"Graph:          {loaded.descriptor.name} (n={g.n}, m={g.m})",
            f"Girth:          {g_len if g_len is not None else 'acyclic'}",
            f"Diameter:       {diam if diam is not None else 'disconnected'}",
            f"Classification: {results.classification}",
        ]
        return CommandResult(loaded.descriptor, results, summary)
