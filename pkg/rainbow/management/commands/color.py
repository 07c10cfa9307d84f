from rainbow.coloring import color_subdivision_1, color_subdivision_k, vizing_color
from rainbow.graph_io import emit_coloring
from rainbow.management.base import CommandResult, RainbowCommand, verified_coloring

METHODS = ("vizing", "subdivision-k", "subdivision-1")


class Command(RainbowCommand):
    help = "Color the edges with Vizing's procedure or one of the subdivision colorers."
    command_name = "color"

    def add_command_arguments(self, parser):
        parser.add_argument("--method", choices=METHODS, default="vizing")
        parser.add_argument(
            "--emit",
            choices=("json", "coloring"),
            default="json",
            help="'coloring' writes plain 'edgeIndex color' lines instead of a report.",
        )

    def execute_command(self, options, budget, workers):
        loaded = self.load_graph(options)
        g = loaded.graph
        method = options["method"]
        if method == "vizing":
            coloring = vizing_color(g)
        elif method == "subdivision-k":
            coloring = color_subdivision_k(g, loaded.provenance)
        else:
            coloring = color_subdivision_1(g, loaded.provenance)

        schema = verified_coloring(g, method, coloring, budget)
        summary = [
            f"Graph:   {loaded.descriptor.name} (n={g.n}, m={g.m})",
            f"Method:  {method}",
            f"Colors:  {schema.color_count}",
            f"Proper:  {schema.proper}",
            f"Rainbow: {schema.rainbow_cycle if schema.rainbow_cycle else 'none'}",
        ]
        if options["emit"] == "coloring":
            return CommandResult(loaded.descriptor, None, summary, raw=emit_coloring(coloring.colors))
        return CommandResult(loaded.descriptor, schema, summary)
