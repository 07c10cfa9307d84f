from rainbow.census import census
from rainbow.management.base import CommandResult, RainbowCommand
from rainbow.schemas import census_schema


class Command(RainbowCommand):
    help = (
        "Count paths and girth cycles exactly, and measure how many cycles each "
        "path lies on (unique extension)."
    )
    command_name = "census"

    def add_command_arguments(self, parser):
        parser.add_argument(
            "--path-order",
            type=int,
            dest="path_order",
            help="Path order k (default: derived from the girth).",
        )
        parser.add_argument(
            "--length",
            type=int,
            help="Cycle length (default: the girth).",
        )

    def execute_command(self, options, budget, workers):
        loaded = self.load_graph(options)
        report = census(
            loaded.graph,
            k=options.get("path_order"),
            length=options.get("length"),
            budget=budget,
            workers=workers,
        )
        summary = [
            f"P_{report.k} subgraphs:   {report.path_count}",
            f"{report.g}-cycles:        {report.cycle_count}",
            f"Extension range: {report.extension_min}..{report.extension_max}",
            f"Coverage:        {report.coverage_ratio}",
        ]
        return CommandResult(loaded.descriptor, census_schema(report), summary)
