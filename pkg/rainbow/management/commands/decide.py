from rainbow.certificates import certified_verdict
from rainbow.coloring import decide_prcf
from rainbow.management.base import CommandResult, RainbowCommand, verified_coloring
from rainbow.schemas import verdict_schema


class Command(RainbowCommand):
    help = (
        "Decide whether the graph admits a proper coloring with no rainbow cycle. "
        "'search' enumerates colorings canonically; 'certified' tries the cheap "
        "certificates first."
    )
    command_name = "decide"

    def add_command_arguments(self, parser):
        parser.add_argument(
            "--strategy",
            choices=("search", "certified"),
            default="search",
        )

    def execute_command(self, options, budget, workers):
        loaded = self.load_graph(options)
        g = loaded.graph
        if options["strategy"] == "certified":
            verdict = certified_verdict(g, budget, workers)
        else:
            verdict = decide_prcf(g, budget, workers)

        witness = None
        if verdict.witness is not None:
            witness = verified_coloring(g, verdict.evidence, verdict.witness, budget)

        summary = [
            f"Graph:    {loaded.descriptor.name} (n={g.n}, m={g.m})",
            f"Verdict:  {verdict.outcome.value} ({verdict.evidence})",
        ]
        if verdict.detail:
            summary.append(f"Detail:   {verdict.detail}")
        if witness is not None:
            summary.append(f"Witness:  {witness.color_count} colors, verified={witness.verified}")
        return CommandResult(loaded.descriptor, verdict_schema(verdict, witness), summary)
