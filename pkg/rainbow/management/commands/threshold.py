from django.core.management.base import CommandError

from rainbow.certificates import (
    octagon_threshold_report,
    order_formulas,
    threshold_report,
)
from rainbow.management.base import CommandResult, RainbowCommand
from rainbow.schemas import octagon_threshold_schema, order_formulas_schema, threshold_schema


class Command(RainbowCommand):
    help = (
        "Find the smallest parameter at which the counting bounds cross: degree r "
        "for a regular polygon of diameter D, or q for the octagon family."
    )
    command_name = "threshold"
    graph_arguments = "none"

    def add_command_arguments(self, parser):
        target = parser.add_mutually_exclusive_group()
        target.add_argument("--polygon", type=int, metavar="D", help="Polygon diameter.")
        target.add_argument("--octagon", action="store_true", help="Sweep q over odd powers of 2.")
        parser.add_argument(
            "--prime-power",
            action="store_true",
            help="Only accept r with r-1 a prime power.",
        )

    def execute_command(self, options, budget, workers):
        if options.get("octagon"):
            report = octagon_threshold_report()
            summary = [
                f"q under 1/8: {report.q_for_one_eighth}",
                f"q under 1/6: {report.q_for_one_sixth}",
            ]
            results = {
                "threshold": report.q_for_one_eighth,
                "report": octagon_threshold_schema(report),
            }
            return CommandResult({"source": "params", "name": "octagon"}, results, summary)

        d = options.get("polygon")
        if d is None:
            raise CommandError("Pass --polygon D or --octagon", returncode=1)
        report = threshold_report(d)
        r = report.prime_power if options.get("prime_power") else report.unconstrained
        formulas = order_formulas(r, d)
        summary = [
            f"Threshold r:          {r}",
            f"Unconstrained:        {report.unconstrained}",
            f"r-1 prime power:      {report.prime_power}",
            f"Moore-style order:    {formulas.moore_style:,}",
            f"Bipartite-style order: {formulas.bipartite_style:,}",
        ]
        if report.agrees_with_published is False:
            summary.append(
                f"Note: published value {report.published} assumes r-1 is a prime power"
            )
        results = {
            "threshold": r,
            "report": threshold_schema(report),
            "order_formulas": order_formulas_schema(r, d, formulas),
        }
        descriptor = {
            "source": "params",
            "name": "polygon",
            "params": {"d": d, "prime_power": bool(options.get("prime_power"))},
        }
        return CommandResult(descriptor, results, summary)
