from django.core.management.base import CommandError

from rainbow.certificates import (
    concrete_certificate,
    hosi_noncriticality_numbers,
    moore5_bounds,
    octagon_bounds,
    order_formulas,
    polygon_bounds,
)
from rainbow.management.base import CommandResult, RainbowCommand
from rainbow.schemas import certificate_schema, noncriticality_schema, order_formulas_schema

PARAM_KINDS = {
    "polygon": ("d", "r"),
    "moore": ("r",),
    "octagon": ("q",),
    "noncriticality": (),
}


def parse_params(tokens: list[str]) -> tuple[str, dict[str, int]]:
    """``["octagon", "q=128"]`` -> ``("octagon", {"q": 128})``; the kind defaults to polygon."""
    kind = "polygon"
    values: dict[str, int] = {}
    for token in tokens:
        if "=" not in token:
            kind = token.strip().lower()
            continue
        key, _, raw = token.partition("=")
        try:
            values[key.strip().lower()] = int(raw)
        except ValueError:
            raise CommandError(f"Parameter {token!r} needs an integer value", returncode=1)
    if kind not in PARAM_KINDS:
        raise CommandError(
            f"Unknown certificate kind {kind!r}; expected one of {', '.join(PARAM_KINDS)}",
            returncode=1,
        )
    missing = [key for key in PARAM_KINDS[kind] if key not in values]
    if missing:
        raise CommandError(f"{kind} certificate needs {', '.join(missing)}", returncode=1)
    return kind, values


class Command(RainbowCommand):
    help = (
        "Produce a counting certificate: from a concrete graph (--family/--input) or "
        "from parameters (--params d=6 r=90 | moore r=7 | octagon q=128 | noncriticality)."
    )
    command_name = "certify"
    graph_arguments = "optional"

    def add_command_arguments(self, parser):
        parser.add_argument(
            "--params",
            nargs="+",
            metavar="TOKEN",
            help="Parameter certificate: an optional kind followed by key=value pairs.",
        )

    def execute_command(self, options, budget, workers):
        params = options.get("params")
        if params and self.has_graph(options):
            raise CommandError("Use either a graph or --params, not both", returncode=1)
        if not params:
            return self._concrete(options, budget, workers)

        kind, values = parse_params(params)
        descriptor = {"source": "params", "name": kind, "params": values}
        if kind == "noncriticality":
            numbers = hosi_noncriticality_numbers(budget, workers)
            summary = [
                f"Paths P4:           {numbers.paths}",
                f"5-cycles:           {numbers.cycles}",
                f"Through a vertex:   {numbers.per_vertex}",
                f"Forced non-rainbow: {numbers.lower} > {numbers.upper} allowed",
            ]
            return CommandResult(descriptor, noncriticality_schema(numbers), summary)

        if kind == "moore":
            certificate = moore5_bounds(values["r"])
        elif kind == "octagon":
            certificate = octagon_bounds(values["q"])
        else:
            certificate = polygon_bounds(values["d"], values["r"])

        results = {"certificate": certificate_schema(certificate)}
        if kind == "polygon":
            formulas = order_formulas(values["r"], values["d"])
            results["order_formulas"] = order_formulas_schema(values["r"], values["d"], formulas)
        return CommandResult(descriptor, results, self._summary(certificate))

    def _concrete(self, options, budget, workers):
        loaded = self.load_graph(options)
        certificate = concrete_certificate(loaded.graph, budget, workers)
        summary = [f"Graph:   {loaded.descriptor.name}"] + self._summary(certificate)
        return CommandResult(
            loaded.descriptor, {"certificate": certificate_schema(certificate)}, summary
        )

    def _summary(self, certificate):
        lines = [
            f"Bounds:  {certificate.lower} <= |T|/|S| <= {certificate.upper}",
            f"Verdict: {certificate.verdict.value}",
        ]
        if certificate.secondary_lower is not None:
            lines.append(
                f"Under {certificate.secondary_lower}: {certificate.secondary_verdict.value}"
            )
        return lines
