"""
Exact counting certificates for PRCF-badness.

Under a PRCF coloring, take S = paths of the designated order, R = rainbow
paths in S and T = S \\ R. Unique extension makes every path lie on exactly one
girth cycle, and each girth cycle repeats a color on two non-adjacent edges,
which forces ``|T|/|S| >= lower``. Counting rainbow paths edge by edge gives
``|T|/|S| <= upper``. A graph with ``upper < lower`` admits no PRCF coloring.

Everything here is exact (``fractions.Fraction`` and Python integers).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import StrEnum
from fractions import Fraction
from typing import Any, Sequence

from sympy import factorint

from rainbow.budget import Budget
from rainbow.census import (
    count_cycles,
    count_paths,
    cycles_through_vertex,
    path_order_for_girth,
    unique_extension,
)
from rainbow.coloring import (
    Outcome,
    PrcfVerdict,
    decide_non_thick,
    decide_prcf,
    few_colors_certificate,
)
from rainbow.errors import BudgetExceeded, CertificateError, CrossCheckError, GraphError
from rainbow.families import delete_vertex, hoffman_singleton
from rainbow.graph_core import Graph, StructureKind, classify, girth, is_connected

logger = logging.getLogger(__name__)

# Diameters for which thick generalized polygons exist.
FEIT_HIGMAN_DIAMETERS = frozenset({2, 3, 4, 6, 8})

# Published hexagon threshold, stated together with "r - 1 is a prime power".
HEXAGON_PUBLISHED_THRESHOLD = 90

OCTAGON_LOWER = Fraction(1, 8)
OCTAGON_PRINTED_LOWER = Fraction(1, 6)

THRESHOLD_SWEEP_LIMIT = 10**6

HOSI_PUBLISHED = {
    "paths": 6300,
    "cycles": 1260,
    "per_vertex": 126,
    "lower": 1134,
    "upper": 1050,
}


class Verdict(StrEnum):
    BAD = "bad"
    INCONCLUSIVE = "inconclusive"


class Provenance(StrEnum):
    MOORE_GIRTH5 = "moore-girth5"
    REGULAR_POLYGON = "regular-polygon"
    OCTAGON = "octagon"
    CONCRETE_GRAPH = "concrete-graph"


def _clamp(value: Fraction) -> Fraction:
    return min(Fraction(1), max(Fraction(0), value))


@dataclass(frozen=True)
class BoundCertificate:
    """Bounds ``lower <= |T|/|S| <= upper``; Bad exactly when they cross."""

    lower: Fraction
    upper: Fraction
    provenance: Provenance
    parameters: dict[str, Any] = field(default_factory=dict, compare=False)
    secondary_lower: Fraction | None = None

    def __post_init__(self):
        object.__setattr__(self, "lower", _clamp(Fraction(self.lower)))
        object.__setattr__(self, "upper", _clamp(Fraction(self.upper)))
        if self.secondary_lower is not None:
            object.__setattr__(self, "secondary_lower", _clamp(Fraction(self.secondary_lower)))

    @property
    def verdict(self) -> Verdict:
        return Verdict.BAD if self.upper < self.lower else Verdict.INCONCLUSIVE

    @property
    def secondary_verdict(self) -> Verdict | None:
        if self.secondary_lower is None:
            return None
        return Verdict.BAD if self.upper < self.secondary_lower else Verdict.INCONCLUSIVE


def product_bound(degrees: Sequence[int]) -> Fraction:
    """
    Upper bound on the non-rainbow share of paths whose j-th vertex has
    degree ``degrees[j-1]``: ``1 - prod_{j>=2} ((D_j - 1) - (j - 1)) / (D_j - 1)``.

    A path extended through vertex j has D_j - 1 continuations, and at least
    j - 1 of them reuse a color already on the path. Non-positive factors make
    the bound vacuous (1).
    """
    product = Fraction(1)
    for j, degree in enumerate(degrees[1:], start=2):
        choices = degree - 1
        if choices <= 0:
            raise CertificateError(f"Degree {degree} leaves no continuation at step {j}")
        keep = choices - (j - 1)
        if keep <= 0:
            return Fraction(1)
        product *= Fraction(keep, choices)
    return _clamp(1 - product)


def window_bound(g: int, k: int) -> Fraction:
    """
    Minimum, over pairs of non-adjacent edges of a g-cycle, of the number of
    k-vertex windows holding both edges, divided by g.
    """
    if not 3 <= k - 1 < g:
        raise CertificateError(f"window_bound needs 3 <= k-1 < g, got g={g}, k={k}")
    span = k - 1
    windows = [frozenset((start + i) % g for i in range(span)) for start in range(g)]
    best = None
    for a in range(g):
        for b in range(a + 2, g):
            if a == 0 and b == g - 1:
                continue  # edges 0 and g-1 share vertex 0
            hits = sum(1 for window in windows if a in window and b in window)
            best = hits if best is None else min(best, hits)
    return Fraction(best or 0, g)


def moore5_bounds(r: int) -> BoundCertificate:
    if r < 3:
        raise CertificateError(f"moore5_bounds needs r >= 3, got r={r}")
    return BoundCertificate(
        lower=window_bound(5, 4),
        upper=product_bound([r, r]),
        provenance=Provenance.MOORE_GIRTH5,
        parameters={"r": r},
    )


def _check_polygon_params(d: int, r: int) -> None:
    if d < 2:
        raise CertificateError(f"Polygon diameter must be at least 2, got d={d}")
    if r < 3:
        raise CertificateError(f"Polygon degree must be at least 3, got r={r}")


def polygon_bounds(d: int, r: int) -> BoundCertificate:
    """Regular generalized polygon of diameter d and degree r."""
    _check_polygon_params(d, r)
    if d not in FEIT_HIGMAN_DIAMETERS:
        logger.warning(
            "polygon_bounds: no thick generalized polygon has diameter %d (only %s)",
            d,
            sorted(FEIT_HIGMAN_DIAMETERS),
        )
    return BoundCertificate(
        lower=Fraction(1, d),
        upper=product_bound([r] * d),
        provenance=Provenance.REGULAR_POLYGON,
        parameters={"d": d, "r": r},
    )


def _octagon_degrees(q: int) -> list[int]:
    # Points have q + 1 lines, lines q^2 + 1 points; the path alternates.
    return [q * q + 1 if j % 2 else q + 1 for j in range(1, 9)]


def octagon_bounds(q: int) -> BoundCertificate:
    """Generalized octagon of order (q, q^2); reported under both 1/8 and 1/6."""
    if q < 2:
        raise CertificateError(f"octagon_bounds needs q >= 2, got q={q}")
    return BoundCertificate(
        lower=OCTAGON_LOWER,
        upper=product_bound(_octagon_degrees(q)),
        provenance=Provenance.OCTAGON,
        parameters={"q": q},
        secondary_lower=OCTAGON_PRINTED_LOWER,
    )


def is_prime_power(n: int) -> bool:
    return n >= 2 and len(factorint(n)) == 1


def find_threshold(
    d: int, require_prime_power: bool = False, limit: int = THRESHOLD_SWEEP_LIMIT
) -> int:
    """Smallest r >= 3 whose regular polygon bounds cross."""
    _check_polygon_params(d, 3)
    lower = Fraction(1, d)
    for r in range(3, limit + 1):
        if product_bound([r] * d) >= lower:
            continue
        if require_prime_power and not is_prime_power(r - 1):
            continue
        logger.debug("find_threshold: d=%d prime_power=%s -> r=%d", d, require_prime_power, r)
        return r
    raise CertificateError(f"No threshold for d={d} below r={limit}")


@dataclass(frozen=True)
class ThresholdReport:
    d: int
    unconstrained: int
    prime_power: int
    published: int | None
    agrees_with_published: bool | None


def threshold_report(d: int) -> ThresholdReport:
    unconstrained = find_threshold(d)
    prime_power = find_threshold(d, require_prime_power=True)
    published = HEXAGON_PUBLISHED_THRESHOLD if d == 6 else None
    agrees = None
    if published is not None:
        agrees = unconstrained == published
        if not agrees:
            logger.warning(
                "threshold_report: unconstrained hexagon threshold r=%d differs from the "
                "published r=%d; with r-1 a prime power the threshold is r=%d",
                unconstrained,
                published,
                prime_power,
            )
    return ThresholdReport(d, unconstrained, prime_power, published, agrees)


def octagon_threshold(lower: Fraction = OCTAGON_LOWER, max_exponent: int = 61) -> int:
    """Smallest odd power of two q with octagon upper bound below ``lower``."""
    for exponent in range(1, max_exponent + 1, 2):
        q = 2**exponent
        if product_bound(_octagon_degrees(q)) < lower:
            return q
    raise CertificateError(f"No octagon threshold below q=2^{max_exponent}")


@dataclass(frozen=True)
class OctagonThresholdReport:
    q_for_one_eighth: int
    q_for_one_sixth: int


def octagon_threshold_report() -> OctagonThresholdReport:
    return OctagonThresholdReport(
        q_for_one_eighth=octagon_threshold(OCTAGON_LOWER),
        q_for_one_sixth=octagon_threshold(OCTAGON_PRINTED_LOWER),
    )


@dataclass(frozen=True)
class OrderFormulas:
    moore_style: int
    bipartite_style: int


def order_formulas(r: int, d: int) -> OrderFormulas:
    if r < 3 or d < 2:
        raise CertificateError(f"order_formulas needs r >= 3 and d >= 2, got r={r}, d={d}")
    return OrderFormulas(
        moore_style=1 + sum(r * (r - 1) ** i for i in range(d)),
        bipartite_style=2 * sum((r - 1) ** i for i in range(d)),
    )


def _degree_sequence(g: Graph, structure) -> list[int]:
    d = structure.diameter
    if structure.regular_degree is not None:
        return [structure.regular_degree] * d

    if structure.kind is not StructureKind.GENERALIZED_POLYGON or structure.bipartition is None:
        raise CertificateError("Irregular graphs are only supported as semiregular polygons")
    degree_a, degree_b = (
        {g.degree(v) for v in part} for part in structure.bipartition
    )
    if len(degree_a) != 1 or len(degree_b) != 1:
        raise CertificateError("Each side of the bipartition must be regular")
    if d % 2:
        raise CertificateError(f"Semiregular certificates need an even diameter, got d={d}")
    small, large = sorted((degree_a.pop(), degree_b.pop()))
    return [large if j % 2 else small for j in range(1, d + 1)]


def concrete_certificate(
    g: Graph, budget: Budget | None = None, workers: int = 1
) -> BoundCertificate:
    """
    Run the whole argument on a concrete Moore graph or generalized polygon.

    Structural failures raise CertificateError; an overrun census raises
    BudgetExceeded.
    """
    try:
        structure = classify(g)
    except GraphError as exc:
        raise CertificateError(str(exc)) from exc
    if structure.kind is StructureKind.NEITHER:
        raise CertificateError("Graph is neither a Moore graph nor a generalized polygon")
    if structure.diameter < 2:
        raise CertificateError("Certificates need diameter at least 2")

    g_len = structure.girth
    k = path_order_for_girth(g_len)
    degrees = _degree_sequence(g, structure)
    extension = unique_extension(g, k, g_len, budget, workers)
    if extension != (1, 1):
        raise CertificateError(
            f"Paths on {k} vertices lie on between {extension[0]} and {extension[1]} "
            f"{g_len}-cycles; unique extension fails"
        )

    certificate = BoundCertificate(
        lower=window_bound(g_len, k),
        upper=product_bound(degrees),
        provenance=Provenance.CONCRETE_GRAPH,
        parameters={
            "structure": structure.describe(),
            "n": g.n,
            "m": g.m,
            "girth": g_len,
            "diameter": structure.diameter,
            "k": k,
            "degrees": sorted(structure.degree_set),
        },
    )
    logger.info(
        "concrete_certificate: %s lower=%s upper=%s -> %s",
        structure.describe(),
        certificate.lower,
        certificate.upper,
        certificate.verdict,
    )
    return certificate


@dataclass(frozen=True)
class NoncriticalityNumbers:
    paths: int
    cycles: int
    per_vertex: int
    lower: int
    upper: int

    @property
    def contradiction(self) -> bool:
        return self.lower > self.upper


def hosi_noncriticality_numbers(
    budget: Budget | None = None, workers: int = 1
) -> NoncriticalityNumbers:
    """
    Recompute the counts showing that deleting a vertex of the Hoffman-Singleton
    graph leaves it PRCF-bad: the surviving 5-cycles force more non-rainbow
    paths than a sixth of all paths allows.
    """
    g = hoffman_singleton()
    paths = count_paths(g, 4, budget, workers)
    cycles = count_cycles(g, 5, budget, workers)
    per_vertex, remainder = divmod(5 * cycles, g.n)
    if remainder:
        raise CrossCheckError(f"5 * {cycles} cycles do not spread evenly over {g.n} vertices")
    through = cycles_through_vertex(g, 0, 5, budget)
    if through != per_vertex:
        raise CrossCheckError(f"Vertex 0 lies on {through} 5-cycles, expected {per_vertex}")
    lower = cycles - per_vertex
    surviving = count_cycles(delete_vertex(g, 0), 5, budget, workers)
    if surviving != lower:
        raise CrossCheckError(f"G - v has {surviving} 5-cycles, expected {lower}")
    upper = Fraction(paths, 6)
    if upper.denominator != 1:
        raise CrossCheckError(f"{paths} paths are not divisible by 6")

    numbers = NoncriticalityNumbers(paths, cycles, per_vertex, lower, int(upper))
    for key, published in HOSI_PUBLISHED.items():
        value = getattr(numbers, key)
        if value != published:
            raise CrossCheckError(f"hosi {key}: recomputed {value}, published {published}")
    logger.info("hosi_noncriticality_numbers: %s", numbers)
    return numbers


def certified_verdict(
    g: Graph, budget: Budget | None = None, workers: int = 1
) -> PrcfVerdict:
    """
    Cheapest sound route to a verdict: few colors, then a counting
    certificate, then the non-thick structure theorem, then search.
    """
    budget = budget or Budget()
    if girth(g) is not None:
        verdict = few_colors_certificate(g)
        if verdict is not None:
            return verdict

    structure = None
    if g.n >= 3 and is_connected(g):
        structure = classify(g)

    if structure is not None and structure.kind is not StructureKind.NEITHER:
        try:
            certificate = concrete_certificate(g, budget, workers)
        except CertificateError as exc:
            logger.info("certified_verdict: no certificate (%s)", exc)
        except BudgetExceeded as exc:
            return PrcfVerdict(Outcome.UNKNOWN, evidence="budget", detail=str(exc), nodes=exc.nodes)
        else:
            if certificate.verdict is Verdict.BAD:
                return PrcfVerdict(
                    Outcome.BAD,
                    evidence="certificate",
                    detail=f"|T|/|S| >= {certificate.lower} > {certificate.upper}",
                    certificate=certificate,
                )

        if structure.kind is StructureKind.GENERALIZED_POLYGON and not structure.thick:
            return decide_non_thick(g, budget, workers)

    return decide_prcf(g, budget, workers)
