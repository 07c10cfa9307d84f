"""
Report schemas rendered by the management commands.

Exact quantities stay exact: rationals are ``"p/q"`` strings and counts are
JSON integers of any size.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Optional

from ninja import Schema

from rainbow.budget import Budget
from rainbow.census import CensusReport
from rainbow.certificates import (
    BoundCertificate,
    NoncriticalityNumbers,
    OctagonThresholdReport,
    OrderFormulas,
    ThresholdReport,
)
from rainbow.coloring import EdgeColoring, PrcfVerdict
from rainbow.graph_core import Graph, StructureClass


def rational(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


class BudgetSchema(Schema):
    max_nodes: int
    max_seconds: Optional[float]
    cycle_cap: int
    workers: int


class GraphDescriptor(Schema):
    source: str
    name: str
    n: int
    m: int


class Report(Schema):
    command: str
    input: dict[str, Any]
    results: Any
    timing: Optional[float]
    budget: BudgetSchema


class AnalysisSchema(Schema):
    n: int
    m: int
    girth: Optional[int]
    diameter: Optional[int]
    degrees: list[int]
    bipartite: bool
    classification: str
    thick: Optional[bool]


class CensusSchema(Schema):
    k: int
    g: int
    path_count: int
    cycle_count: int
    extension_min: int
    extension_max: int
    unique_extension: bool
    covered_path_count: int
    coverage_ratio: str
    nodes: int


class ColoringSchema(Schema):
    method: str
    color_count: int
    colors: list[int]
    proper: bool
    rainbow_cycle: Optional[list[int]]
    verified: bool


class CertificateSchema(Schema):
    provenance: str
    lower: str
    upper: str
    verdict: str
    secondary_lower: Optional[str]
    secondary_verdict: Optional[str]
    parameters: dict[str, Any]


class VerdictSchema(Schema):
    outcome: str
    evidence: str
    detail: str
    nodes: int
    witness: Optional[ColoringSchema]
    certificate: Optional[CertificateSchema]


class ThresholdSchema(Schema):
    d: int
    unconstrained: int
    prime_power: int
    published: Optional[int]
    agrees_with_published: Optional[bool]


class OctagonThresholdSchema(Schema):
    q_for_one_eighth: int
    q_for_one_sixth: int


class OrderFormulasSchema(Schema):
    r: int
    d: int
    moore_style: int
    bipartite_style: int


class NoncriticalitySchema(Schema):
    paths: int
    cycles: int
    per_vertex: int
    lower: int
    upper: int
    contradiction: bool


def budget_schema(budget: Budget, workers: int) -> BudgetSchema:
    return BudgetSchema(**budget.as_dict(), workers=workers)


def graph_descriptor(source: str, name: str, g: Graph) -> GraphDescriptor:
    return GraphDescriptor(source=source, name=name, n=g.n, m=g.m)


def analysis_schema(g: Graph, structure: StructureClass | None, g_len, diam) -> AnalysisSchema:
    return AnalysisSchema(
        n=g.n,
        m=g.m,
        girth=g_len,
        diameter=diam,
        degrees=sorted(set(g.degrees)),
        bipartite=structure.is_bipartite if structure else False,
        classification=structure.describe() if structure else "unclassified",
        thick=structure.thick if structure else None,
    )


def census_schema(report: CensusReport) -> CensusSchema:
    return CensusSchema(
        k=report.k,
        g=report.g,
        path_count=report.path_count,
        cycle_count=report.cycle_count,
        extension_min=report.extension_min,
        extension_max=report.extension_max,
        unique_extension=report.extension_min == report.extension_max == 1,
        covered_path_count=report.covered_path_count,
        coverage_ratio=rational(report.coverage_ratio),
        nodes=report.nodes,
    )


def coloring_schema(
    method: str,
    coloring: EdgeColoring,
    proper: bool,
    rainbow_cycle: tuple[int, ...] | None,
) -> ColoringSchema:
    return ColoringSchema(
        method=method,
        color_count=coloring.count,
        colors=list(coloring.colors),
        proper=proper,
        rainbow_cycle=list(rainbow_cycle) if rainbow_cycle is not None else None,
        verified=proper and rainbow_cycle is None,
    )


def certificate_schema(certificate: BoundCertificate) -> CertificateSchema:
    secondary = certificate.secondary_lower
    return CertificateSchema(
        provenance=certificate.provenance.value,
        lower=rational(certificate.lower),
        upper=rational(certificate.upper),
        verdict=certificate.verdict.value,
        secondary_lower=rational(secondary) if secondary is not None else None,
        secondary_verdict=(
            certificate.secondary_verdict.value if secondary is not None else None
        ),
        parameters=certificate.parameters,
    )


def verdict_schema(verdict: PrcfVerdict, witness: ColoringSchema | None = None) -> VerdictSchema:
    certificate = verdict.certificate
    return VerdictSchema(
        outcome=verdict.outcome.value,
        evidence=verdict.evidence,
        detail=verdict.detail,
        nodes=verdict.nodes,
        witness=witness,
        certificate=certificate_schema(certificate) if certificate is not None else None,
    )


def threshold_schema(report: ThresholdReport) -> ThresholdSchema:
    return ThresholdSchema(
        d=report.d,
        unconstrained=report.unconstrained,
        prime_power=report.prime_power,
        published=report.published,
        agrees_with_published=report.agrees_with_published,
    )


def octagon_threshold_schema(report: OctagonThresholdReport) -> OctagonThresholdSchema:
    return OctagonThresholdSchema(
        q_for_one_eighth=report.q_for_one_eighth,
        q_for_one_sixth=report.q_for_one_sixth,
    )


def order_formulas_schema(r: int, d: int, formulas: OrderFormulas) -> OrderFormulasSchema:
    return OrderFormulasSchema(
        r=r, d=d, moore_style=formulas.moore_style, bipartite_style=formulas.bipartite_style
    )


def noncriticality_schema(numbers: NoncriticalityNumbers) -> NoncriticalitySchema:
    return NoncriticalitySchema(
        paths=numbers.paths,
        cycles=numbers.cycles,
        per_vertex=numbers.per_vertex,
        lower=numbers.lower,
        upper=numbers.upper,
        contradiction=numbers.contradiction,
    )
