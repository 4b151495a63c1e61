"""Exhaustive checks of the graph complexes on all generators up to a number of edges."""
import logging
from itertools import product
from typing import Iterable, List, Optional

from core import ComplexKind
from core.utils import CheckReport
from complexes.enumeration import GraphFilter, enumerate_graphs, naive_enumerate
from complexes.utils import (
    GradedComplexSlice,
    boundary_squares_to_zero,
    build_slice,
    euler_characteristic,
    homology_euler_characteristic,
    homology_ranks,
    multiply,
    permuted_slice,
)
from graphs.contraction import boundary, contract_edge, graph_boundary, project_krgc, project_rgc
from graphs.serializers import format_graph
from graphs.structures import GraphChain, StableRibbonGraph
from graphs.utils import total_g_n
from graphs.validators import validation_report

logger = logging.getLogger(__name__)


def generators(max_edges: int, graph_filter: Optional[GraphFilter] = None) -> List[StableRibbonGraph]:
    graph_filter = graph_filter or GraphFilter()
    return [graph for edges in range(1, max_edges + 1) for graph in enumerate_graphs(edges, graph_filter)]


def check_boundary_squared(graphs: Iterable[StableRibbonGraph]) -> CheckReport:
    """∂∂ = 0, validity of every contraction and preservation of (g, n)."""
    report = CheckReport('d2')
    for graph in graphs:
        label = format_graph(graph)
        report.record(f'd2 {label}', boundary(graph_boundary(graph)).is_zero())
        before = total_g_n(graph)
        for edge in range(graph.edge_count):
            outcome = contract_edge(graph, edge)
            if not outcome.is_contractible:
                continue
            error = validation_report(outcome.graph)
            report.record(f'valid {label} / {edge}', error is None, '' if error is None else error.messages[0])
            if error is None:
                report.record(f'(g,n) {label} / {edge}', total_g_n(outcome.graph) == before)
    logger.info(report.summary())
    return report


def check_projections(graphs: Iterable[StableRibbonGraph]) -> CheckReport:
    """Both projections commute with the boundary."""
    report = CheckReport('projections')
    for graph in graphs:
        label = format_graph(graph)
        chain = GraphChain.from_term(graph)
        for kind, projection in ((ComplexKind.KRGC, project_krgc), (ComplexKind.RGC, project_rgc)):
            left = projection(boundary(chain))
            right = projection(boundary(projection(chain)))
            report.record(f'{kind} {label}', left == right)
    logger.info(report.summary())
    return report


def check_enumeration(max_edges: int, graph_filter: Optional[GraphFilter] = None) -> CheckReport:
    """The enumerator finds exactly the classes of the naive oracle."""
    graph_filter = graph_filter or GraphFilter()
    report = CheckReport(f'enumeration-{graph_filter.kind}')
    for edges in range(1, max_edges + 1):
        found = set(enumerate_graphs(edges, graph_filter, workers=1))
        expected = set(naive_enumerate(edges, graph_filter))
        missing = sorted(format_graph(graph) for graph in expected - found)
        extra = sorted(format_graph(graph) for graph in found - expected)
        report.record(f'E={edges}', not missing and not extra, f'missing={missing[:1]} extra={extra[:1]}')
    logger.info(report.summary())
    return report


def check_slice(complex_slice: GradedComplexSlice) -> CheckReport:
    """Matrix ∂∂ = 0, sparse ranks against dense ranks, Euler identity and basis-order independence."""
    report = CheckReport(f'slice {complex_slice.describe()}')
    report.record('matrix d2', boundary_squares_to_zero(complex_slice))
    sparse = homology_ranks(complex_slice, allow_truncated=True)
    dense = homology_ranks(complex_slice, dense=True, allow_truncated=True)
    report.record('dense oracle', sparse == dense, f'{sparse} != {dense}')
    report.record('euler', homology_euler_characteristic(sparse) == euler_characteristic(complex_slice))
    report.record('basis order', homology_ranks(permuted_slice(complex_slice), allow_truncated=True) == sparse)
    graph_filter = complex_slice.graph_filter
    if graph_filter.is_bounded:
        for degree in complex_slice.degrees:
            for graph in complex_slice.bases[degree]:
                report.record(f'(g,n) {format_graph(graph)}', total_g_n(graph) == (graph_filter.genus, graph_filter.marked))
    logger.info(report.summary())
    return report


def check_hopf_boundary(graphs: List[StableRibbonGraph]) -> CheckReport:
    """∂(a ⊔ b) = ∂a ⊔ b + (-1)^{E(a)} a ⊔ ∂b."""
    report = CheckReport('hopf-boundary')
    for first, second in product(graphs, repeat=2):
        a, b = GraphChain.from_term(first), GraphChain.from_term(second)
        left = boundary(multiply(a, b))
        right = multiply(boundary(a), b) + multiply(a, boundary(b)).scale((-1) ** first.edge_count)
        report.record(f'{format_graph(first)} ; {format_graph(second)}', left == right)
    logger.info(report.summary())
    return report


# ==================== oracle suites ====================

SLICE_TYPES = ((0, 3), (0, 4), (0, 5), (1, 1), (1, 2), (2, 1))


def run_enumeration_suite(max_edges: int) -> CheckReport:
    report = CheckReport('enumeration')
    for kind, _ in ComplexKind.CHOICES:
        report.merge(check_enumeration(max_edges, GraphFilter(kind=kind)))
    return report


def run_homology_oracle_suite(max_edges: int, slice_types=SLICE_TYPES) -> CheckReport:
    """check_slice on every (complex, g, n) slice up to ``max_edges``."""
    report = CheckReport('homology-oracle')
    for (kind, _), (genus, marked) in product(ComplexKind.CHOICES, slice_types):
        complex_slice = build_slice(GraphFilter(kind=kind, genus=genus, marked=marked), max_edges)
        slice_report = check_slice(complex_slice)
        report.merge(slice_report)
        dimensions = ','.join(str(complex_slice.dimension(degree)) for degree in complex_slice.degrees)
        report.add_case(complex_slice.describe(), slice_report.passed, f'dims {dimensions}')
    return report
