"""
Graded slices of the graph complexes: bases, boundary matrices and ranks.

``C_k`` is spanned by the nonzero canonical graphs with k edges passing the
slice's filter, and ``∂_k: C_k -> C_{k-1}`` is stored as a sparse
``DomainMatrix`` over QQ with one column per basis graph of degree k.
"""
import logging
import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Tuple

from sympy import Matrix, Rational
from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from complexes import BASIS_FILE_TEMPLATE, MATRIX_FILE_TEMPLATE
from complexes.cache import cache_basis, get_cached_basis
from complexes.enumeration import GraphFilter, enumerate_graphs
from core.exceptions import IncompleteDegreeRange
from core.utils import format_rational
from graphs.canonical import canonical_form
from graphs.contraction import graph_boundary, project
from graphs.serializers import format_graph
from graphs.structures import GraphChain, GraphClass, StableRibbonGraph
from graphs.utils import connected_components, disjoint_union, total_g_n

logger = logging.getLogger(__name__)


@dataclass
class GradedComplexSlice:
    graph_filter: GraphFilter
    max_edges: int
    bases: Dict[int, List[StableRibbonGraph]] = field(default_factory=dict)
    matrices: Dict[int, DomainMatrix] = field(default_factory=dict)

    @property
    def kind(self) -> str:
        return self.graph_filter.kind

    @property
    def degrees(self) -> List[int]:
        return list(range(1, self.max_edges + 1))

    @property
    def is_complete(self) -> bool:
        """Whether every nonzero chain group of the complex lies in the slice."""
        top = self.graph_filter.top_degree
        return top is not None and self.max_edges >= top

    def dimension(self, degree: int) -> int:
        return len(self.bases.get(degree, []))

    def index(self, degree: int) -> Dict[StableRibbonGraph, int]:
        return {graph: position for position, graph in enumerate(self.bases.get(degree, []))}

    def describe(self) -> str:
        graph_filter = self.graph_filter
        return (
            f'{graph_filter.kind} g={graph_filter.genus} n={graph_filter.marked} '
            f'connected={graph_filter.connected} E<={self.max_edges}'
        )


def _to_domain(value: Fraction):
    return QQ(value.numerator, value.denominator)


def _entries(matrix: DomainMatrix) -> Dict[int, Dict[int, object]]:
    """Nonzero entries as {row: {column: value}}."""
    return dict(matrix.to_sparse().rep)


def boundary_matrix(source: List[StableRibbonGraph], target: List[StableRibbonGraph], kind: str) -> DomainMatrix:
    """Matrix of ∂ followed by the projection onto the complex, in the given bases."""
    rows = {graph: position for position, graph in enumerate(target)}
    entries: Dict[int, Dict[int, object]] = {}
    for column, graph in enumerate(source):
        for image, value in project(graph_boundary(graph), kind).items():
            if image not in rows:
                raise IncompleteDegreeRange(f"Boundary term {format_graph(image)} of {format_graph(graph)} is missing from the basis")
            entries.setdefault(rows[image], {})[column] = _to_domain(value)
    return DomainMatrix(entries, (len(target), len(source)), QQ)


def load_basis(edge_count: int, graph_filter: GraphFilter, use_cache: bool = True) -> List[StableRibbonGraph]:
    if use_cache:
        cached = get_cached_basis(edge_count, graph_filter)
        if cached is not None:
            return cached
    basis = enumerate_graphs(edge_count, graph_filter)
    if use_cache:
        cache_basis(edge_count, graph_filter, basis)
    return basis


def build_slice(graph_filter: GraphFilter, max_edges: int, use_cache: bool = True) -> GradedComplexSlice:
    if not graph_filter.is_bounded:
        # contractions raise defects, so only fixed (g, n) slices are closed under ∂
        raise IncompleteDegreeRange("A complex slice needs both a genus and a number of marked points")
    complex_slice = GradedComplexSlice(graph_filter=graph_filter, max_edges=max_edges)
    for degree in complex_slice.degrees:
        complex_slice.bases[degree] = load_basis(degree, graph_filter, use_cache=use_cache)
    for degree in complex_slice.degrees[1:]:
        complex_slice.matrices[degree] = boundary_matrix(
            complex_slice.bases[degree], complex_slice.bases[degree - 1], graph_filter.kind,
        )
    logger.info(
        "Built slice %s with dimensions %s",
        complex_slice.describe(), [complex_slice.dimension(degree) for degree in complex_slice.degrees],
    )
    return complex_slice


def permuted_slice(complex_slice: GradedComplexSlice) -> GradedComplexSlice:
    """The same slice with every basis listed in reverse order."""
    reordered = GradedComplexSlice(graph_filter=complex_slice.graph_filter, max_edges=complex_slice.max_edges)
    for degree in complex_slice.degrees:
        reordered.bases[degree] = list(reversed(complex_slice.bases[degree]))
    for degree in complex_slice.degrees[1:]:
        reordered.matrices[degree] = boundary_matrix(
            reordered.bases[degree], reordered.bases[degree - 1], complex_slice.kind,
        )
    return reordered


# ==================== ranks ====================

def sparse_rank(matrix: DomainMatrix) -> int:
    rows, columns = matrix.shape
    if not rows or not columns:
        return 0
    return matrix.rank()


def dense_rank(matrix: DomainMatrix) -> int:
    """Rank by dense elimination in sympy's Matrix."""
    rows, columns = matrix.shape
    if not rows or not columns:
        return 0
    dense = Matrix.zeros(rows, columns)
    for row, entries in _entries(matrix).items():
        for column, value in entries.items():
            dense[row, column] = Rational(int(QQ.numer(value)), int(QQ.denom(value)))
    return dense.rank()


def _rank(complex_slice: GradedComplexSlice, degree: int, dense: bool) -> int:
    matrix = complex_slice.matrices.get(degree)
    if matrix is None:
        return 0
    return dense_rank(matrix) if dense else sparse_rank(matrix)


def homology_ranks(complex_slice: GradedComplexSlice, dense: bool = False, allow_truncated: bool = False) -> List[Tuple[int, int]]:
    """
    (degree, betti) pairs, betti_k = dim C_k - rank ∂_k - rank ∂_{k+1}.

    Slices that do not reach the top degree of their (g, n) raise
    IncompleteDegreeRange unless ``allow_truncated`` is set, in which case the
    chain groups above ``max_edges`` are taken to be zero.
    """
    if not complex_slice.is_complete and not allow_truncated:
        raise IncompleteDegreeRange(
            f"Slice {complex_slice.describe()} stops below the top degree {complex_slice.graph_filter.top_degree}"
        )
    missing = [degree for degree in complex_slice.degrees if degree not in complex_slice.bases]
    missing += [degree for degree in complex_slice.degrees[1:] if degree not in complex_slice.matrices]
    if missing:
        raise IncompleteDegreeRange(f"Slice {complex_slice.describe()} has no data for degrees {sorted(set(missing))}")
    ranks = {degree: _rank(complex_slice, degree, dense) for degree in complex_slice.degrees}
    result = []
    for degree in complex_slice.degrees:
        betti = complex_slice.dimension(degree) - ranks[degree] - ranks.get(degree + 1, 0)
        result.append((degree, betti))
    return result


def euler_characteristic(complex_slice: GradedComplexSlice) -> int:
    return sum((-1) ** degree * complex_slice.dimension(degree) for degree in complex_slice.degrees)


def homology_euler_characteristic(ranks: Iterable[Tuple[int, int]]) -> int:
    return sum((-1) ** degree * betti for degree, betti in ranks)


def boundary_squares_to_zero(complex_slice: GradedComplexSlice) -> bool:
    for degree in complex_slice.degrees[2:]:
        if not all(complex_slice.dimension(step) for step in (degree, degree - 1, degree - 2)):
            continue
        composite = complex_slice.matrices[degree - 1].matmul(complex_slice.matrices[degree])
        if not composite.is_zero_matrix:
            return False
    return True


def emit_matrices(complex_slice: GradedComplexSlice, directory: str) -> List[str]:
    """
    Write bases and boundary matrices as text files.

    Basis files hold one graph record per line in basis order. Matrix files
    start with ``# rows cols`` followed by ``row col p/q`` triplets, 0-based.
    """
    os.makedirs(directory, exist_ok=True)
    graph_filter = complex_slice.graph_filter
    names = dict(complex=graph_filter.kind, genus=graph_filter.genus, marked=graph_filter.marked)
    written = []
    for degree in complex_slice.degrees:
        path = os.path.join(directory, BASIS_FILE_TEMPLATE.format(degree=degree, **names))
        with open(path, 'w') as handle:
            handle.writelines(format_graph(graph) + '\n' for graph in complex_slice.bases[degree])
        written.append(path)
    for degree, matrix in sorted(complex_slice.matrices.items()):
        path = os.path.join(directory, MATRIX_FILE_TEMPLATE.format(degree=degree, **names))
        rows, columns = matrix.shape
        with open(path, 'w') as handle:
            handle.write(f'# {rows} {columns}\n')
            for row, entries in sorted(_entries(matrix).items()):
                for column, value in sorted(entries.items()):
                    rational = Fraction(int(QQ.numer(value)), int(QQ.denom(value)))
                    handle.write(f'{row} {column} {format_rational(rational)}\n')
        written.append(path)
    logger.info("Wrote %d files for slice %s to %s", len(written), complex_slice.describe(), directory)
    return written


# ==================== Hopf structure ====================

def union_classes(first: GraphClass, second: GraphClass) -> GraphClass:
    """Class of the disjoint union, oriented by the first graph's edges followed by the second's."""
    return canonical_form(disjoint_union(first.graph, second.graph))


def multiply(first: GraphChain, second: GraphChain) -> GraphChain:
    result = GraphChain()
    for left, left_value in first.items():
        for right, right_value in second.items():
            result.add_term(disjoint_union(left, right), left_value * right_value)
    return result


def class_components(graph_class: GraphClass) -> List[GraphClass]:
    """Connected components of a class as classes, in canonical order."""
    return [canonical_form(component) for component in connected_components(graph_class.graph)]


def is_primitive(chain: GraphChain) -> bool:
    """Whether every term is a connected graph."""
    return all(len(connected_components(graph)) == 1 for graph in chain.keys())


def euler_table(max_edges: int, graph_filter: GraphFilter) -> List[Tuple[Tuple[int, int], Dict[int, int], int]]:
    """
    Cell counts per (g, n) and edge count, with Σ_E (-1)^E #C_E.

    Without a (g, n) filter the defect bound truncates the counts of types
    that need larger defects.
    """
    counts: Dict[Tuple[int, int], Dict[int, int]] = {}
    for degree in range(1, max_edges + 1):
        for graph in load_basis(degree, graph_filter):
            per_degree = counts.setdefault(total_g_n(graph), {})
            per_degree[degree] = per_degree.get(degree, 0) + 1
    return [
        (g_n, per_degree, sum((-1) ** degree * count for degree, count in per_degree.items()))
        for g_n, per_degree in sorted(counts.items())
    ]
