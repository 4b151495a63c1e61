"""
Exhaustive generation of graph complex bases.

Every graph is isomorphic to one whose cycles carry consecutive half-edge
labels, so a basis in degree E is found by running over multisets of vertex
shapes of total valency 2E and over all perfect matchings of the 2E
half-edges, then canonicalizing and deduplicating. Defects are bounded by
the (g, n) filter, or by ``RIBBON_DEFECT_LIMIT`` without one.
"""
import logging
from dataclasses import dataclass
from functools import partial
from itertools import permutations, product
from typing import Iterator, List, Optional, Tuple

from django.conf import settings
from sympy.combinatorics import Permutation
from sympy.utilities.iterables import multiset_partitions, partitions

from core import ComplexKind
from core.utils import parallel_map, perfect_matchings
from graphs.canonical import canonical_form
from graphs.structures import StableRibbonGraph, Vertex
from graphs.utils import belongs_to, is_connected, total_g_n
from graphs.validators import is_valid_graph

logger = logging.getLogger(__name__)

# (cycle lengths in non-increasing order, genus defect, boundary defect)
Shape = Tuple[Tuple[int, ...], int, int]


@dataclass(frozen=True)
class GraphFilter:
    kind: str = ComplexKind.SRGC
    genus: Optional[int] = None
    marked: Optional[int] = None
    connected: bool = False
    defect_limit: Optional[int] = None

    @property
    def limit(self) -> int:
        return settings.RIBBON_DEFECT_LIMIT if self.defect_limit is None else self.defect_limit

    @property
    def genus_bound(self) -> int:
        if self.kind == ComplexKind.RGC:
            return 0
        return self.genus if self.genus is not None else self.limit

    @property
    def boundary_bound(self) -> int:
        if self.kind != ComplexKind.SRGC:
            return 0
        # every component has at least one perimeter
        return self.marked - 1 if self.marked is not None else self.limit

    @property
    def is_bounded(self) -> bool:
        return self.genus is not None and self.marked is not None

    @property
    def top_degree(self) -> Optional[int]:
        """Largest edge count of a connected graph of type (g, n)."""
        if not self.is_bounded:
            return None
        return 6 * self.genus - 6 + 3 * self.marked

    def accepts(self, graph: StableRibbonGraph) -> bool:
        if not is_valid_graph(graph) or not belongs_to(graph, self.kind):
            return False
        if self.connected and not is_connected(graph):
            return False
        if sum(vertex.genus for vertex in graph.vertices) > self.genus_bound:
            return False
        if sum(vertex.boundary for vertex in graph.vertices) > self.boundary_bound:
            return False
        genus, marked = total_g_n(graph)
        if self.genus is not None and genus != self.genus:
            return False
        if self.marked is not None and marked != self.marked:
            return False
        return True


def cycle_partitions(valency: int) -> List[Tuple[int, ...]]:
    result = []
    for parts in partitions(valency):
        result.append(tuple(sorted((part for part, count in parts.items() for _ in range(count)), reverse=True)))
    return sorted(result, reverse=True)


def vertex_shapes(valency: int, graph_filter: GraphFilter) -> List[Shape]:
    if graph_filter.kind == ComplexKind.RGC:
        return [((valency,), 0, 0)] if valency >= 3 else []
    shapes = []
    for lengths in cycle_partitions(valency):
        for genus in range(graph_filter.genus_bound + 1):
            for boundary in range(graph_filter.boundary_bound + 1):
                if len(lengths) == 1 and genus == 0 and boundary == 0 and valency < 3:
                    continue
                shapes.append((lengths, genus, boundary))
    return shapes


def scaffolds(edge_count: int, graph_filter: GraphFilter) -> Iterator[Tuple[Shape, ...]]:
    """Multisets of vertex shapes with total valency 2E and defects within the filter's bounds."""
    total = 2 * edge_count
    shapes = [shape for valency in range(1, total + 1) for shape in vertex_shapes(valency, graph_filter)]

    def extend(start, chosen, valency, genus, boundary):
        if valency == total:
            yield tuple(chosen)
            return
        for index in range(start, len(shapes)):
            lengths, shape_genus, shape_boundary = shapes[index]
            if (
                valency + sum(lengths) > total
                or genus + shape_genus > graph_filter.genus_bound
                or boundary + shape_boundary > graph_filter.boundary_bound
            ):
                continue
            chosen.append(shapes[index])
            yield from extend(index, chosen, valency + sum(lengths), genus + shape_genus, boundary + shape_boundary)
            chosen.pop()

    yield from extend(0, [], 0, 0, 0)


def scaffold_vertices(scaffold: Tuple[Shape, ...]) -> Tuple[Vertex, ...]:
    vertices = []
    label = 0
    for lengths, genus, boundary in scaffold:
        cycles = []
        for length in lengths:
            cycles.append(tuple(range(label, label + length)))
            label += length
        vertices.append(Vertex(cycles=tuple(cycles), genus=genus, boundary=boundary))
    return tuple(vertices)


def classes_for_scaffold(scaffold: Tuple[Shape, ...], graph_filter: GraphFilter, include_zero: bool = False) -> List[StableRibbonGraph]:
    vertices = scaffold_vertices(scaffold)
    total = sum(vertex.valency for vertex in vertices)
    found = set()
    for matching in perfect_matchings(range(total)):
        graph = StableRibbonGraph(edges=matching, vertices=vertices)
        if not graph_filter.accepts(graph):
            continue
        graph_class = canonical_form(graph)
        if include_zero or not graph_class.is_zero:
            found.add(graph_class.graph)
    return list(found)


def enumerate_graphs(
    edge_count: int,
    graph_filter: Optional[GraphFilter] = None,
    workers: Optional[int] = None,
    include_zero: bool = False,
) -> List[StableRibbonGraph]:
    """
    One canonical representative per isomorphism class with ``edge_count`` edges.

    Classes with an orientation-reversing automorphism are zero in the
    complex and are left out unless ``include_zero`` is set.
    """
    if edge_count < 1:
        raise ValueError(f"Edge count must be positive, got {edge_count}")
    graph_filter = graph_filter or GraphFilter()
    # resolve the settings-backed bound before handing the filter to worker processes
    graph_filter = GraphFilter(
        kind=graph_filter.kind,
        genus=graph_filter.genus,
        marked=graph_filter.marked,
        connected=graph_filter.connected,
        defect_limit=graph_filter.limit,
    )
    workers = settings.RIBBON_WORKERS if workers is None else workers
    shards = list(scaffolds(edge_count, graph_filter))
    found = set()
    for classes in parallel_map(partial(classes_for_scaffold, graph_filter=graph_filter, include_zero=include_zero), shards, workers):
        found.update(classes)
    basis = sorted(found)
    logger.info(
        "Enumerated %d classes with %d edges (%s, g=%s, n=%s, connected=%s) from %d scaffolds",
        len(basis), edge_count, graph_filter.kind, graph_filter.genus, graph_filter.marked,
        graph_filter.connected, len(shards),
    )
    return basis


# ==================== naive oracle ====================

def _defect_assignments(count: int, genus_bound: int, boundary_bound: int) -> Iterator[Tuple[Tuple[int, int], ...]]:
    if not count:
        yield ()
        return
    for genus, boundary in product(range(genus_bound + 1), range(boundary_bound + 1)):
        for rest in _defect_assignments(count - 1, genus_bound - genus, boundary_bound - boundary):
            yield ((genus, boundary),) + rest


def naive_enumerate(edge_count: int, graph_filter: Optional[GraphFilter] = None) -> List[StableRibbonGraph]:
    """
    Generate-all-and-deduplicate oracle.

    σ1 is fixed to (0 1)(2 3)...; every permutation of the half-edges is
    tried as σ0, its cycles are grouped into vertices in every way, and
    every defect assignment within the bounds is tried.
    """
    graph_filter = graph_filter or GraphFilter()
    size = 2 * edge_count
    edges = tuple((2 * index, 2 * index + 1) for index in range(edge_count))
    found = set()
    for images in permutations(range(size)):
        cycles = [tuple(cycle) for cycle in Permutation(list(images)).full_cyclic_form]
        if graph_filter.kind == ComplexKind.RGC:
            groupings = [[[index] for index in range(len(cycles))]]
        else:
            groupings = multiset_partitions(list(range(len(cycles))))
        for grouping in groupings:
            for defects in _defect_assignments(len(grouping), graph_filter.genus_bound, graph_filter.boundary_bound):
                vertices = tuple(
                    Vertex(cycles=tuple(cycles[index] for index in block), genus=genus, boundary=boundary)
                    for block, (genus, boundary) in zip(grouping, defects)
                )
                graph = StableRibbonGraph(edges=edges, vertices=vertices)
                if not graph_filter.accepts(graph):
                    continue
                graph_class = canonical_form(graph)
                if not graph_class.is_zero:
                    found.add(graph_class.graph)
    return sorted(found)
