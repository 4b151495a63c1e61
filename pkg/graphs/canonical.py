"""
Canonical labeling of stable ribbon graphs.

A labeling is produced by a walk: start at a half-edge, label its cycle
along σ0, then the remaining cycles of the vertex in some order and
rotation, and keep following σ1 from the labeled half-edges in label order
to reach new vertices. Every choice point is branched over, and the
labeling with the least code is canonical. Starts are restricted to the
half-edges with the least isomorphism invariant.

The labelings reaching the least code are exactly the canonical labeling
composed with the automorphisms, which gives the automorphism count and
the zero flag for free.
"""
import logging
from collections import Counter
from functools import lru_cache
from itertools import permutations, product
from math import factorial
from typing import Dict, Iterator, List, Tuple

from sympy.combinatorics import Permutation

from graphs.structures import GraphClass, StableRibbonGraph, Vertex
from graphs.utils import component_vertex_sets, induced_subgraph

logger = logging.getLogger(__name__)


def _rotations(cycle: Tuple[int, ...]) -> List[Tuple[int, ...]]:
    return [cycle[start:] + cycle[:start] for start in range(len(cycle))]


def _vertex_arrangements(graph: StableRibbonGraph, vertex_index: int, entry: int) -> Iterator[List[int]]:
    """Orders in which a walk entering at ``entry`` may label the half-edges of a vertex."""
    vertex = graph.vertices[vertex_index]
    _, entry_cycle_index = graph.cycle_of[entry]
    entry_cycle = vertex.cycles[entry_cycle_index]
    position = entry_cycle.index(entry)
    head = list(entry_cycle[position:] + entry_cycle[:position])
    others = [cycle for index, cycle in enumerate(vertex.cycles) if index != entry_cycle_index]
    for ordering in permutations(others):
        lengths = [len(cycle) for cycle in ordering]
        if lengths != sorted(lengths):
            continue
        for rotated in product(*(_rotations(cycle) for cycle in ordering)):
            yield head + [half_edge for cycle in rotated for half_edge in cycle]


def _walk(graph, order, visited, cursor) -> Iterator[Tuple[List[int], List[int]]]:
    while cursor < len(order):
        partner = graph.sigma1[order[cursor]]
        if partner not in order:
            vertex_index = graph.vertex_of[partner]
            for arrangement in _vertex_arrangements(graph, vertex_index, partner):
                yield from _walk(graph, order + arrangement, visited + [vertex_index], cursor + 1)
            return
        cursor += 1
    yield order, visited


def _labelings(graph: StableRibbonGraph) -> Iterator[Tuple[List[int], List[int]]]:
    """All walks of a connected graph from the admissible starts."""
    def start_invariant(half_edge):
        vertex_index, cycle_index = graph.cycle_of[half_edge]
        vertex = graph.vertices[vertex_index]
        return vertex.invariant(), len(vertex.cycles[cycle_index])

    half_edges = sorted(graph.sigma1)
    least = min(start_invariant(half_edge) for half_edge in half_edges)
    for start in half_edges:
        if start_invariant(start) != least:
            continue
        vertex_index = graph.vertex_of[start]
        for arrangement in _vertex_arrangements(graph, vertex_index, start):
            yield from _walk(graph, arrangement, [vertex_index], 0)


def _code(graph: StableRibbonGraph, order: List[int], visited: List[int]):
    label = {half_edge: position for position, half_edge in enumerate(order)}
    vertex_label = {vertex_index: position for position, vertex_index in enumerate(visited)}
    incidence = tuple(
        (label[graph.sigma1[half_edge]], label[graph.sigma0[half_edge]], vertex_label[graph.vertex_of[half_edge]])
        for half_edge in order
    )
    defects = tuple((graph.vertices[index].genus, graph.vertices[index].boundary) for index in visited)
    return incidence, defects


def _edge_parity(graph: StableRibbonGraph, label: Dict[int, int]) -> int:
    """Parity of the map from the input edge order to the canonical edge order."""
    canonical = sorted(min(label[first], label[second]) for first, second in graph.edges)
    position = {low: index for index, low in enumerate(canonical)}
    image = [position[min(label[first], label[second])] for first, second in graph.edges]
    return Permutation(image).parity() if image else 0


def _canonical_component(graph: StableRibbonGraph):
    """Least code, one labeling achieving it, the number of such labelings and whether their parities disagree."""
    best = None
    best_labeling = None
    count = 0
    parities = set()
    for order, visited in _labelings(graph):
        code = _code(graph, order, visited)
        if best is None or code < best:
            best, best_labeling, count = code, (order, visited), 0
            parities = set()
        if code == best:
            count += 1
            parities.add(_edge_parity(graph, {half_edge: position for position, half_edge in enumerate(order)}))
    return best, best_labeling, count, len(parities) > 1


def _build(code) -> Tuple[Tuple[Tuple[int, int], ...], List[Vertex]]:
    """The labeled graph described by a component code."""
    incidence, defects = code
    edges = sorted({(min(label, partner), max(label, partner)) for label, (partner, _, _) in enumerate(incidence)})
    cycles_by_vertex: Dict[int, List[Tuple[int, ...]]] = {}
    seen = set()
    for label, (_, successor, vertex_label) in enumerate(incidence):
        if label in seen:
            continue
        cycle = [label]
        seen.add(label)
        current = successor
        while current != label:
            cycle.append(current)
            seen.add(current)
            current = incidence[current][1]
        cycles_by_vertex.setdefault(vertex_label, []).append(tuple(cycle))
    vertices = [
        Vertex(cycles=tuple(sorted(cycles_by_vertex[index])), genus=genus, boundary=boundary)
        for index, (genus, boundary) in enumerate(defects)
    ]
    return tuple(edges), vertices


@lru_cache(maxsize=65536)
def canonical_form(graph: StableRibbonGraph) -> GraphClass:
    """Canonical representative, orientation sign, zero flag and automorphism count."""
    components = []
    for group in component_vertex_sets(graph):
        component = induced_subgraph(graph, group)
        code, (order, _), count, reverses = _canonical_component(component)
        old_labels = sorted(half_edge for index in group for half_edge in graph.vertices[index].half_edges)
        # component half-edge i is old_labels[i] in the input graph
        components.append((code, [old_labels[half_edge] for half_edge in order], count, reverses, component.edge_count))
    components.sort(key=lambda item: item[0])

    label: Dict[int, int] = {}
    edges: List[Tuple[int, int]] = []
    vertices: List[Vertex] = []
    automorphisms = 1
    is_zero = False
    offset = 0
    for code, order, count, reverses, edge_count in components:
        component_edges, component_vertices = _build(code)
        edges.extend((first + offset, second + offset) for first, second in component_edges)
        vertices.extend(
            Vertex(
                cycles=tuple(tuple(half_edge + offset for half_edge in cycle) for cycle in vertex.cycles),
                genus=vertex.genus,
                boundary=vertex.boundary,
            )
            for vertex in component_vertices
        )
        label.update({half_edge: position + offset for position, half_edge in enumerate(order)})
        automorphisms *= count
        is_zero = is_zero or reverses
        offset += 2 * edge_count

    for code, multiplicity in Counter(item[0] for item in components).items():
        automorphisms *= factorial(multiplicity)
        edge_count = len(code[0]) // 2
        # swapping two copies permutes edges by edge_count transpositions
        if multiplicity > 1 and edge_count % 2:
            is_zero = True

    canonical = StableRibbonGraph(tuple(edges), tuple(vertices))
    sign = -1 if _edge_parity(graph, label) else 1
    from graphs.serializers import format_graph
    return GraphClass(
        graph=canonical,
        sign=sign,
        is_zero=is_zero,
        automorphism_count=automorphisms,
        encoding=format_graph(canonical).encode(),
    )


def automorphism_count(graph: StableRibbonGraph) -> int:
    return canonical_form(graph).automorphism_count


def are_isomorphic(first: StableRibbonGraph, second: StableRibbonGraph) -> bool:
    return canonical_form(first).encoding == canonical_form(second).encoding
