import logging
from typing import Dict, Iterable, List, Tuple

from sympy.combinatorics import Permutation

from core import ComplexKind
from core.exceptions import MalformedGraphError
from graphs.structures import EMPTY_GRAPH, StableRibbonGraph, Vertex

logger = logging.getLogger(__name__)


# ==================== permutations ====================

def sigma_permutations(graph: StableRibbonGraph) -> Tuple[Permutation, Permutation]:
    size = graph.half_edge_count
    sigma0 = Permutation([graph.sigma0[half_edge] for half_edge in range(size)], size=size)
    sigma1 = Permutation([graph.sigma1[half_edge] for half_edge in range(size)], size=size)
    return sigma0, sigma1


def sigma_infinity(graph: StableRibbonGraph) -> Permutation:
    """σ∞ applies σ1 first and then σ0⁻¹."""
    sigma0, sigma1 = sigma_permutations(graph)
    # sympy composes left to right: (p * q)(h) = q(p(h))
    return sigma1 * (~sigma0)


def perimeters(graph: StableRibbonGraph) -> List[List[int]]:
    if not graph.edges:
        return []
    return sigma_infinity(graph).full_cyclic_form


def perimeter_count(graph: StableRibbonGraph) -> int:
    if not graph.edges:
        return 0
    return sigma_infinity(graph).cycles


def recover_g_n(graph: StableRibbonGraph) -> Tuple[int, int]:
    """
    Genus and number of marked points of a connected graph:
    n = n_p + Σ n(v) and g = 1 - |V| + (|E| + |C| - n_p) / 2 + Σ g(v).
    """
    n_p = perimeter_count(graph)
    twice = graph.edge_count + graph.cycle_count - n_p
    if twice % 2:
        raise MalformedGraphError(f"|E| + |C| - n_p = {twice} is odd for {graph}")
    genus = 1 - len(graph.vertices) + twice // 2 + sum(vertex.genus for vertex in graph.vertices)
    marked = n_p + sum(vertex.boundary for vertex in graph.vertices)
    if genus < 0:
        raise MalformedGraphError(f"Negative genus {genus} recovered from {graph}")
    if 2 - 2 * genus - marked >= 0:
        raise MalformedGraphError(f"Unstable type (g, n) = ({genus}, {marked}) recovered from {graph}")
    return genus, marked


def total_g_n(graph: StableRibbonGraph) -> Tuple[int, int]:
    """Sums of genus and marked points over the connected components."""
    genus = marked = 0
    for component in connected_components(graph):
        component_genus, component_marked = recover_g_n(component)
        genus += component_genus
        marked += component_marked
    return genus, marked


# ==================== relabeling and components ====================

def relabel(graph: StableRibbonGraph, mapping: Dict[int, int]) -> StableRibbonGraph:
    """Rename half-edges; the orientation order of the edges is kept."""
    return StableRibbonGraph(
        edges=tuple((mapping[first], mapping[second]) for first, second in graph.edges),
        vertices=tuple(
            Vertex(
                cycles=tuple(tuple(mapping[half_edge] for half_edge in cycle) for cycle in vertex.cycles),
                genus=vertex.genus,
                boundary=vertex.boundary,
            )
            for vertex in graph.vertices
        ),
    )


def compress(graph: StableRibbonGraph) -> StableRibbonGraph:
    """Relabel the half-edges in use to 0..2E-1, keeping their relative order."""
    used = sorted(half_edge for vertex in graph.vertices for half_edge in vertex.half_edges)
    return relabel(graph, {half_edge: position for position, half_edge in enumerate(used)})


def component_vertex_sets(graph: StableRibbonGraph) -> List[List[int]]:
    """Vertex indices of each connected component, ordered by their first vertex."""
    parent = list(range(len(graph.vertices)))

    def find(index):
        while parent[index] != index:
            parent[index] = parent[parent[index]]
            index = parent[index]
        return index

    for first, second in graph.edges:
        left, right = find(graph.vertex_of[first]), find(graph.vertex_of[second])
        if left != right:
            parent[max(left, right)] = min(left, right)

    groups: Dict[int, List[int]] = {}
    for index in range(len(graph.vertices)):
        groups.setdefault(find(index), []).append(index)
    return sorted(groups.values())


def induced_subgraph(graph: StableRibbonGraph, vertex_indices: Iterable[int]) -> StableRibbonGraph:
    keep = set(vertex_indices)
    edges = tuple(pair for pair in graph.edges if graph.vertex_of[pair[0]] in keep)
    vertices = tuple(vertex for index, vertex in enumerate(graph.vertices) if index in keep)
    return compress(StableRibbonGraph(edges, vertices))


def connected_components(graph: StableRibbonGraph) -> List[StableRibbonGraph]:
    return [induced_subgraph(graph, group) for group in component_vertex_sets(graph)]


def is_connected(graph: StableRibbonGraph) -> bool:
    return len(component_vertex_sets(graph)) == 1


def disjoint_union(*graphs: StableRibbonGraph) -> StableRibbonGraph:
    """Disjoint union with the concatenated orientation; the empty graph is the unit."""
    edges: List[Tuple[int, int]] = []
    vertices: List[Vertex] = []
    shift = 0
    for graph in graphs:
        mapping = {half_edge: half_edge + shift for half_edge in range(graph.half_edge_count)}
        shifted = relabel(graph, mapping)
        edges.extend(shifted.edges)
        vertices.extend(shifted.vertices)
        shift += graph.half_edge_count
    if not edges and not vertices:
        return EMPTY_GRAPH
    return StableRibbonGraph(tuple(edges), tuple(vertices))


# ==================== complex membership ====================

def belongs_to(graph: StableRibbonGraph, kind: str) -> bool:
    if kind == ComplexKind.SRGC:
        return True
    if kind == ComplexKind.KRGC:
        return all(vertex.boundary == 0 for vertex in graph.vertices)
    if kind == ComplexKind.RGC:
        return all(vertex.is_undecorated and len(vertex.cycles) == 1 for vertex in graph.vertices)
    raise ValueError(f"Unknown complex: {kind}")
