"""
Edge contraction Γ ↦ Γ/e and the boundary operator.

Three cases, depending on where the two half-edges h, h' of e sit:

* different vertices: the vertices merge, their defects add up, and the
  two cycles coalesce into the arc of c after h followed by the arc of c'
  after h'. Two singleton cycles vanish instead and the boundary defect
  grows by one.
* one vertex, different cycles: the cycles coalesce the same way and the
  genus defect grows by one; two singleton cycles vanish and both defects
  grow by one.
* one cycle c = (h, A, h', B): c splits into A and B. If one arc is empty
  c is replaced by the other and the boundary defect grows by one; if both
  are empty c disappears and the boundary defect grows by two.

A contraction that leaves a vertex with no half-edges is impossible and the
edge contributes nothing to the boundary. Γ/e inherits the remaining edges
in their induced order, with sign (-1)^i for the 0-based position i of e.
"""
import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple

from core import ComplexKind
from core.exceptions import EdgeNotFoundError
from graphs import ContractionCase
from graphs.structures import GraphChain, StableRibbonGraph, Vertex
from graphs.utils import belongs_to, compress

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ContractionOutcome:
    case: str
    graph: Optional[StableRibbonGraph] = None
    sign: int = 0

    @property
    def is_contractible(self) -> bool:
        return self.graph is not None


def _arc_after(cycle: Tuple[int, ...], half_edge: int) -> Tuple[int, ...]:
    position = cycle.index(half_edge)
    return cycle[position + 1:] + cycle[:position]


def _vertex(cycles: List[Tuple[int, ...]], genus: int, boundary: int) -> Optional[Vertex]:
    cycles = [cycle for cycle in cycles if cycle]
    if not cycles:
        return None
    return Vertex(cycles=tuple(cycles), genus=genus, boundary=boundary)


def _join_vertices(first: Vertex, first_cycle: int, second: Vertex, second_cycle: int, h: int, partner: int) -> Optional[Vertex]:
    left = first.cycles[first_cycle]
    right = second.cycles[second_cycle]
    rest = [cycle for index, cycle in enumerate(first.cycles) if index != first_cycle]
    rest += [cycle for index, cycle in enumerate(second.cycles) if index != second_cycle]
    genus = first.genus + second.genus
    boundary = first.boundary + second.boundary
    if len(left) == 1 and len(right) == 1:
        return _vertex(rest, genus, boundary + 1)
    return _vertex([_arc_after(left, h) + _arc_after(right, partner)] + rest, genus, boundary)


def _join_cycles(vertex: Vertex, first_cycle: int, second_cycle: int, h: int, partner: int) -> Optional[Vertex]:
    left = vertex.cycles[first_cycle]
    right = vertex.cycles[second_cycle]
    rest = [cycle for index, cycle in enumerate(vertex.cycles) if index not in (first_cycle, second_cycle)]
    if len(left) == 1 and len(right) == 1:
        return _vertex(rest, vertex.genus + 1, vertex.boundary + 1)
    return _vertex([_arc_after(left, h) + _arc_after(right, partner)] + rest, vertex.genus + 1, vertex.boundary)


def _split_cycle(vertex: Vertex, cycle_index: int, h: int, partner: int) -> Optional[Vertex]:
    cycle = vertex.cycles[cycle_index]
    arc = _arc_after(cycle, h)
    split = arc.index(partner)
    first, second = arc[:split], arc[split + 1:]
    rest = [other for index, other in enumerate(vertex.cycles) if index != cycle_index]
    boundary = vertex.boundary + (not first) + (not second)
    # the split cycles take the place of c
    return _vertex(rest[:cycle_index] + [first, second] + rest[cycle_index:], vertex.genus, boundary)


def contract_edge(graph: StableRibbonGraph, edge: int) -> ContractionOutcome:
    """Contract the edge at position ``edge`` of the orientation order."""
    if not 0 <= edge < graph.edge_count:
        raise EdgeNotFoundError(f"Edge {edge} is not an edge of a graph with {graph.edge_count} edges")
    h, partner = graph.edges[edge]
    (vertex_index, cycle_index), (other_vertex, other_cycle) = graph.cycle_of[h], graph.cycle_of[partner]
    vertex = graph.vertices[vertex_index]
    vertices = list(graph.vertices)

    if vertex_index != other_vertex:
        case = ContractionCase.JOIN_VERTICES
        merged = _join_vertices(vertex, cycle_index, graph.vertices[other_vertex], other_cycle, h, partner)
        vertices[vertex_index] = merged
        del vertices[other_vertex]
    elif cycle_index != other_cycle:
        case = ContractionCase.JOIN_CYCLES
        merged = _join_cycles(vertex, cycle_index, other_cycle, h, partner)
        vertices[vertex_index] = merged
    else:
        case = ContractionCase.SPLIT_CYCLE
        merged = _split_cycle(vertex, cycle_index, h, partner)
        vertices[vertex_index] = merged

    if merged is None:
        logger.debug("Edge %s of %s cannot be contracted (%s)", edge, graph, case)
        return ContractionOutcome(case=case)

    edges = graph.edges[:edge] + graph.edges[edge + 1:]
    contracted = compress(StableRibbonGraph(edges, tuple(vertices)))
    return ContractionOutcome(case=case, graph=contracted, sign=-1 if edge % 2 else 1)


def graph_boundary(graph: StableRibbonGraph) -> GraphChain:
    """∂Γ as a chain; graphs with a single edge have zero boundary."""
    result = GraphChain()
    if graph.edge_count <= 1:
        return result
    for edge in range(graph.edge_count):
        outcome = contract_edge(graph, edge)
        if outcome.is_contractible:
            result.add_term(outcome.graph, outcome.sign)
    return result


def boundary(chain: GraphChain) -> GraphChain:
    result = GraphChain()
    for graph, value in chain.items():
        result = result + graph_boundary(graph).scale(value)
    return result


def project(chain: GraphChain, kind: str) -> GraphChain:
    return GraphChain([(graph, value) for graph, value in chain.items() if belongs_to(graph, kind)])


def project_krgc(chain: GraphChain) -> GraphChain:
    """Drop every graph with a nonzero boundary defect."""
    return project(chain, ComplexKind.KRGC)


def project_rgc(chain: GraphChain) -> GraphChain:
    """Keep only ribbon graphs: undecorated vertices with a single cycle."""
    return project(chain, ComplexKind.RGC)
