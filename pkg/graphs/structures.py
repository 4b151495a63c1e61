"""
Stable ribbon graphs.

A graph is stored as its edges in orientation order plus a tuple of
vertices. Each vertex lists its cycles (cyclically ordered half-edges) and
carries a genus defect and a boundary defect. Half-edges are the integers
``0 .. 2E - 1``.
"""
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, Tuple

from core.utils import LinearCombination


@dataclass(frozen=True, order=True)
class Vertex:
    cycles: Tuple[Tuple[int, ...], ...]
    genus: int = 0
    boundary: int = 0

    @property
    def half_edges(self) -> Tuple[int, ...]:
        return tuple(half_edge for cycle in self.cycles for half_edge in cycle)

    @property
    def valency(self) -> int:
        return sum(len(cycle) for cycle in self.cycles)

    @property
    def is_undecorated(self) -> bool:
        return self.genus == 0 and self.boundary == 0

    def invariant(self):
        """Data preserved by every isomorphism of graphs."""
        return (
            self.genus,
            self.boundary,
            self.valency,
            len(self.cycles),
            tuple(sorted(len(cycle) for cycle in self.cycles)),
        )


@dataclass(frozen=True, order=True)
class StableRibbonGraph:
    """
    Half-edge combinatorics of a stable ribbon graph.

    ``edges`` lists the pairs of σ1 in orientation order; swapping the two
    half-edges of one pair does not change the graph.
    """

    edges: Tuple[Tuple[int, int], ...]
    vertices: Tuple[Vertex, ...] = field(default_factory=tuple)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def half_edge_count(self) -> int:
        return 2 * len(self.edges)

    @property
    def cycle_count(self) -> int:
        return sum(len(vertex.cycles) for vertex in self.vertices)

    @property
    def is_empty(self) -> bool:
        return not self.edges and not self.vertices

    @cached_property
    def sigma1(self) -> Dict[int, int]:
        pairing = {}
        for first, second in self.edges:
            pairing[first] = second
            pairing[second] = first
        return pairing

    @cached_property
    def sigma0(self) -> Dict[int, int]:
        """Successor of every half-edge in its cycle."""
        successor = {}
        for vertex in self.vertices:
            for cycle in vertex.cycles:
                for position, half_edge in enumerate(cycle):
                    successor[half_edge] = cycle[(position + 1) % len(cycle)]
        return successor

    @cached_property
    def vertex_of(self) -> Dict[int, int]:
        return {
            half_edge: index
            for index, vertex in enumerate(self.vertices)
            for half_edge in vertex.half_edges
        }

    @cached_property
    def cycle_of(self) -> Dict[int, Tuple[int, int]]:
        """Half-edge -> (vertex index, cycle index)."""
        return {
            half_edge: (vertex_index, cycle_index)
            for vertex_index, vertex in enumerate(self.vertices)
            for cycle_index, cycle in enumerate(vertex.cycles)
            for half_edge in cycle
        }

    def edge_index(self, half_edge: int) -> int:
        for index, pair in enumerate(self.edges):
            if half_edge in pair:
                return index
        raise KeyError(half_edge)

    def __str__(self):
        from graphs.serializers import format_graph
        return format_graph(self)


EMPTY_GRAPH = StableRibbonGraph((), ())


@dataclass(frozen=True)
class GraphClass:
    """
    Isomorphism class of an oriented graph.

    ``graph`` is the canonical representative with its canonical orientation,
    ``sign`` compares the input orientation with it, and ``is_zero`` marks
    graphs with an orientation-reversing automorphism.
    """

    graph: StableRibbonGraph
    sign: int
    is_zero: bool
    automorphism_count: int
    encoding: bytes

    @property
    def digest(self) -> str:
        import hashlib
        return hashlib.sha1(self.encoding).hexdigest()[:12]


class GraphChain(LinearCombination):
    """Rational combination of canonical oriented graphs."""

    @classmethod
    def normalize_key(cls, key):
        from graphs.canonical import canonical_form

        graph_class = canonical_form(key)
        if graph_class.is_zero:
            return None
        return graph_class.graph, graph_class.sign

    @staticmethod
    def sort_key(key):
        return key.edge_count, key

    def degrees(self):
        return sorted({graph.edge_count for graph in self.keys()})

    def __str__(self):
        from graphs.serializers import format_chain
        return format_chain(self)
