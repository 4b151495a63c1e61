from collections import Counter
from typing import Optional

from django.core.exceptions import ValidationError

from graphs import ValidationCode
from graphs.structures import StableRibbonGraph


def validate_graph(graph: StableRibbonGraph) -> StableRibbonGraph:
    """
    Check the defining conditions of a stable ribbon graph.
    Raises ValidationError with the code of the first violated condition.
    """
    half_edges = set(range(graph.half_edge_count))

    paired = [half_edge for pair in graph.edges for half_edge in pair]
    if any(first == second for first, second in graph.edges) or set(paired) != half_edges or len(paired) != len(half_edges):
        raise ValidationError(
            f"Edges {list(graph.edges)} do not pair the half-edges 0..{graph.half_edge_count - 1}.",
            code=ValidationCode.PAIRING,
        )

    if len({frozenset(pair) for pair in graph.edges}) != len(graph.edges):
        raise ValidationError(
            "The orientation lists an edge more than once.",
            code=ValidationCode.ORIENTATION,
        )

    in_cycles = Counter(half_edge for vertex in graph.vertices for half_edge in vertex.half_edges)
    if set(in_cycles) != half_edges or any(count > 1 for count in in_cycles.values()):
        raise ValidationError(
            "Every half-edge must lie in exactly one cycle.",
            code=ValidationCode.CYCLES,
        )

    for index, vertex in enumerate(graph.vertices):
        if any(not cycle for cycle in vertex.cycles):
            raise ValidationError(
                f"Vertex {index} has an empty cycle.",
                code=ValidationCode.CYCLES,
            )
        if not vertex.valency:
            raise ValidationError(
                f"Vertex {index} has no half-edges.",
                code=ValidationCode.EMPTY_VERTEX,
            )
        if vertex.genus < 0 or vertex.boundary < 0:
            raise ValidationError(
                f"Vertex {index} has a negative defect.",
                code=ValidationCode.STABILITY,
            )
        if len(vertex.cycles) == 1 and vertex.is_undecorated and vertex.valency < 3:
            raise ValidationError(
                f"Vertex {index} has a single cycle, no defects and valency {vertex.valency} < 3.",
                code=ValidationCode.STABILITY,
            )

    return graph


def validation_report(graph: StableRibbonGraph) -> Optional[ValidationError]:
    """The first violated condition, or None for a valid graph."""
    try:
        validate_graph(graph)
    except ValidationError as error:
        return error
    return None


def is_valid_graph(graph: StableRibbonGraph) -> bool:
    return validation_report(graph) is None
