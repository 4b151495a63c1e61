"""Brute-force isomorphism oracle for small graphs."""
import logging
from itertools import permutations
from typing import Dict, Iterable, List

from sympy.combinatorics import Permutation

from core.utils import CheckReport
from graphs.canonical import canonical_form
from graphs.structures import StableRibbonGraph

logger = logging.getLogger(__name__)


def _preserves_structure(first: StableRibbonGraph, second: StableRibbonGraph, mapping: Dict[int, int]) -> bool:
    for half_edge, image in mapping.items():
        if mapping[first.sigma1[half_edge]] != second.sigma1[image]:
            return False
        if mapping[first.sigma0[half_edge]] != second.sigma0[image]:
            return False
    vertex_map = {}
    for half_edge, image in mapping.items():
        source, target = first.vertex_of[half_edge], second.vertex_of[image]
        if vertex_map.setdefault(source, target) != target:
            return False
    if len(set(vertex_map.values())) != len(vertex_map):
        return False
    return all(
        (first.vertices[source].genus, first.vertices[source].boundary)
        == (second.vertices[target].genus, second.vertices[target].boundary)
        for source, target in vertex_map.items()
    )


def brute_force_isomorphisms(first: StableRibbonGraph, second: StableRibbonGraph) -> List[Dict[int, int]]:
    """Every half-edge bijection carrying ``first`` onto ``second``."""
    if (first.edge_count, len(first.vertices), first.cycle_count) != (second.edge_count, len(second.vertices), second.cycle_count):
        return []
    half_edges = list(range(first.half_edge_count))
    found = []
    for images in permutations(half_edges):
        mapping = dict(zip(half_edges, images))
        if _preserves_structure(first, second, mapping):
            found.append(mapping)
    return found


def edge_permutation_parity(first: StableRibbonGraph, second: StableRibbonGraph, mapping: Dict[int, int]) -> int:
    """Parity of the orientation change induced by an isomorphism."""
    image = [second.edge_index(mapping[half_edge]) for half_edge, _ in first.edges]
    return Permutation(image).parity() if image else 0


def brute_force_automorphisms(graph: StableRibbonGraph) -> List[Dict[int, int]]:
    return brute_force_isomorphisms(graph, graph)


def brute_force_zero_flag(graph: StableRibbonGraph) -> bool:
    return any(edge_permutation_parity(graph, graph, mapping) for mapping in brute_force_automorphisms(graph))


def check_canonical_forms(graphs: Iterable[StableRibbonGraph]) -> CheckReport:
    """Canonical forms agree with brute force on isomorphism, automorphisms, zero flags and signs."""
    report = CheckReport('canonical-forms')
    graphs = list(graphs)
    for graph in graphs:
        graph_class = canonical_form(graph)
        label = str(graph)
        report.record(f'automorphisms {label}', graph_class.automorphism_count == len(brute_force_automorphisms(graph)))
        report.record(f'zero-flag {label}', graph_class.is_zero == brute_force_zero_flag(graph))
        report.record(f'idempotent {label}', canonical_form(graph_class.graph).graph == graph_class.graph)
        isomorphisms = brute_force_isomorphisms(graph, graph_class.graph)
        report.record(f'isomorphic {label}', bool(isomorphisms))
        if isomorphisms and not graph_class.is_zero:
            parity = edge_permutation_parity(graph, graph_class.graph, isomorphisms[0])
            report.record(f'sign {label}', graph_class.sign == (-1 if parity else 1))
    for index, first in enumerate(graphs):
        for second in graphs[index + 1:]:
            same = canonical_form(first).encoding == canonical_form(second).encoding
            report.record(f'classes {first} ; {second}', same == bool(brute_force_isomorphisms(first, second)))
    logger.info(report.summary())
    return report
