"""Verification of the Wick map on the x_Γ basis of graphs up to a number of edges."""
import logging
import random
from itertools import product
from typing import Iterable, List, Optional

from django.conf import settings
from sympy import factorial2
from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from complexes.checks import generators
from complexes.enumeration import GraphFilter, enumerate_graphs
from complexes.utils import multiply, sparse_rank
from core.utils import CheckReport, koszul_sort, parallel_map
from graphs.canonical import canonical_form
from graphs.contraction import boundary, project_krgc, project_rgc
from graphs.serializers import format_chain, format_graph
from graphs.structures import GraphChain, StableRibbonGraph
from graphs.utils import disjoint_union
from wick.structures import DecoratedTensor, TensorChain, TensorVertex
from wick.utils import (
    chord_diagrams,
    omega_c,
    project_tensor_to_g,
    shift_indices,
    specialize_tensor,
    tensor_differential,
    tensor_product,
    wick_map,
    wick_map_chain,
    x_gamma,
)
from words.structures import Letter, SymplecticSpace, pairing

logger = logging.getLogger(__name__)


def _label(graph: StableRibbonGraph) -> str:
    return canonical_form(graph).digest


def _discrepancy(left: GraphChain, right: GraphChain) -> str:
    difference = left - right
    return format_chain(difference).splitlines()[0] if difference else ''


# ==================== chord diagrams ====================

def check_chord_counts(max_chords: int = 6) -> CheckReport:
    """|C(k)| = (2k - 1)!! and every slot appears exactly once."""
    report = CheckReport('chord-diagrams')
    for k in range(1, max_chords + 1):
        diagrams = chord_diagrams(k)
        report.record(f'count k={k}', len(diagrams) == int(factorial2(2 * k - 1)), f'{len(diagrams)}')
        report.record(f'distinct k={k}', len(set(diagrams)) == len(diagrams))
    logger.info(report.summary())
    return report


def transposition_sign(parities: List[int], order: List[int]) -> int:
    """Koszul sign of a reordering by adjacent transpositions."""
    target = {position: index for index, position in enumerate(order)}
    _, sign, _ = koszul_sort(list(range(len(parities))), key=target.get, parity=lambda position: parities[position])
    return sign


def check_omega_signs(space: SymplecticSpace, max_chords: int = 2) -> CheckReport:
    """ω_c against products of pairings times the sign of sorting the slots by transpositions."""
    report = CheckReport('omega-signs')
    letters = space.generators()
    for k in range(1, max_chords + 1):
        diagrams = chord_diagrams(k)
        for slots in product(letters, repeat=2 * k):
            parities = [letter.parity for letter in slots]
            for diagram in diagrams:
                weight = 1
                for first, second in diagram.pairs:
                    weight *= pairing(slots[first], slots[second])
                expected = weight * transposition_sign(parities, list(diagram.slot_order())) if weight else 0
                report.record(f'{diagram.pairs} {slots}', omega_c(diagram, slots) == expected)
    logger.info(report.summary())
    return report


def random_odd_tensor(generator: random.Random, space: SymplecticSpace, max_slots: int = 7) -> DecoratedTensor:
    letters = space.generators()
    slot_count = generator.randrange(1, max_slots + 1, 2)
    slots = [generator.choice(letters) for _ in range(slot_count)]
    vertices = []
    while slots:
        cut = generator.randint(1, len(slots))
        vertices.append(TensorVertex(cycles=(tuple(slots[:cut]),), gamma=generator.randint(0, 1), nu=generator.randint(0, 1)))
        slots = slots[cut:]
    return DecoratedTensor(tuple(vertices))


def check_odd_vanishing(space: SymplecticSpace, samples: int = 50, seed: int = 0) -> CheckReport:
    """Tensors with an odd number of slots map to zero."""
    report = CheckReport('odd-vanishing')
    generator = random.Random(seed)
    for _ in range(samples):
        tensor = random_odd_tensor(generator, space)
        report.record(str(tensor), wick_map(tensor).is_zero())
    logger.info(report.summary())
    return report


# ==================== x_Γ basis ====================

def check_generator(graph: StableRibbonGraph) -> CheckReport:
    """Round trip, I∘D = ∂∘I and both projection squares on x_Γ."""
    label = _label(graph)
    report = CheckReport(f'chainmap {label}')
    tensor = x_gamma(graph)
    image = wick_map_chain(tensor)
    expected = GraphChain.from_term(graph)
    report.record(f'{label} round-trip', image == expected, _discrepancy(image, expected))

    differential = tensor_differential(tensor)
    left = wick_map_chain(differential)
    right = boundary(image)
    report.record(f'{label} chain-map', left == right, _discrepancy(left, right))

    for name, chain in (('x', tensor), ('Dx', differential)):
        krgc_left = wick_map_chain(specialize_tensor(chain, set_nu_zero=True))
        krgc_right = project_krgc(wick_map_chain(chain))
        report.record(f'{label} krgc-square {name}', krgc_left == krgc_right, _discrepancy(krgc_left, krgc_right))
        specialized = specialize_tensor(chain, set_nu_zero=True, set_gamma_zero=True)
        rgc_left = wick_map_chain(project_tensor_to_g(specialized))
        rgc_right = project_rgc(wick_map_chain(chain))
        report.record(f'{label} rgc-square {name}', rgc_left == rgc_right, _discrepancy(rgc_left, rgc_right))
    if report.passed:
        report.add_case(label, True, format_graph(graph))
    else:
        failed, detail = report.first_failure
        check = failed[len(label) + 1:]
        report.add_case(label, False, f'{check}: {detail}' if detail else check)
    return report


def check_chain_map(graphs: Iterable[StableRibbonGraph], workers: Optional[int] = None) -> CheckReport:
    workers = settings.RIBBON_WORKERS if workers is None else workers
    report = CheckReport('chainmap')
    for generator_report in parallel_map(check_generator, list(graphs), workers):
        report.merge(generator_report)
    logger.info(report.summary())
    return report


def check_hopf(graphs: List[StableRibbonGraph]) -> CheckReport:
    """x_{Γ1 ⊔ Γ2} = x_{Γ1} x_{Γ2} and I(x_{Γ1} x_{Γ2}) = I(x_{Γ1}) I(x_{Γ2})."""
    report = CheckReport('hopf')
    for first, second in product(graphs, repeat=2):
        label = f'{_label(first)} ; {_label(second)}'
        combined = tensor_product(x_gamma(first), shift_indices(x_gamma(second), first.edge_count))
        report.record(f'{label} tensor', x_gamma(disjoint_union(first, second)) == combined)
        left = wick_map_chain(combined)
        right = multiply(wick_map_chain(x_gamma(first)), wick_map_chain(x_gamma(second)))
        report.record(f'{label} product', left == right, _discrepancy(left, right))
    logger.info(report.summary())
    return report


def check_rank(max_edges: int, graph_filter: Optional[GraphFilter] = None) -> CheckReport:
    """The images of x_Γ span the graph basis in every degree."""
    graph_filter = graph_filter or GraphFilter()
    report = CheckReport('wick-rank')
    for edges in range(1, max_edges + 1):
        basis = enumerate_graphs(edges, graph_filter)
        rows = {graph: position for position, graph in enumerate(basis)}
        entries = {}
        outside = []
        for column, graph in enumerate(basis):
            for image, value in wick_map_chain(x_gamma(graph)).items():
                if image not in rows:
                    outside.append(image)
                    continue
                entries.setdefault(rows[image], {})[column] = QQ(value.numerator, value.denominator)
        matrix = DomainMatrix(entries, (len(basis), len(basis)), QQ)
        report.record(f'E={edges} inside basis', not outside)
        report.record(f'E={edges} rank', sparse_rank(matrix) == len(basis), f'rank {sparse_rank(matrix)} of {len(basis)}')
    logger.info(report.summary())
    return report


def run_chain_map_suite(max_edges: int) -> CheckReport:
    report = CheckReport('wick')
    report.merge(check_chord_counts())
    report.merge(check_omega_signs(SymplecticSpace(2)))
    report.merge(check_odd_vanishing(SymplecticSpace(2)))
    report.merge(check_chain_map(generators(max_edges)))
    report.merge(check_rank(max_edges))
    return report


def run_hopf_suite(max_edges: int) -> CheckReport:
    return check_hopf(generators(max_edges))
