"""
The Wick map I from decorated tensors to stable ribbon graphs, and back.

For a tensor with 2M slots, I(x) = Σ_c ω_c(x) Γ_c over the chord diagrams c
of the slots. Γ_c keeps the vertex and cycle structure of x, takes the slot
positions as half-edges and the pairs of c as edges, ordered by their first
slot, and carries the γ and ν exponents of each vertex as its genus and
boundary defects. ω_c is the product of the pairings of the paired slots
times the Koszul sign of reading the slots in pair order. Tensors with an
odd number of slots map to zero, and so do diagrams whose Γ_c is unstable.

Every operator below consumes a pair of dual letters with the Koszul sign of
moving them to the front, which is also how contracting the first edge of a
graph acts, so I intertwines the differential D with ∂.
"""
import logging
from fractions import Fraction
from typing import Iterator, List, Sequence, Tuple

from sympy.combinatorics import Permutation

from core.exceptions import NotSpecializedError
from core.utils import perfect_matchings, sign_of_parity
from graphs.structures import GraphChain, StableRibbonGraph, Vertex
from graphs.validators import is_valid_graph
from lambda_ce.structures import CEChain
from lambda_ce.utils import deformed_differential, extended_bracket
from wick.structures import ChordDiagram, DecoratedTensor, TensorChain, TensorVertex
from words.structures import Letter, pairing, x, xi

logger = logging.getLogger(__name__)


# ==================== chord diagrams ====================

def chord_diagrams(k: int) -> List[ChordDiagram]:
    """All (2k - 1)!! chord diagrams on 2k slots."""
    if k < 1:
        raise ValueError(f"Chord diagrams need at least one chord, got {k}")
    return [ChordDiagram(pairs=matching) for matching in perfect_matchings(range(2 * k))]


def koszul_sign(parities: Sequence[int], order: Sequence[int]) -> int:
    """Sign of reading slots of the given parities in ``order``: the parity of the induced permutation of odd slots."""
    odd = [position for position in order if parities[position]]
    if len(odd) < 2:
        return 1
    rank = {position: index for index, position in enumerate(sorted(odd))}
    return -1 if Permutation([rank[position] for position in odd]).parity() else 1


def omega_c(diagram: ChordDiagram, slots: Sequence[Letter]) -> Fraction:
    if len(slots) != 2 * diagram.size:
        raise ValueError(f"A diagram with {diagram.size} chords needs {2 * diagram.size} slots, got {len(slots)}")
    for first, second in diagram.pairs:
        if not pairing(slots[first], slots[second]):
            return Fraction(0)
    return Fraction(koszul_sign([letter.parity for letter in slots], diagram.slot_order()))


def _pairable_matchings(slots: Sequence[Letter], remaining: Tuple[int, ...]) -> Iterator[Tuple[Tuple[int, int], ...]]:
    # the chord diagrams with every pairing nonzero
    if not remaining:
        yield ()
        return
    first, rest = remaining[0], remaining[1:]
    for position, partner in enumerate(rest):
        if not pairing(slots[first], slots[partner]):
            continue
        for matching in _pairable_matchings(slots, rest[:position] + rest[position + 1:]):
            yield ((first, partner),) + matching


def diagram_graph(tensor: DecoratedTensor, diagram: ChordDiagram) -> StableRibbonGraph:
    """Γ_c: the slot scaffold of the tensor with the chords of c as edges."""
    vertices = []
    position = 0
    for vertex in tensor.vertices:
        cycles = []
        for cycle in vertex.cycles:
            cycles.append(tuple(range(position, position + len(cycle))))
            position += len(cycle)
        vertices.append(Vertex(cycles=tuple(cycles), genus=vertex.gamma, boundary=vertex.nu))
    return StableRibbonGraph(edges=diagram.pairs, vertices=tuple(vertices))


# ==================== Wick map ====================

def wick_map(tensor: DecoratedTensor) -> GraphChain:
    result = GraphChain()
    slots = tensor.slots
    if len(slots) % 2:
        return result
    for matching in _pairable_matchings(slots, tuple(range(len(slots)))):
        diagram = ChordDiagram(pairs=matching)
        graph = diagram_graph(tensor, diagram)
        if not is_valid_graph(graph):
            logger.debug("Dropping unstable diagram %s of %s", matching, tensor)
            continue
        result.add_term(graph, omega_c(diagram, slots))
    return result


def wick_map_chain(chain: TensorChain) -> GraphChain:
    result = GraphChain()
    for tensor, value in chain.items():
        result = result + wick_map(tensor).scale(value)
    return result


def x_gamma(graph: StableRibbonGraph) -> TensorChain:
    """
    The tensor x_Γ with I(x_Γ) = Γ.

    Edge k = (a, b) puts x_{k+1} on half-edge a and xi_{k+1} on half-edge b,
    so x_Γ lives over Q^{E|E}. The coefficient is the sign of the xi slots
    read in edge order.
    """
    letter_of = {}
    for k, (first, second) in enumerate(graph.edges):
        letter_of[first] = x(k + 1)
        letter_of[second] = xi(k + 1)
    tensor = DecoratedTensor(tuple(
        TensorVertex(
            cycles=tuple(tuple(letter_of[half_edge] for half_edge in cycle) for cycle in vertex.cycles),
            gamma=vertex.genus,
            nu=vertex.boundary,
        )
        for vertex in graph.vertices
    ))
    odd_edges = [letter.index - 1 for letter in tensor.slots if letter.is_odd]
    sign = -1 if len(odd_edges) > 1 and Permutation(odd_edges).parity() else 1
    return TensorChain.from_term(tensor, sign)


# ==================== products and specializations ====================

def tensor_product(first: TensorChain, second: TensorChain) -> TensorChain:
    result = TensorChain()
    for left, left_value in first.items():
        for right, right_value in second.items():
            result.add_term(DecoratedTensor(left.vertices + right.vertices), left_value * right_value)
    return result


def shift_indices(chain: TensorChain, offset: int) -> TensorChain:
    """Rename every letter index i to i + offset."""
    def shifted(tensor: DecoratedTensor) -> DecoratedTensor:
        return DecoratedTensor(tuple(
            TensorVertex(
                cycles=tuple(tuple(Letter(letter.parity, letter.index + offset) for letter in cycle) for cycle in vertex.cycles),
                gamma=vertex.gamma,
                nu=vertex.nu,
            )
            for vertex in tensor.vertices
        ))
    return TensorChain([(shifted(tensor), value) for tensor, value in chain.items()])


def specialize_tensor(chain: TensorChain, set_nu_zero: bool = False, set_gamma_zero: bool = False) -> TensorChain:
    result = TensorChain()
    for tensor, value in chain.items():
        if set_nu_zero and any(vertex.nu for vertex in tensor.vertices):
            continue
        if set_gamma_zero and any(vertex.gamma for vertex in tensor.vertices):
            continue
        result.add_term(tensor, value)
    return result


def project_tensor_to_g(chain: TensorChain) -> TensorChain:
    """π on every vertex: keep terms whose vertices are single words of length at least two."""
    result = TensorChain()
    for tensor, value in chain.items():
        for vertex in tensor.vertices:
            if vertex.gamma or vertex.nu:
                raise NotSpecializedError(f"Projection needs gamma = nu = 0, found [{vertex}]")
        if all(len(vertex.cycles) == 1 and len(vertex.cycles[0]) >= 2 for vertex in tensor.vertices):
            result.add_term(tensor, value)
    return result


# ==================== differential ====================

def vertex_chain(vertex: TensorVertex) -> CEChain:
    return CEChain.monomial(vertex.cycles, gamma=vertex.gamma, nu=vertex.nu)


def tensor_vertex(key) -> TensorVertex:
    gamma, nu, product = key
    return TensorVertex(cycles=tuple(word.letters for word in product.factors), gamma=gamma, nu=nu)


def tensor_differential(chain: TensorChain) -> TensorChain:
    """
    The differential of S(Λ) on vertex products:

        D(v_1..v_m) = Σ_i (-1)^{|v_1..v_{i-1}|} v_1..D(v_i)..v_m
                      + Σ_{i<j} (-1)^p {v_i, v_j} v_1..v̂_i..v̂_j..v_m

    with D = γδ + Δ inside a vertex and the extended bracket between two
    vertices; p is the Koszul sign of moving v_i and v_j to the front.
    """
    result = TensorChain()
    for tensor, value in chain.items():
        vertices = tensor.vertices
        parities = [vertex.parity for vertex in vertices]
        chains = [vertex_chain(vertex) for vertex in vertices]
        for i, single in enumerate(chains):
            sign = sign_of_parity(sum(parities[:i]))
            for key, coefficient in deformed_differential(single, check=False).items():
                replaced = vertices[:i] + (tensor_vertex(key),) + vertices[i + 1:]
                result.add_term(DecoratedTensor(replaced), sign * coefficient * value)
        for i in range(len(vertices)):
            for j in range(i + 1, len(vertices)):
                exponent = parities[i] * sum(parities[:i]) + parities[j] * (sum(parities[:j]) - parities[i])
                rest = tuple(vertex for index, vertex in enumerate(vertices) if index not in (i, j))
                for key, coefficient in extended_bracket(chains[i], chains[j]).items():
                    merged = DecoratedTensor((tensor_vertex(key),) + rest)
                    result.add_term(merged, sign_of_parity(exponent) * coefficient * value)
    return result
