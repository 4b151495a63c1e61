from fractions import Fraction
from unittest import mock

from django.test import SimpleTestCase

from complexes.checks import generators
from core.exceptions import NotSpecializedError
from graphs.canonical import canonical_form
from graphs.factories import LoopGraphFactory, SplitLoopGraphFactory, ThetaGraphFactory, TwoLoopGraphFactory
from graphs.structures import GraphChain, StableRibbonGraph, Vertex
from graphs.utils import disjoint_union
from wick.checks import (
    check_chain_map,
    check_chord_counts,
    check_generator,
    check_hopf,
    check_odd_vanishing,
    check_omega_signs,
    check_rank,
    transposition_sign,
)
from wick.factories import ChordDiagramFactory, DecoratedTensorFactory, TensorVertexFactory
from wick.structures import ChordDiagram, DecoratedTensor, TensorChain, TensorVertex
from wick.utils import (
    chord_diagrams,
    diagram_graph,
    koszul_sign,
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
from words.factories import SymplecticSpaceFactory
from words.structures import x, xi


def decorated_theta():
    return ThetaGraphFactory(vertices=(Vertex(cycles=((0, 1, 2),), genus=1), Vertex(cycles=((3, 5, 4),))))


def singleton_bridge():
    return StableRibbonGraph(edges=((0, 1),), vertices=(Vertex(cycles=((0,),), genus=1), Vertex(cycles=((1,),), boundary=1)))


# ==================== Chord diagrams ====================

class ChordDiagramTest(SimpleTestCase):
    """Test cases for chord diagrams and their signs."""

    def test_single_chord(self):
        """Test that two slots carry exactly one diagram."""
        self.assertEqual(chord_diagrams(1), [ChordDiagramFactory()])

    def test_three_chords(self):
        """Test that six slots carry 15 diagrams."""
        self.assertEqual(len(chord_diagrams(3)), 15)

    def test_every_slot_once(self):
        """Test that each diagram covers every slot exactly once."""
        for diagram in chord_diagrams(3):
            self.assertEqual(sorted(diagram.slot_order()), list(range(6)))

    def test_counts_are_double_factorials(self):
        """Test |C(k)| = (2k - 1)!! up to six chords."""
        report = check_chord_counts(6)
        self.assertTrue(report.passed, report.first_failure)

    def test_zero_chords_rejected(self):
        """Test that chord diagrams need a positive size."""
        with self.assertRaises(ValueError):
            chord_diagrams(0)

    def test_unnormalized_diagram_rejected(self):
        """Test that pairs must be sorted with i_t < j_t."""
        with self.assertRaises(ValueError):
            ChordDiagram(pairs=((1, 0),))
        with self.assertRaises(ValueError):
            ChordDiagram(pairs=((1, 3), (0, 2)))

    def test_omega_of_dual_pair(self):
        """Test ω = +1 on slots (x1, xi1) with the only diagram."""
        self.assertEqual(omega_c(ChordDiagramFactory(), (x(1), xi(1))), 1)

    def test_omega_of_even_pair(self):
        """Test that pairing two even letters vanishes."""
        self.assertEqual(omega_c(ChordDiagramFactory(), (x(1), x(2))), 0)

    def test_omega_crossing_sign(self):
        """Test that reading xi2 after xi1 costs a sign."""
        slots = (x(1), xi(2), xi(1), x(2))
        self.assertEqual(omega_c(ChordDiagram(pairs=((0, 2), (1, 3))), slots), -1)
        self.assertEqual(omega_c(ChordDiagram(pairs=((0, 3), (1, 2))), slots), 0)

    def test_omega_slot_count(self):
        """Test that the slot count must match the diagram."""
        with self.assertRaises(ValueError):
            omega_c(ChordDiagramFactory(), (x(1), xi(1), x(2), xi(2)))

    def test_koszul_sign_agrees_with_transpositions(self):
        """Test the permutation parity sign against adjacent transpositions."""
        parities = [1, 0, 1, 1]
        for order in ([0, 1, 2, 3], [2, 0, 3, 1], [3, 2, 1, 0], [1, 3, 0, 2]):
            self.assertEqual(koszul_sign(parities, order), transposition_sign(parities, order))

    def test_omega_against_sign_oracle(self):
        """Test ω_c on every 2- and 4-slot tensor over Q^{2|2}."""
        report = check_omega_signs(SymplecticSpaceFactory(), 2)
        self.assertTrue(report.passed, report.first_failure)


# ==================== Wick map ====================

class WickMapTest(SimpleTestCase):
    """Test cases for I and x_Γ."""

    def test_single_vertex_loop(self):
        """Test that x1.xi1 at a vertex with one ν is the loop graph."""
        self.assertEqual(wick_map(DecoratedTensorFactory()), GraphChain.from_term(LoopGraphFactory()))

    def test_unstable_diagram_vanishes(self):
        """Test that an undecorated bivalent vertex gives zero."""
        tensor = DecoratedTensorFactory(vertices=(TensorVertexFactory(nu=0),))
        self.assertTrue(wick_map(tensor).is_zero())

    def test_odd_slot_count_vanishes(self):
        """Test that three slots map to zero."""
        tensor = DecoratedTensor((TensorVertex(cycles=((x(1), xi(1), x(2)),), nu=1),))
        self.assertTrue(wick_map(tensor).is_zero())

    def test_random_odd_tensors_vanish(self):
        """Test the odd-slot vanishing on sampled tensors."""
        report = check_odd_vanishing(SymplecticSpaceFactory(), samples=30)
        self.assertTrue(report.passed, report.first_failure)

    def test_rotating_a_cycle_keeps_the_image(self):
        """Test that I respects the cyclic symmetry of words."""
        rotated = DecoratedTensor((TensorVertex(cycles=((xi(1), x(1)),), nu=1),))
        self.assertEqual(wick_map(rotated), wick_map(DecoratedTensorFactory()))

    def test_diagram_graph(self):
        """Test that Γ_c keeps the slot scaffold and the vertex defects."""
        graph = diagram_graph(DecoratedTensorFactory(), ChordDiagramFactory())
        self.assertEqual(graph, LoopGraphFactory())

    def test_x_gamma_two_loop(self):
        """Test that the two-loop graph decorates one cycle with four slots over Q^{2|2}."""
        chain = x_gamma(TwoLoopGraphFactory())
        ((tensor, value),) = chain.items()
        self.assertEqual(tensor, DecoratedTensor((TensorVertex(cycles=((x(1), x(2), xi(1), xi(2)),)),)))
        self.assertEqual(value, 1)
        self.assertEqual(tensor.dimension, 2)

    def test_x_gamma_sign(self):
        """Test that xi slots read against the edge order make the coefficient negative."""
        ((tensor, value),) = x_gamma(decorated_theta()).items()
        self.assertEqual([letter for letter in tensor.slots if letter.is_odd], [xi(1), xi(3), xi(2)])
        self.assertEqual(value, -1)

    def test_round_trip(self):
        """Test I(x_Γ) = Γ with coefficient +1."""
        for graph in (decorated_theta(), LoopGraphFactory(), SplitLoopGraphFactory(), singleton_bridge()):
            self.assertEqual(wick_map_chain(x_gamma(graph)), GraphChain.from_term(graph))

    def test_zero_class_round_trip(self):
        """Test that a graph with an odd automorphism maps to zero from both sides."""
        self.assertTrue(wick_map_chain(x_gamma(ThetaGraphFactory())).is_zero())

    def test_x_gamma_of_union(self):
        """Test x_{Γ1 ⊔ Γ2} = x_{Γ1} · x_{Γ2} with the second indices shifted."""
        first, second = decorated_theta(), singleton_bridge()
        expected = tensor_product(x_gamma(first), shift_indices(x_gamma(second), first.edge_count))
        self.assertEqual(x_gamma(disjoint_union(first, second)), expected)


# ==================== Differential ====================

class TensorDifferentialTest(SimpleTestCase):
    """Test cases for D on vertex products and the chain map identity."""

    def test_single_edge_has_no_differential(self):
        """Test that contracting the only edge empties the vertices."""
        self.assertTrue(wick_map_chain(tensor_differential(x_gamma(SplitLoopGraphFactory()))).is_zero())

    def test_bracket_between_vertices(self):
        """Test {v0, v1} on x1 at a genus vertex and xi1 at a boundary vertex."""
        tensor = TensorChain.from_term(DecoratedTensor((
            TensorVertex(cycles=((x(1), x(2)),), gamma=1),
            TensorVertex(cycles=((xi(1),),), nu=1),
        )))
        expected = TensorChain.from_term(DecoratedTensor((TensorVertex(cycles=((x(2),),), gamma=1, nu=1),)))
        self.assertEqual(tensor_differential(tensor), expected)

    def test_chain_map_on_decorated_theta(self):
        """Test round trip, I∘D = ∂∘I and the projection squares on one graph."""
        report = check_generator(decorated_theta())
        self.assertTrue(report.passed, report.first_failure)

    def test_chain_map_up_to_three_edges(self):
        """Test I∘D = ∂∘I on every generator with at most three edges."""
        report = check_chain_map(generators(3), workers=1)
        self.assertTrue(report.passed, report.first_failure)

    def test_one_case_per_generator(self):
        """Test that every generator leaves a PASS record keyed by its canonical digest."""
        graphs = generators(2)
        report = check_chain_map(graphs, workers=1)
        self.assertEqual([label for label, _, _ in report.cases], [canonical_form(graph).digest for graph in graphs])
        self.assertEqual({status for _, status, _ in report.cases}, {'PASS'})

    def test_failing_case_names_the_first_discrepancy(self):
        """Test that a failing generator records the failed check and its first differing term."""
        graph = LoopGraphFactory()
        with mock.patch('wick.checks.wick_map_chain', return_value=GraphChain()):
            report = check_generator(graph)
        ((label, status, detail),) = report.cases
        self.assertEqual((label, status), (canonical_form(graph).digest, 'FAIL'))
        self.assertTrue(detail.startswith('round-trip: '), detail)
        self.assertIn(' | E=1; ', detail)

    def test_rank_matches_basis(self):
        """Test that the x_Γ images span each graph basis up to three edges."""
        report = check_rank(3)
        self.assertTrue(report.passed, report.first_failure)


# ==================== Projections ====================

class ProjectionTest(SimpleTestCase):
    """Test cases for specializations of tensors."""

    def test_specialize_drops_boundary_terms(self):
        """Test that ν = 0 removes tensors with a boundary vertex."""
        chain = TensorChain.from_term(DecoratedTensorFactory())
        self.assertTrue(specialize_tensor(chain, set_nu_zero=True).is_zero())
        self.assertEqual(specialize_tensor(chain, set_gamma_zero=True), chain)

    def test_projection_needs_specialization(self):
        """Test that π refuses tensors with a deformation parameter."""
        with self.assertRaises(NotSpecializedError):
            project_tensor_to_g(TensorChain.from_term(DecoratedTensorFactory()))

    def test_projection_keeps_ribbon_vertices(self):
        """Test that π keeps single words of length two or more."""
        kept = DecoratedTensor((TensorVertex(cycles=((x(1), x(2), xi(1)),)),))
        dropped = DecoratedTensor((TensorVertex(cycles=((x(1),), (xi(1),))),))
        chain = TensorChain([(kept, 1), (dropped, Fraction(1, 2))])
        self.assertEqual(project_tensor_to_g(chain), TensorChain.from_term(kept))


# ==================== Hopf ====================

class HopfTest(SimpleTestCase):
    """Test cases for multiplicativity of I."""

    def test_products_of_small_graphs(self):
        """Test I(x_{Γ1} x_{Γ2}) = I(x_{Γ1}) I(x_{Γ2})."""
        graphs = [decorated_theta(), LoopGraphFactory(), SplitLoopGraphFactory(), singleton_bridge()]
        report = check_hopf(graphs)
        self.assertTrue(report.passed, report.first_failure)

    def test_products_of_generators(self):
        """Test multiplicativity on disjoint unions of generators with one edge."""
        report = check_hopf(generators(1))
        self.assertTrue(report.passed, report.first_failure)
