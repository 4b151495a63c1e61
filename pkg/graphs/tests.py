from django.core.exceptions import ValidationError
from django.test import SimpleTestCase

from core.exceptions import EdgeNotFoundError, GraphFormatError, MalformedGraphError
from graphs import ContractionCase, ValidationCode
from graphs.canonical import are_isomorphic, automorphism_count, canonical_form
from graphs.checks import brute_force_automorphisms, brute_force_zero_flag, check_canonical_forms
from graphs.contraction import boundary, contract_edge, graph_boundary, project_krgc, project_rgc
from graphs.factories import (
    DumbbellGraphFactory,
    LoopGraphFactory,
    SplitLoopGraphFactory,
    ThetaGraphFactory,
    TwoLoopGraphFactory,
)
from graphs.serializers import format_graph, parse_chain, parse_graph
from graphs.structures import GraphChain, StableRibbonGraph, Vertex
from graphs.utils import (
    connected_components,
    disjoint_union,
    perimeter_count,
    perimeters,
    recover_g_n,
    relabel,
)
from graphs.validators import validate_graph, validation_report


def decorated_theta():
    """Theta graph with a genus defect on its first vertex; only the rotations survive as automorphisms."""
    return ThetaGraphFactory(vertices=(Vertex(cycles=((0, 1, 2),), genus=1), Vertex(cycles=((3, 5, 4),))))


def singleton_bridge():
    """One edge between two decorated single half-edge vertices."""
    return StableRibbonGraph(edges=((0, 1),), vertices=(Vertex(cycles=((0,),), genus=1), Vertex(cycles=((1,),), boundary=1)))


def shifted(graph, step=1):
    size = graph.half_edge_count
    return relabel(graph, {half_edge: (half_edge * 5 + step) % size for half_edge in range(size)})


class ValidationTest(SimpleTestCase):
    """Test cases for the defining conditions of stable ribbon graphs."""

    def test_two_loop_graph_is_valid(self):
        """Test that the interleaved two-loop graph passes validation."""
        self.assertIsNone(validation_report(TwoLoopGraphFactory()))

    def test_bivalent_loop_is_unstable(self):
        """Test that a single loop at an undecorated vertex violates stability."""
        graph = LoopGraphFactory(vertices=(Vertex(cycles=((0, 1),)),))
        self.assertEqual(validation_report(graph).code, ValidationCode.STABILITY)

    def test_fixed_point_in_pairing(self):
        """Test that an edge joining a half-edge to itself is a pairing violation."""
        graph = StableRibbonGraph(edges=((0, 0),), vertices=(Vertex(cycles=((0, 1),), boundary=1),))
        with self.assertRaises(ValidationError) as context:
            validate_graph(graph)
        self.assertEqual(context.exception.code, ValidationCode.PAIRING)

    def test_half_edge_in_two_cycles(self):
        """Test that cycles must partition the half-edges."""
        graph = StableRibbonGraph(edges=((0, 1),), vertices=(Vertex(cycles=((0, 1),), boundary=1), Vertex(cycles=((1,),), boundary=1)))
        self.assertEqual(validation_report(graph).code, ValidationCode.CYCLES)

    def test_empty_vertex(self):
        """Test that a vertex without half-edges is rejected."""
        graph = StableRibbonGraph(edges=((0, 1),), vertices=(Vertex(cycles=((0, 1),), boundary=1), Vertex(cycles=(), genus=1)))
        self.assertEqual(validation_report(graph).code, ValidationCode.EMPTY_VERTEX)

    def test_negative_defect(self):
        """Test that defects must be nonnegative."""
        graph = LoopGraphFactory(vertices=(Vertex(cycles=((0, 1),), boundary=-1),))
        self.assertEqual(validation_report(graph).code, ValidationCode.STABILITY)


class PermutationTest(SimpleTestCase):
    """Test cases for perimeters and the recovery of (g, n)."""

    def test_two_loop_graph_has_one_perimeter(self):
        """Test n_p = 1 for the interleaved two-loop graph."""
        self.assertEqual(perimeter_count(TwoLoopGraphFactory()), 1)

    def test_theta_graph_has_three_perimeters(self):
        """Test n_p = 3 for the theta graph."""
        self.assertEqual(sorted(map(sorted, perimeters(ThetaGraphFactory()))), [[0, 4], [1, 5], [2, 3]])

    def test_disjoint_union_perimeters(self):
        """Test that perimeters of a disjoint union are those of its parts."""
        union = disjoint_union(ThetaGraphFactory(), TwoLoopGraphFactory())
        self.assertEqual(perimeter_count(union), 4)

    def test_recover_two_loop_graph(self):
        """Test (g, n) = (1, 1) for the interleaved two-loop graph."""
        self.assertEqual(recover_g_n(TwoLoopGraphFactory()), (1, 1))

    def test_recover_named_graphs(self):
        """Test (g, n) of the theta, dumbbell, loop and split loop graphs."""
        self.assertEqual(recover_g_n(ThetaGraphFactory()), (0, 3))
        self.assertEqual(recover_g_n(DumbbellGraphFactory()), (0, 3))
        self.assertEqual(recover_g_n(LoopGraphFactory()), (0, 3))
        self.assertEqual(recover_g_n(SplitLoopGraphFactory()), (1, 1))

    def test_genus_defect_adds_to_genus(self):
        """Test that one extra genus defect raises g by exactly one."""
        self.assertEqual(recover_g_n(decorated_theta()), (1, 3))

    def test_unstable_graph_is_malformed(self):
        """Test that an unstable bivalent loop has no admissible (g, n)."""
        with self.assertRaises(MalformedGraphError):
            recover_g_n(LoopGraphFactory(vertices=(Vertex(cycles=((0, 1),)),)))


class CanonicalFormTest(SimpleTestCase):
    """Test cases for canonical forms, automorphisms and orientation signs."""

    def test_relabeled_copies_share_encoding(self):
        """Test that relabeling half-edges does not change the encoding."""
        graph = decorated_theta()
        self.assertEqual(canonical_form(graph).encoding, canonical_form(shifted(graph)).encoding)
        self.assertTrue(are_isomorphic(DumbbellGraphFactory(), shifted(DumbbellGraphFactory(), 3)))

    def test_canonical_form_is_idempotent(self):
        """Test that the canonical graph is its own canonical form with sign +1."""
        graph_class = canonical_form(decorated_theta())
        again = canonical_form(graph_class.graph)
        self.assertEqual(again.graph, graph_class.graph)
        self.assertEqual(again.sign, 1)

    def test_swapping_orientation_flips_sign(self):
        """Test that a transposition of two edges negates the sign."""
        graph = decorated_theta()
        swapped = StableRibbonGraph(edges=(graph.edges[1], graph.edges[0], graph.edges[2]), vertices=graph.vertices)
        self.assertEqual(canonical_form(graph).sign, -canonical_form(swapped).sign)

    def test_theta_graph_is_zero(self):
        """Test that exchanging the vertices of the theta graph reverses its orientation."""
        graph_class = canonical_form(ThetaGraphFactory())
        self.assertTrue(graph_class.is_zero)
        self.assertEqual(graph_class.automorphism_count, 6)

    def test_two_loop_graph_is_zero(self):
        """Test that rotating the two-loop graph swaps its edges."""
        self.assertTrue(canonical_form(TwoLoopGraphFactory()).is_zero)
        self.assertEqual(automorphism_count(TwoLoopGraphFactory()), 4)

    def test_decorated_theta_keeps_rotations(self):
        """Test that only the three rotations fix a decorated theta graph."""
        graph_class = canonical_form(decorated_theta())
        self.assertFalse(graph_class.is_zero)
        self.assertEqual(graph_class.automorphism_count, 3)

    def test_counts_match_brute_force(self):
        """Test automorphism counts and zero flags against enumeration of all bijections."""
        for graph in (ThetaGraphFactory(), TwoLoopGraphFactory(), DumbbellGraphFactory(), LoopGraphFactory(), singleton_bridge()):
            self.assertEqual(automorphism_count(graph), len(brute_force_automorphisms(graph)))
            self.assertEqual(canonical_form(graph).is_zero, brute_force_zero_flag(graph))

    def test_canonical_forms_against_oracle(self):
        """Test the brute-force oracle on named graphs and relabeled copies."""
        graphs = [decorated_theta(), shifted(decorated_theta()), DumbbellGraphFactory(), SplitLoopGraphFactory(), singleton_bridge()]
        report = check_canonical_forms(graphs)
        self.assertTrue(report.passed, report.first_failure)

    def test_union_of_distinct_graphs_multiplies_counts(self):
        """Test |Aut(A ⊔ B)| = |Aut(A)| |Aut(B)| for non-isomorphic parts."""
        union = disjoint_union(decorated_theta(), LoopGraphFactory())
        self.assertEqual(automorphism_count(union), 3 * 2)

    def test_union_of_two_odd_copies_is_zero(self):
        """Test that two copies of a one-edge graph can be swapped by an odd permutation."""
        union = disjoint_union(LoopGraphFactory(), LoopGraphFactory())
        self.assertTrue(canonical_form(union).is_zero)
        self.assertEqual(automorphism_count(union), 8)

    def test_components_are_recovered(self):
        """Test that a disjoint union splits back into its parts."""
        parts = connected_components(disjoint_union(decorated_theta(), LoopGraphFactory()))
        self.assertEqual(len(parts), 2)
        self.assertTrue(are_isomorphic(parts[0], decorated_theta()))
        self.assertTrue(are_isomorphic(parts[1], LoopGraphFactory()))


class ContractionTest(SimpleTestCase):
    """Test cases for the edge contraction rules."""

    def test_edge_between_trivalent_vertices(self):
        """Test that contracting a theta edge gives one 4-valent undecorated vertex."""
        outcome = contract_edge(ThetaGraphFactory(), 0)
        self.assertEqual(outcome.case, ContractionCase.JOIN_VERTICES)
        self.assertEqual(outcome.graph.vertices, (Vertex(cycles=((0, 1, 3, 2),)),))
        self.assertEqual(outcome.graph.edges, ((0, 2), (1, 3)))
        self.assertEqual(outcome.sign, 1)
        self.assertIsNone(validation_report(outcome.graph))

    def test_loop_joining_cycles_adds_genus(self):
        """Test that a loop between two cycles of a vertex raises the genus defect."""
        graph = StableRibbonGraph(edges=((0, 3), (1, 2)), vertices=(Vertex(cycles=((0, 1, 2), (3,))),))
        outcome = contract_edge(graph, 0)
        self.assertEqual(outcome.case, ContractionCase.JOIN_CYCLES)
        self.assertEqual(outcome.graph.vertices, (Vertex(cycles=((0, 1),), genus=1),))
        self.assertEqual(recover_g_n(outcome.graph), recover_g_n(graph))

    def test_loop_filling_its_cycle_adds_two_marked_points(self):
        """Test that a loop forming a whole cycle disappears and adds two to the boundary defect."""
        graph = StableRibbonGraph(
            edges=((0, 1), (2, 3)),
            vertices=(Vertex(cycles=((0, 1), (2,))), Vertex(cycles=((3,),), boundary=1)),
        )
        outcome = contract_edge(graph, 0)
        self.assertEqual(outcome.case, ContractionCase.SPLIT_CYCLE)
        self.assertEqual(outcome.graph.vertices[0], Vertex(cycles=((0,),), boundary=2))
        self.assertEqual(recover_g_n(outcome.graph), recover_g_n(graph))

    def test_loop_filling_the_only_cycle_is_not_contractible(self):
        """Test that a loop forming the only cycle of its vertex cannot be contracted."""
        outcome = contract_edge(LoopGraphFactory(), 0)
        self.assertFalse(outcome.is_contractible)

    def test_singleton_cycles_annihilate(self):
        """Test that a loop joining the only two singleton cycles cannot be contracted."""
        self.assertFalse(contract_edge(SplitLoopGraphFactory(), 0).is_contractible)
        self.assertFalse(contract_edge(singleton_bridge(), 0).is_contractible)

    def test_splitting_the_two_loop_graph(self):
        """Test that both loops of the two-loop graph split its cycle into two singletons."""
        graph = TwoLoopGraphFactory()
        for edge, sign in ((0, 1), (1, -1)):
            outcome = contract_edge(graph, edge)
            self.assertEqual(outcome.sign, sign)
            self.assertTrue(are_isomorphic(outcome.graph, SplitLoopGraphFactory()))
            self.assertEqual(recover_g_n(outcome.graph), (1, 1))

    def test_missing_edge(self):
        """Test that an out-of-range edge index raises EdgeNotFoundError."""
        with self.assertRaises(EdgeNotFoundError):
            contract_edge(ThetaGraphFactory(), 3)

    def test_boundary_of_one_edge_graph_is_zero(self):
        """Test ∂ of a graph with a single non-contractible edge."""
        self.assertTrue(graph_boundary(LoopGraphFactory()).is_zero())

    def test_boundary_squares_to_zero(self):
        """Test ∂∂ = 0 on named three-edge graphs."""
        for graph in (decorated_theta(), DumbbellGraphFactory(), shifted(decorated_theta())):
            self.assertTrue(boundary(graph_boundary(graph)).is_zero())

    def test_boundary_preserves_g_n(self):
        """Test that every contraction of the decorated theta graph keeps (g, n)."""
        graph = decorated_theta()
        for edge in range(graph.edge_count):
            outcome = contract_edge(graph, edge)
            self.assertEqual(recover_g_n(outcome.graph), (1, 3))

    def test_projections(self):
        """Test that the projections drop decorated graphs."""
        chain = GraphChain([(decorated_theta(), 1), (LoopGraphFactory(), 2)])
        self.assertEqual(project_krgc(chain), GraphChain([(decorated_theta(), 1)]))
        self.assertTrue(project_rgc(chain).is_zero())


class SerializationTest(SimpleTestCase):
    """Test cases for the graph file format."""

    def test_format_two_loop_graph(self):
        """Test the record of the interleaved two-loop graph."""
        self.assertEqual(
            format_graph(TwoLoopGraphFactory()),
            'E=2; sigma1=[(0,2),(1,3)]; vertices=[[cycle=[0,1,2,3]; g=0; n=0]]; orient=[0,1]',
        )

    def test_parse_orientation(self):
        """Test that orient lists the edges in orientation order."""
        graph = parse_graph('E=2; sigma1=[(0,1),(2,3)]; vertices=[[cycle=[0,1],cycle=[2]; g=0; n=0],[cycle=[3]; g=0; n=1]]; orient=[1,0]')
        self.assertEqual(graph.edges, ((2, 3), (0, 1)))
        self.assertEqual(graph.vertices[0].cycles, ((0, 1), (2,)))
        self.assertEqual(graph.vertices[1].boundary, 1)
        self.assertEqual(parse_graph(format_graph(graph)), graph)

    def test_invalid_record(self):
        """Test that malformed records raise GraphFormatError."""
        with self.assertRaises(GraphFormatError):
            parse_graph('E=1; sigma1=[(0,1)]')
        with self.assertRaises(GraphFormatError):
            parse_graph('E=2; sigma1=[(0,1)]; vertices=[[cycle=[0,1]; g=0; n=1]]; orient=[0]')

    def test_chain_lines(self):
        """Test printing and reading a graph chain."""
        chain = GraphChain([(decorated_theta(), -2), (LoopGraphFactory(), 1)])
        text = str(chain)
        self.assertTrue(all(' | E=' in line for line in text.splitlines()))
        self.assertEqual(parse_chain(text), chain)
