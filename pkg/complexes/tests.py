import os
import tempfile

from django.test import SimpleTestCase, tag

from core import ComplexKind
from core.exceptions import IncompleteDegreeRange
from complexes.checks import (
    SLICE_TYPES,
    check_boundary_squared,
    check_enumeration,
    check_hopf_boundary,
    check_projections,
    check_slice,
    generators,
    run_homology_oracle_suite,
)
from complexes.enumeration import GraphFilter, cycle_partitions, enumerate_graphs, naive_enumerate
from complexes.utils import (
    build_slice,
    emit_matrices,
    class_components,
    euler_characteristic,
    euler_table,
    homology_euler_characteristic,
    homology_ranks,
    is_primitive,
    multiply,
    permuted_slice,
    union_classes,
)
from graphs.canonical import canonical_form
from graphs.serializers import parse_graph
from graphs.factories import LoopGraphFactory, SplitLoopGraphFactory, ThetaGraphFactory, TwoLoopGraphFactory
from graphs.structures import EMPTY_GRAPH, GraphChain, StableRibbonGraph, Vertex
from graphs.utils import disjoint_union, recover_g_n


def decorated_theta():
    return ThetaGraphFactory(vertices=(Vertex(cycles=((0, 1, 2),), genus=1), Vertex(cycles=((3, 5, 4),))))


def singleton_bridge():
    return StableRibbonGraph(edges=((0, 1),), vertices=(Vertex(cycles=((0,),), genus=1), Vertex(cycles=((1,),), boundary=1)))


class EnumerationTest(SimpleTestCase):
    """Test cases for the basis enumerator."""

    def test_edge_count_must_be_positive(self):
        """Test that enumerating graphs with no edges is rejected."""
        with self.assertRaises(ValueError):
            enumerate_graphs(0)

    def test_cycle_partitions(self):
        """Test the cycle structures of a 4-valent vertex."""
        self.assertEqual(cycle_partitions(4), [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)])

    def test_two_edge_ribbon_graphs_vanish(self):
        """Test that every two-edge ribbon graph has an orientation-reversing automorphism."""
        self.assertEqual(enumerate_graphs(2, GraphFilter(kind=ComplexKind.RGC)), [])

    def test_two_loop_graph_is_a_zero_class(self):
        """Test that the (1, 1) two-edge class is the two-loop graph and is only listed with include_zero."""
        graph_filter = GraphFilter(kind=ComplexKind.RGC, genus=1, marked=1, connected=True)
        classes = enumerate_graphs(2, graph_filter, include_zero=True)
        self.assertIn(canonical_form(TwoLoopGraphFactory()).graph, classes)
        self.assertEqual(enumerate_graphs(2, graph_filter), [])

    def test_krgc_classes_are_srgc_classes(self):
        """Test that the membership predicates nest."""
        krgc = set(enumerate_graphs(2, GraphFilter(kind=ComplexKind.KRGC)))
        srgc = set(enumerate_graphs(2, GraphFilter(kind=ComplexKind.SRGC)))
        self.assertTrue(krgc <= srgc)
        self.assertTrue(krgc)

    def test_filter_matches_recovered_type(self):
        """Test that every enumerated connected (0, 3) graph has (g, n) = (0, 3)."""
        graph_filter = GraphFilter(genus=0, marked=3, connected=True)
        for edges in (1, 2, 3):
            for graph in enumerate_graphs(edges, graph_filter):
                self.assertEqual(recover_g_n(graph), (0, 3))

    def test_loop_graph_is_enumerated(self):
        """Test that the one-loop graph with a boundary defect is a (0, 3) class."""
        classes = enumerate_graphs(1, GraphFilter(genus=0, marked=3, connected=True))
        self.assertIn(canonical_form(LoopGraphFactory()).graph, classes)

    def test_enumeration_is_deterministic(self):
        """Test that two runs list the same classes in the same order."""
        self.assertEqual(enumerate_graphs(2), enumerate_graphs(2))

    def test_srgc_against_naive_oracle(self):
        """Test the enumerator against generate-and-deduplicate up to three edges."""
        report = check_enumeration(3, GraphFilter(kind=ComplexKind.SRGC))
        self.assertTrue(report.passed, report.first_failure)

    def test_srgc_slice_against_naive_oracle(self):
        """Test the connected (0, 3) classes against the oracle up to three edges."""
        report = check_enumeration(3, GraphFilter(genus=0, marked=3, connected=True))
        self.assertTrue(report.passed, report.first_failure)

    def test_krgc_against_naive_oracle(self):
        """Test the vanishing boundary defect classes against the oracle up to three edges."""
        report = check_enumeration(3, GraphFilter(kind=ComplexKind.KRGC))
        self.assertTrue(report.passed, report.first_failure)

    def test_rgc_against_naive_oracle(self):
        """Test the ribbon graph classes against the oracle up to three edges."""
        report = check_enumeration(3, GraphFilter(kind=ComplexKind.RGC))
        self.assertTrue(report.passed, report.first_failure)

    def test_naive_oracle_finds_loop_graph(self):
        """Test that the oracle itself sees the one-loop class."""
        self.assertIn(canonical_form(LoopGraphFactory()).graph, naive_enumerate(1))


class BoundaryTest(SimpleTestCase):
    """Exhaustive tests of the boundary operator."""

    def test_boundary_squares_to_zero(self):
        """Test ∂∂ = 0 with valid, (g, n)-preserving contractions on all generators up to three edges."""
        report = check_boundary_squared(generators(3))
        self.assertTrue(report.passed, report.first_failure)

    def test_projections_are_chain_maps(self):
        """Test that both projections commute with ∂ up to three edges."""
        report = check_projections(generators(3))
        self.assertTrue(report.passed, report.first_failure)


class SliceTest(SimpleTestCase):
    """Test cases for graded slices and homology ranks."""

    def test_slices_pass_all_checks(self):
        """Test matrix ∂∂ = 0, dense ranks, Euler identity and basis order on complete slices."""
        for graph_filter in (
            GraphFilter(genus=0, marked=3, connected=True),
            GraphFilter(genus=1, marked=1, connected=True),
            GraphFilter(kind=ComplexKind.KRGC, genus=1, marked=1, connected=True),
            GraphFilter(kind=ComplexKind.RGC, genus=1, marked=1, connected=True),
        ):
            complex_slice = build_slice(graph_filter, 3, use_cache=False)
            self.assertTrue(complex_slice.is_complete)
            report = check_slice(complex_slice)
            self.assertTrue(report.passed, report.first_failure)

    def test_every_slice_type_up_to_three_edges(self):
        """Test check_slice on each complex and each (g, n) with 2g - 2 + n <= 3."""
        report = run_homology_oracle_suite(3)
        self.assertTrue(report.passed, report.first_failure)
        self.assertEqual(len(report.cases), len(ComplexKind.CHOICES) * len(SLICE_TYPES))

    def test_euler_identity(self):
        """Test Σ(-1)^k betti_k = Σ(-1)^k dim C_k on a complete slice."""
        complex_slice = build_slice(GraphFilter(genus=1, marked=1, connected=True), 3, use_cache=False)
        ranks = homology_ranks(complex_slice)
        self.assertEqual(homology_euler_characteristic(ranks), euler_characteristic(complex_slice))
        self.assertTrue(all(betti >= 0 for _, betti in ranks))

    def test_single_degree_slice_has_no_differential(self):
        """Test that without a differential the betti numbers are the dimensions."""
        complex_slice = build_slice(GraphFilter(genus=0, marked=3, connected=True), 1, use_cache=False)
        self.assertEqual(homology_ranks(complex_slice, allow_truncated=True), [(1, complex_slice.dimension(1))])

    def test_incomplete_slice(self):
        """Test that a slice below its top degree needs allow_truncated."""
        complex_slice = build_slice(GraphFilter(genus=0, marked=4, connected=True), 2, use_cache=False)
        with self.assertRaises(IncompleteDegreeRange):
            homology_ranks(complex_slice)

    def test_unbounded_slice(self):
        """Test that a slice needs a (g, n) filter."""
        with self.assertRaises(IncompleteDegreeRange):
            build_slice(GraphFilter(), 2)

    def test_basis_order_does_not_matter(self):
        """Test that reversing every basis keeps the ranks."""
        complex_slice = build_slice(GraphFilter(genus=0, marked=3, connected=True), 3, use_cache=False)
        self.assertEqual(homology_ranks(permuted_slice(complex_slice)), homology_ranks(complex_slice))

    def test_euler_table(self):
        """Test that the Euler table groups cells by (g, n)."""
        table = euler_table(2, GraphFilter(genus=0, marked=3, connected=True))
        self.assertEqual([g_n for g_n, _, _ in table], [(0, 3)])


class HopfTest(SimpleTestCase):
    """Test cases for disjoint unions and components."""

    def test_union_with_empty_graph(self):
        """Test that the empty graph is the unit."""
        graph_class = canonical_form(decorated_theta())
        self.assertEqual(union_classes(graph_class, canonical_form(EMPTY_GRAPH)).encoding, graph_class.encoding)

    def test_union_is_commutative_up_to_sign(self):
        """Test a ⊔ b = (-1)^{E(a)E(b)} b ⊔ a."""
        a, b = GraphChain.from_term(decorated_theta()), GraphChain.from_term(singleton_bridge())
        self.assertEqual(multiply(a, b), multiply(b, a).scale(-1))

    def test_union_of_odd_copies_vanishes(self):
        """Test that a one-edge graph squares to zero."""
        chain = GraphChain.from_term(LoopGraphFactory())
        self.assertTrue(multiply(chain, chain).is_zero())

    def test_components(self):
        """Test that components recover both parts of a union."""
        union = canonical_form(disjoint_union(decorated_theta(), SplitLoopGraphFactory()))
        parts = {part.encoding for part in class_components(union)}
        self.assertEqual(parts, {canonical_form(decorated_theta()).encoding, canonical_form(SplitLoopGraphFactory()).encoding})
        self.assertEqual(len(class_components(canonical_form(decorated_theta()))), 1)

    def test_primitive_chains(self):
        """Test that connected graphs are primitive and unions are not."""
        self.assertTrue(is_primitive(GraphChain.from_term(decorated_theta())))
        self.assertFalse(is_primitive(GraphChain.from_term(disjoint_union(decorated_theta(), singleton_bridge()))))

    def test_boundary_is_a_derivation(self):
        """Test ∂(a ⊔ b) = ∂a ⊔ b + (-1)^{E(a)} a ⊔ ∂b."""
        graphs = [decorated_theta(), LoopGraphFactory(), singleton_bridge(), SplitLoopGraphFactory()]
        report = check_hopf_boundary(graphs)
        self.assertTrue(report.passed, report.first_failure)


class EmitMatricesTest(SimpleTestCase):
    """Test cases for the matrix and basis files."""

    def test_emit_matrices(self):
        """Test that every degree gets a basis file and every ∂_k a matrix file with its shape header."""
        complex_slice = build_slice(GraphFilter(genus=1, marked=1, connected=True), 3, use_cache=False)
        with tempfile.TemporaryDirectory() as directory:
            written = emit_matrices(complex_slice, directory)
            names = sorted(os.path.basename(path) for path in written)
            self.assertIn('basis_srgc_g1_n1_E1.txt', names)
            self.assertIn('boundary_srgc_g1_n1_E3.txt', names)
            self.assertEqual(len(written), 5)
            with open(os.path.join(directory, 'boundary_srgc_g1_n1_E2.txt')) as handle:
                header = handle.readline().strip()
            rows, columns = complex_slice.matrices[2].shape
            self.assertEqual(header, f'# {rows} {columns}')
            with open(os.path.join(directory, 'basis_srgc_g1_n1_E1.txt')) as handle:
                records = [line.strip() for line in handle if line.strip()]
            self.assertEqual([parse_graph(record) for record in records], complex_slice.bases[1])


@tag('slow')
class FourEdgeTest(SimpleTestCase):
    """Generators and slices up to four edges; run with `manage.py test --tag slow`."""

    def test_boundary_squares_to_zero(self):
        """Test ∂∂ = 0 on all generators up to four edges."""
        report = check_boundary_squared(generators(4))
        self.assertTrue(report.passed, report.first_failure)

    def test_every_slice_against_dense_oracle(self):
        """Test sparse ranks against dense ranks on all 18 slices up to four edges."""
        report = run_homology_oracle_suite(4)
        self.assertTrue(report.passed, report.first_failure)
        self.assertEqual(len(report.cases), 18)
