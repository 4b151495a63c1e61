from fractions import Fraction
from itertools import product

from django.test import SimpleTestCase, tag

from core.exceptions import MembershipError, NotSpecializedError
from lambda_ce.checks import (
    bounded_tuples,
    check_bv_axioms,
    check_deformed_derivation,
    check_differentials_square_to_zero,
    check_pe_embedding,
    check_specializations,
    run_lambda_projection_suite,
    run_lambda_suite,
    spanning_chains,
)
from lambda_ce.serializers import parse_chain
from lambda_ce.structures import CEChain, LinearSymplecticElement, SymProduct
from lambda_ce.utils import (
    ce_differential_delta,
    deformed_differential,
    extended_bracket,
    extended_cobracket,
    project_to_g,
    specialize,
)
from words.factories import CyclicWordFactory, SymplecticSpaceFactory
from words.structures import HamiltonianElement, x, xi


def chain(*factors, coefficient=1, gamma=0, nu=0, keep_scalars=False):
    return CEChain.monomial(factors, coefficient, gamma=gamma, nu=nu, keep_scalars=keep_scalars)


class SymProductTest(SimpleTestCase):
    """Test cases for graded-symmetric products."""

    def test_repeated_odd_factor_vanishes(self):
        """Test that an odd word squared is zero in the symmetric algebra."""
        self.assertTrue(chain((x(1), xi(1)), (x(1), xi(1))).is_zero())

    def test_repeated_even_factor_survives(self):
        """Test that an even word squared is a valid product."""
        self.assertFalse(chain((x(1), x(2)), (x(1), x(2))).is_zero())

    def test_swapping_odd_factors_changes_sign(self):
        """Test xi2 · xi1 = -xi1 · xi2."""
        self.assertEqual(chain((xi(2),), (xi(1),)), chain((xi(1),), (xi(2),), coefficient=-1))

    def test_empty_word_becomes_nu(self):
        """Test that an empty factor is absorbed as one power of ν."""
        element = chain((), (x(1), x(2)))
        (key,) = element.keys()
        self.assertEqual(key[1], 1)
        self.assertEqual(len(key[2]), 1)

    def test_scalars_are_dropped_by_default(self):
        """Test that pure γ^a ν^b terms vanish unless kept."""
        self.assertTrue(chain((), ()).is_zero())
        self.assertFalse(chain((), (), keep_scalars=True).is_zero())

    def test_product_metadata(self):
        """Test the parity and length bookkeeping of a product."""
        product = SymProduct((CyclicWordFactory(), CyclicWordFactory(letters=(x(2),))))
        self.assertEqual(product.parity, 1)
        self.assertEqual(product.total_length, 3)

    def test_linear_symplectic_element_is_quadratic(self):
        """Test that pe elements are exactly the quadratic words."""
        self.assertEqual(LinearSymplecticElement(CyclicWordFactory()).as_hamiltonian(), HamiltonianElement.monomial((x(1), xi(1))))
        with self.assertRaises(ValueError):
            LinearSymplecticElement(CyclicWordFactory(letters=(x(1),)))

    def test_chain_text_format(self):
        """Test printing and reading a chain line."""
        element = chain((x(1), xi(1)), (x(2),), coefficient=Fraction(1, 2), gamma=1)
        self.assertEqual(str(element), '1/2 * gamma^1 * nu^0 * (x2 | x1.xi1)')
        self.assertEqual(parse_chain(str(element)), element)


class DifferentialTest(SimpleTestCase):
    """Test cases for δ, Δ and D = γδ + Δ."""

    def test_delta_of_single_factor_vanishes(self):
        """Test δ(g) = 0 since h has no internal differential."""
        self.assertTrue(ce_differential_delta(chain((x(1), x(1), xi(1)))).is_zero())

    def test_delta_of_two_factors_is_their_bracket(self):
        """Test δ(x1 · x1.xi1) = {x1, x1.xi1} = x1."""
        self.assertEqual(ce_differential_delta(chain((x(1),), (x(1), xi(1)))), chain((x(1),)))

    def test_cobracket_of_quadratic_word_is_nu_squared(self):
        """Test Δ(x1.xi1) = ν² as a scalar, which vanishes in the truncated complex."""
        expected = CEChain([((0, 2, ()), 1)], keep_scalars=True)
        self.assertEqual(extended_cobracket(chain((x(1), xi(1)), keep_scalars=True)), expected)
        self.assertTrue(extended_cobracket(chain((x(1), xi(1)))).is_zero())

    def test_cobracket_of_cubic_word(self):
        """Test Δ(x1.x1.xi1) = 2 ν x1."""
        self.assertEqual(extended_cobracket(chain((x(1), x(1), xi(1)))), chain((x(1),), coefficient=2, nu=1))

    def test_deformed_differential_of_quadratic_word(self):
        """Test D(x1.xi1) = γ·0 + ν²."""
        image = deformed_differential(chain((x(1), xi(1)), keep_scalars=True))
        self.assertEqual(image, CEChain([((0, 2, ()), 1)], keep_scalars=True))

    def test_deformed_differential_without_pairs_vanishes(self):
        """Test D on a chain with no complementary letters."""
        self.assertTrue(deformed_differential(chain((x(1), x(2)), (x(1), x(1), x(2)))).is_zero())

    def test_deformed_differential_checks_membership(self):
        """Test that a bare letter with no γ or ν is rejected."""
        with self.assertRaises(MembershipError):
            deformed_differential(chain((x(1),)))

    def test_differentials_square_to_zero(self):
        """Test δ² = Δ² = D² = 0 on products of up to 3 factors of total length <= 4 over Q^{1|1}."""
        report = check_differentials_square_to_zero(SymplecticSpaceFactory(dim=1), 3, 4)
        self.assertTrue(report.passed, report.first_failure)

    def test_differentials_square_to_zero_two_coordinates(self):
        """Test D² = 0 on products of up to 2 factors of total length <= 3 over Q^{2|2}."""
        report = check_differentials_square_to_zero(SymplecticSpaceFactory(dim=2), 2, 3)
        self.assertTrue(report.passed, report.first_failure)

    def test_three_factors_two_coordinates(self):
        """Test D² = 0 on products of up to 3 factors of total length <= 4 over Q^{2|2}."""
        report = check_differentials_square_to_zero(SymplecticSpaceFactory(dim=2), 3, 4)
        self.assertTrue(report.passed, report.first_failure)

    def test_spanning_chains_are_members(self):
        """Test that the spanning set lies in Λ."""
        self.assertTrue(all(element.is_member() for element in spanning_chains(SymplecticSpaceFactory(dim=1), 2, 3)))


class BracketTest(SimpleTestCase):
    """Test cases for the BV bracket."""

    def test_bracket_with_unit_vanishes(self):
        """Test {c, 1} = 0."""
        unit = CEChain([((0, 0, ()), 1)], keep_scalars=True)
        self.assertTrue(extended_bracket(chain((x(1), xi(1))), unit).is_zero())

    def test_bracket_of_product(self):
        """Test {x2 · x1.xi1, xi1} = -x2 · xi1."""
        result = extended_bracket(chain((x(2),), (x(1), xi(1))), chain((xi(1),)))
        self.assertEqual(result, chain((x(2),), (xi(1),), coefficient=-1))

    def test_bracket_adds_exponents(self):
        """Test that the bracket is Q[γ,ν]-bilinear."""
        result = extended_bracket(chain((x(1), xi(1)), gamma=1), chain((x(1),), nu=2))
        self.assertEqual(result, chain((x(1),), gamma=1, nu=2))

    def test_bv_axioms(self):
        """Test the BV relations on pairs and triples of total length <= 3 over Q^{1|1}."""
        report = check_bv_axioms(SymplecticSpaceFactory(dim=1), 2, 3)
        self.assertTrue(report.passed, report.first_failure)

    def test_bv_axioms_three_factors_two_coordinates(self):
        """Test the BV relations with up to 3 factors of total length <= 4 over Q^{2|2}."""
        report = check_bv_axioms(SymplecticSpaceFactory(dim=2), 3, 4)
        self.assertTrue(report.passed, report.first_failure)

    def test_bounded_tuples(self):
        """Test that bucketed tuples are exactly the ordered tuples within the size bound."""
        chains = spanning_chains(SymplecticSpaceFactory(dim=1), 2, 3)
        sizes = {id(item): next(iter(item.keys()))[2].total_length for item in chains}
        expected = [triple for triple in product(chains, repeat=3) if sum(sizes[id(item)] for item in triple) <= 3]
        self.assertCountEqual(list(bounded_tuples(chains, 3, 3)), expected)

    def test_deformed_differential_is_a_derivation(self):
        """Test D{a, b} + {Da, b} + (-1)^a {a, Db} = 0 over Q^{1|1}."""
        report = check_deformed_derivation(SymplecticSpaceFactory(dim=1), 2, 4)
        self.assertTrue(report.passed, report.first_failure)


class SpecializationTest(SimpleTestCase):
    """Test cases for setting parameters to zero and projecting to g."""

    def test_nu_free_chain_is_unchanged(self):
        """Test that ν = 0 fixes a ν-free chain."""
        element = chain((x(1), xi(1)), gamma=2)
        self.assertEqual(specialize(element, set_nu_zero=True), element)

    def test_gamma_zero_reduces_differential_to_cobracket(self):
        """Test that with γ = 0 the differential is Δ."""
        element = chain((x(1), x(1), xi(1)), (x(2), xi(2)))
        self.assertEqual(
            specialize(deformed_differential(element), set_gamma_zero=True),
            extended_cobracket(element),
        )

    def test_projection_keeps_long_single_factors(self):
        """Test π(x1.x2.xi1.xi2) is the word itself and π of a product is 0."""
        letters = (x(1), x(2), xi(1), xi(2))
        self.assertEqual(project_to_g(chain(letters)), HamiltonianElement.monomial(letters))
        self.assertTrue(project_to_g(chain((x(1), x(2)), (x(1), xi(1)))).is_zero())

    def test_projection_needs_specialized_chain(self):
        """Test π rejects terms with a positive exponent."""
        with self.assertRaises(NotSpecializedError):
            project_to_g(chain((x(1), x(2)), nu=1))

    def test_specializations_commute_with_differentials(self):
        """Test the specialization squares and π∘D = 0 over Q^{1|1}."""
        report = check_specializations(SymplecticSpaceFactory(dim=1), 2, 4)
        self.assertTrue(report.passed, report.first_failure)

    def test_pe_embedding(self):
        """Test that quadratic words form a subalgebra respected by the specializations."""
        report = check_pe_embedding(SymplecticSpaceFactory(dim=2))
        self.assertTrue(report.passed, report.first_failure)


@tag('slow')
class FullScaleTest(SimpleTestCase):
    """Products of up to 3 factors of total length <= 6 over Q^{2|2}; run with `manage.py test --tag slow`."""

    def test_differentials_bv_and_derivation(self):
        """Test D² = 0, the BV relations and the derivation property at full scale."""
        report = run_lambda_suite(SymplecticSpaceFactory(dim=2), 3, 6)
        self.assertTrue(report.passed, report.first_failure)

    def test_specializations(self):
        """Test the specialization squares and the quadratic embedding at full scale."""
        report = run_lambda_projection_suite(SymplecticSpaceFactory(dim=2), 3, 6)
        self.assertTrue(report.passed, report.first_failure)
