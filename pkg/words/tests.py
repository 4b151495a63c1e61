from fractions import Fraction

from django.test import SimpleTestCase, tag

from core.exceptions import SpaceMismatchError, WordFormatError
from words.checks import (
    check_bracket_oracle,
    check_cobracket_divergence,
    check_cojacobi,
    check_compatibility,
    check_coordinate_independence,
    check_divergence_commutator,
    check_graded_symmetry,
    check_involutivity,
    check_jacobi,
    run_bialgebra_suite,
)
from words.factories import CyclicWordFactory, LetterFactory, SymplecticSpaceFactory
from words.serializers import format_letters, parse_hamiltonian, parse_word
from words.structures import (
    EMPTY_WORD,
    CyclicWord,
    HamiltonianElement,
    TensorSquareElement,
    VectorField,
    normalize_word,
    x,
    xi,
)
from words.substitutions import shear_substitution
from words.utils import (
    bracket,
    cobracket,
    cyclic_words,
    divergence,
    hamiltonian_field,
    lie_derivative,
)


def word(*letters, coefficient=1, space=None):
    return HamiltonianElement.monomial(letters, coefficient, space=space)


def square(left, right, coefficient=1):
    return TensorSquareElement([((tuple(left), tuple(right)), coefficient)])


class NormalFormTest(SimpleTestCase):
    """Test cases for cyclic normal forms."""

    def test_single_letter_is_its_own_normal_form(self):
        """Test that a length-1 word is unchanged with sign +1."""
        self.assertEqual(normalize_word((x(1),)), (CyclicWord((x(1),)), 1))

    def test_two_equal_odd_letters_normalize_to_zero(self):
        """Test that xi1.xi1 equals its own negative and vanishes."""
        self.assertEqual(normalize_word((xi(1), xi(1))), (None, 0))

    def test_rotation_past_even_letter_keeps_sign(self):
        """Test that x1.xi1 and xi1.x1 share a normal form with sign +1."""
        self.assertEqual(normalize_word((xi(1), x(1))), normalize_word((x(1), xi(1))))
        self.assertEqual(normalize_word((xi(1), x(1)))[1], 1)

    def test_rotation_of_two_odd_letters_is_negative(self):
        """Test that xi2.xi1 = -xi1.xi2."""
        self.assertEqual(normalize_word((xi(2), xi(1))), (CyclicWord((xi(1), xi(2))), -1))

    def test_even_letters_sort_before_odd_letters(self):
        """Test that the minimal rotation starts with an even letter."""
        normal, _ = normalize_word((xi(1), xi(2), x(2)))
        self.assertEqual(normal.letters[0], x(2))

    def test_empty_word_is_even(self):
        """Test that the empty word is a valid even word."""
        self.assertEqual(EMPTY_WORD.parity, 0)
        self.assertEqual(normalize_word(()), (EMPTY_WORD, 1))

    def test_parity_is_rotation_invariant(self):
        """Test the parity of a word and of its normal form agree."""
        letters = (xi(1), x(2), xi(2), x(1), xi(1))
        normal, _ = normalize_word(letters)
        self.assertEqual(normal.parity, CyclicWord(letters).parity)

    def test_hamiltonian_collects_rotations(self):
        """Test that rotated copies of one word add up in h[V]."""
        element = word(x(1), xi(1)) + word(xi(1), x(1))
        self.assertEqual(element.coefficient((x(1), xi(1))), 2)

    def test_factories_build_values(self):
        """Test the word factories."""
        self.assertEqual(CyclicWordFactory().letters, (x(1), xi(1)))
        self.assertEqual(LetterFactory(index=3), x(3))
        self.assertEqual(SymplecticSpaceFactory().dim, 2)


class SerializationTest(SimpleTestCase):
    """Test cases for the dotted word format."""

    def test_format_and_parse_word(self):
        """Test that x1.xi1.x2 is read and written back."""
        letters = parse_word('x1.xi1.x2')
        self.assertEqual(letters, (x(1), xi(1), x(2)))
        self.assertEqual(format_letters(letters), 'x1.xi1.x2')

    def test_empty_word_is_written_as_one(self):
        """Test the empty word text."""
        self.assertEqual(parse_word('1'), ())
        self.assertEqual(str(EMPTY_WORD), '1')

    def test_invalid_letter_is_rejected(self):
        """Test that unknown letters raise WordFormatError."""
        with self.assertRaises(WordFormatError):
            parse_word('x1.y2')
        with self.assertRaises(WordFormatError):
            parse_word('x0')

    def test_parse_hamiltonian_with_rational_coefficients(self):
        """Test reading one term per line."""
        element = parse_hamiltonian('1/2 * x1.xi1\n-3 * x2')
        self.assertEqual(element.coefficient((x(1), xi(1))), Fraction(1, 2))
        self.assertEqual(element.coefficient((x(2),)), -3)


class BracketTest(SimpleTestCase):
    """Test cases for the odd bracket."""

    def test_bracket_without_odd_letters_vanishes(self):
        """Test {x1, x2.x1} = 0 since even letters never pair."""
        self.assertTrue(bracket(word(x(1)), word(x(2), x(1))).is_zero())

    def test_bracket_with_constant_vanishes(self):
        """Test {1, b} = 0."""
        self.assertTrue(bracket(word(), word(x(1), xi(1))).is_zero())

    def test_bracket_of_quadratic_with_letters(self):
        """Test {x1.xi1, x1} = x1 and {x1.xi1, xi1} = -xi1."""
        self.assertEqual(bracket(word(x(1), xi(1)), word(x(1))), word(x(1)))
        self.assertEqual(bracket(word(x(1), xi(1)), word(xi(1))), word(xi(1), coefficient=-1))

    def test_bracket_of_odd_word_with_itself(self):
        """Test {x1.xi1, x1.xi1} = 0, computed two ways."""
        a = word(x(1), xi(1))
        self.assertTrue(bracket(a, a).is_zero())
        self.assertEqual(bracket(a, a), lie_derivative(hamiltonian_field(a), a))

    def test_bracket_of_longer_words(self):
        """Test {x1.xi1, x1.x1.xi1} = x1.x1.xi1 and {xi1, x1.x1.xi1} = 2 x1.xi1."""
        cubic = word(x(1), x(1), xi(1))
        self.assertEqual(bracket(word(x(1), xi(1)), cubic), cubic)
        self.assertEqual(bracket(word(xi(1)), cubic), word(x(1), xi(1), coefficient=2))

    def test_bracket_rejects_mismatched_spaces(self):
        """Test that elements of different spaces cannot be bracketed."""
        with self.assertRaises(SpaceMismatchError):
            bracket(word(x(1), space=SymplecticSpaceFactory(dim=1)), word(x(1), space=SymplecticSpaceFactory(dim=2)))

    def test_letter_outside_space_is_rejected(self):
        """Test that x2 does not live in Q^{1|1}."""
        with self.assertRaises(SpaceMismatchError):
            word(x(2), space=SymplecticSpaceFactory(dim=1))

    def test_bracket_oracle_suite(self):
        """Test {a, b} = L_α(b) on all monomials of length <= 3 over Q^{2|2}."""
        report = check_bracket_oracle(SymplecticSpaceFactory(dim=2), 3)
        self.assertTrue(report.passed, report.first_failure)

    def test_bracket_oracle_length_four(self):
        """Test {a, b} = L_α(b) on all monomials of length <= 4 over Q^{2|2}."""
        report = check_bracket_oracle(SymplecticSpaceFactory(dim=2), 4)
        self.assertTrue(report.passed, report.first_failure)

    def test_graded_symmetry(self):
        """Test {a, b} = (-1)^{ab} {b, a}."""
        report = check_graded_symmetry(SymplecticSpaceFactory(dim=2), 3)
        self.assertTrue(report.passed, report.first_failure)

    def test_odd_jacobi_identity(self):
        """Test the odd Jacobi identity on triples of length <= 2 over Q^{2|2}."""
        report = check_jacobi(SymplecticSpaceFactory(dim=2), 2)
        self.assertTrue(report.passed, report.first_failure)

    def test_odd_jacobi_identity_longer_words(self):
        """Test the odd Jacobi identity on triples of length <= 3 over Q^{1|1}."""
        report = check_jacobi(SymplecticSpaceFactory(dim=1), 3)
        self.assertTrue(report.passed, report.first_failure)


class VectorFieldTest(SimpleTestCase):
    """Test cases for Hamiltonian fields and Lie derivatives."""

    def test_constant_has_zero_field(self):
        """Test that d(1) = 0 gives the zero field."""
        self.assertTrue(hamiltonian_field(word()).is_zero())

    def test_field_of_quadratic_word(self):
        """Test α(x1.xi1) = x1 ∂_{x1} - xi1 ∂_{xi1}."""
        expected = VectorField.term((x(1),), x(1)) - VectorField.term((xi(1),), xi(1))
        self.assertEqual(hamiltonian_field(word(x(1), xi(1))), expected)

    def test_field_is_local(self):
        """Test that a word in x1, xi1 only differentiates in those directions."""
        field = hamiltonian_field(word(x(1), x(1), xi(1)))
        self.assertTrue(all(direction.index == 1 for _, direction in field.keys()))

    def test_zero_field_derivative(self):
        """Test L_0(b) = 0."""
        self.assertTrue(lie_derivative(VectorField(), word(x(1), xi(1))).is_zero())

    def test_euler_field_scales_even_word(self):
        """Test that x1 ∂_{x1} multiplies a word by its number of x1 letters."""
        b = word(x(1), x(2), x(1))
        self.assertEqual(lie_derivative(VectorField.term((x(1),), x(1)), b), b.scale(2))


class CobracketTest(SimpleTestCase):
    """Test cases for divergence and cobracket."""

    def test_short_words_have_zero_cobracket(self):
        """Test Δ vanishes on words of length <= 1."""
        self.assertTrue(cobracket(word()).is_zero())
        self.assertTrue(cobracket(word(xi(2))).is_zero())

    def test_cobracket_without_pairs_vanishes(self):
        """Test Δ(x1.x2.x3) = 0."""
        self.assertTrue(cobracket(word(x(1), x(2), x(3))).is_zero())

    def test_cobracket_of_quadratic_word(self):
        """Test Δ(x1.xi1) = 1 ⊗ 1."""
        self.assertEqual(cobracket(word(x(1), xi(1))), square((), ()))

    def test_cobracket_of_cubic_word(self):
        """Test Δ(x1.x1.xi1) = x1 ⊗ 1 + 1 ⊗ x1."""
        expected = square((x(1),), ()) + square((), (x(1),))
        self.assertEqual(cobracket(word(x(1), x(1), xi(1))), expected)

    def test_cobracket_halves_cancel_on_symmetric_word(self):
        """Test Δ(x1.xi1.xi1) = 0."""
        self.assertTrue(cobracket(word(x(1), xi(1), xi(1))).is_zero())

    def test_divergence_examples(self):
        """Test ∇(∂_{x1}) = 0, ∇(x1 ∂_{x1}) = 1 ⊗ 1, ∇(xi1 ∂_{xi1}) = -1 ⊗ 1, ∇(xi2 ∂_{x1}) = 0."""
        self.assertTrue(divergence(VectorField.term((), x(1))).is_zero())
        self.assertEqual(divergence(VectorField.term((x(1),), x(1))), square((), ()))
        self.assertEqual(divergence(VectorField.term((xi(1),), xi(1))), square((), (), -1))
        self.assertTrue(divergence(VectorField.term((xi(2),), x(1))).is_zero())

    def test_cobracket_is_half_divergence_of_field(self):
        """Test Δ = ½ ∇ ∘ α on monomials of length <= 4 over Q^{1|1}."""
        report = check_cobracket_divergence(SymplecticSpaceFactory(dim=1), 4)
        self.assertTrue(report.passed, report.first_failure)

    def test_involutivity(self):
        """Test [-,-] ∘ Δ = 0 on monomials of length <= 4 over Q^{1|1}."""
        report = check_involutivity(SymplecticSpaceFactory(dim=1), 4)
        self.assertTrue(report.passed, report.first_failure)

    def test_cojacobi(self):
        """Test the coJacobi identity on monomials of length <= 4 over Q^{1|1}."""
        report = check_cojacobi(SymplecticSpaceFactory(dim=1), 4)
        self.assertTrue(report.passed, report.first_failure)

    def test_involutivity_two_coordinates(self):
        """Test [-,-] ∘ Δ = 0 on monomials of length <= 4 over Q^{2|2}."""
        report = check_involutivity(SymplecticSpaceFactory(dim=2), 4)
        self.assertTrue(report.passed, report.first_failure)

    def test_cojacobi_two_coordinates(self):
        """Test the coJacobi identity on monomials of length <= 4 over Q^{2|2}."""
        report = check_cojacobi(SymplecticSpaceFactory(dim=2), 4)
        self.assertTrue(report.passed, report.first_failure)

    def test_compatibility(self):
        """Test the cocycle condition on pairs of total length <= 4 over Q^{1|1}."""
        report = check_compatibility(SymplecticSpaceFactory(dim=1), 3, 4)
        self.assertTrue(report.passed, report.first_failure)


class DivergenceTest(SimpleTestCase):
    """Test cases for the divergence of commutators and coordinate changes."""

    def test_divergence_of_commutator(self):
        """Test the commutator formula for monomial fields of length <= 2 over Q^{1|1}."""
        report = check_divergence_commutator(SymplecticSpaceFactory(dim=1), 2)
        self.assertTrue(report.passed, report.first_failure)

    def test_shear_is_symplectic(self):
        """Test that x1 -> x1 + x2, xi2 -> xi2 - xi1 preserves the pairing."""
        substitution = shear_substitution(SymplecticSpaceFactory(dim=2))
        self.assertTrue(substitution.is_symplectic())
        self.assertTrue(substitution.is_inverse())

    def test_shear_of_euler_field(self):
        """Test that x1 ∂_{x1} becomes (x1 + x2) ∂_{x1} with the same divergence."""
        substitution = shear_substitution(SymplecticSpaceFactory(dim=2))
        field = VectorField.term((x(1),), x(1))
        expected = VectorField.term((x(1),), x(1)) + VectorField.term((x(2),), x(1))
        self.assertEqual(substitution.conjugate_field(field), expected)
        self.assertEqual(divergence(expected), square((), ()))

    def test_shear_of_word(self):
        """Test that x1.xi1 becomes x1.xi1 + x2.xi1 and xi2 becomes xi2 - xi1."""
        space = SymplecticSpaceFactory(dim=2)
        substitution = shear_substitution(space)
        self.assertEqual(
            substitution.apply(word(x(1), xi(1), space=space)),
            word(x(1), xi(1), space=space) + word(x(2), xi(1), space=space),
        )
        self.assertEqual(substitution.apply(word(xi(2), space=space)), word(xi(2), space=space) - word(xi(1), space=space))

    def test_divergence_is_coordinate_independent(self):
        """Test ∇ commutes with the shear on monomial fields of length <= 2."""
        report = check_coordinate_independence(SymplecticSpaceFactory(dim=2), 2)
        self.assertTrue(report.passed, report.first_failure)

    def test_cyclic_words_enumeration(self):
        """Test the nonzero cyclic words of length <= 2 over Q^{1|1}."""
        words = cyclic_words(SymplecticSpaceFactory(dim=1), 2)
        self.assertEqual([format_letters(item.letters) for item in words], ['1', 'x1', 'xi1', 'x1.x1', 'x1.xi1'])


@tag('slow')
class FullScaleBialgebraTest(SimpleTestCase):
    """Words of length <= 4 over Q^{2|2}; run with `manage.py test --tag slow`."""

    def test_bialgebra_suite(self):
        """Test symmetry, Jacobi, involutivity, coJacobi and compatibility at total length <= 5."""
        report = run_bialgebra_suite(SymplecticSpaceFactory(dim=2), 4)
        self.assertTrue(report.passed, report.first_failure)
