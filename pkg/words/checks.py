"""
Brute-force verification of the Lie bialgebra structure on h[V].

The bialgebra axioms hold for the parity reversion Πh, where ``Πw`` has
parity ``|w| + 1``, the Lie bracket is ``[Πa, Πb] = (-1)^{|a|+1} Π{a, b}``
and the cobracket is ``δ(Πw) = Σ c (-1)^{|u|} Πu ⊗ Πv`` for ``Δw = Σ c u ⊗ v``.
"""
import logging
from fractions import Fraction
from itertools import product
from typing import Dict, Tuple

from core.utils import CheckReport, sign_of_parity
from words.serializers import format_letters
from words.structures import CyclicWord, HamiltonianElement, SymplecticSpace, VectorField
from words.substitutions import shear_substitution
from words.utils import (
    bracket,
    cobracket,
    cyclic_words,
    divergence,
    field_commutator,
    hamiltonian_field,
    lie_derivative,
    lie_derivative_tensor,
)

logger = logging.getLogger(__name__)

Tensor = Dict[Tuple[CyclicWord, ...], Fraction]


def _word(letters) -> HamiltonianElement:
    return HamiltonianElement.monomial(letters)


def _label(*words) -> str:
    return ', '.join(format_letters(word.letters) for word in words)


def _add(target: Tensor, key, value) -> None:
    value = target.get(key, 0) + value
    if value:
        target[key] = value
    else:
        target.pop(key, None)


def _pi_parity(word: CyclicWord) -> int:
    return (word.parity + 1) % 2


def pi_bracket(first: CyclicWord, second: CyclicWord) -> HamiltonianElement:
    return bracket(_word(first.letters), _word(second.letters)).scale(sign_of_parity(first.parity + 1))


def pi_cobracket(word: CyclicWord) -> Tensor:
    result: Tensor = {}
    for (left, right), value in cobracket(_word(word.letters)).items():
        _add(result, (left, right), sign_of_parity(left.parity) * value)
    return result


def _act_on_square(element: CyclicWord, tensor: Tensor) -> Tensor:
    # [x, u ⊗ v] = [x, u] ⊗ v + (-1)^{xu} u ⊗ [x, v] in Πh
    result: Tensor = {}
    parity = _pi_parity(element)
    for (left, right), value in tensor.items():
        for word, coefficient in pi_bracket(element, left).items():
            _add(result, (word, right), coefficient * value)
        sign = sign_of_parity(parity * _pi_parity(left))
        for word, coefficient in pi_bracket(element, right).items():
            _add(result, (left, word), sign * coefficient * value)
    return result


def _monomials(space: SymplecticSpace, max_length: int, min_length: int = 0):
    return cyclic_words(space, max_length, min_length=min_length)


# ==================== bracket ====================

def check_bracket_oracle(space: SymplecticSpace, max_length: int) -> CheckReport:
    """{a, b} = L_{α(a)} b on all monomial pairs."""
    report = CheckReport('bracket-oracle')
    words = _monomials(space, max_length)
    for first, second in product(words, repeat=2):
        a, b = _word(first.letters), _word(second.letters)
        report.record(_label(first, second), bracket(a, b) == lie_derivative(hamiltonian_field(a), b))
    logger.info(report.summary())
    return report


def check_graded_symmetry(space: SymplecticSpace, max_length: int) -> CheckReport:
    report = CheckReport('bracket-symmetry')
    words = _monomials(space, max_length)
    for first, second in product(words, repeat=2):
        a, b = _word(first.letters), _word(second.letters)
        expected = bracket(b, a).scale(sign_of_parity(first.parity * second.parity))
        report.record(_label(first, second), bracket(a, b) == expected)
    return report


def check_jacobi(space: SymplecticSpace, max_length: int) -> CheckReport:
    """{a,{b,c}} = (-1)^{|a|+1}{{a,b},c} + (-1)^{(|a|+1)(|b|+1)}{b,{a,c}}."""
    report = CheckReport('jacobi')
    words = _monomials(space, max_length, min_length=1)
    for first, second, third in product(words, repeat=3):
        a, b, c = (_word(word.letters) for word in (first, second, third))
        left = bracket(a, bracket(b, c))
        right = (
            bracket(bracket(a, b), c).scale(sign_of_parity(first.parity + 1))
            + bracket(b, bracket(a, c)).scale(sign_of_parity((first.parity + 1) * (second.parity + 1)))
        )
        report.record(_label(first, second, third), left == right)
    logger.info(report.summary())
    return report


# ==================== cobracket ====================

def check_cobracket_divergence(space: SymplecticSpace, max_length: int) -> CheckReport:
    """Δ = ½ ∇ ∘ hamiltonian_field."""
    report = CheckReport('cobracket-divergence')
    for word in _monomials(space, max_length):
        a = _word(word.letters)
        report.record(_label(word), cobracket(a) == divergence(hamiltonian_field(a)).scale(Fraction(1, 2)))
    return report


def check_involutivity(space: SymplecticSpace, max_length: int) -> CheckReport:
    """[-,-] ∘ δ = 0, which on h reads Σ c {u, v} = 0."""
    report = CheckReport('involutivity')
    for word in _monomials(space, max_length):
        total = HamiltonianElement()
        for (left, right), value in cobracket(_word(word.letters)).items():
            total = total + bracket(_word(left.letters), _word(right.letters)).scale(value)
        report.record(_label(word), total.is_zero())
    logger.info(report.summary())
    return report


def check_cojacobi(space: SymplecticSpace, max_length: int) -> CheckReport:
    """(1 + τ + τ²) ∘ (δ ⊗ 1) ∘ δ = 0 with τ the signed cyclic permutation."""
    report = CheckReport('cojacobi')
    for word in _monomials(space, max_length):
        iterated: Tensor = {}
        for (left, right), value in pi_cobracket(word).items():
            for (first, second), coefficient in pi_cobracket(left).items():
                _add(iterated, (first, second, right), coefficient * value)
        total: Tensor = {}
        for (first, second, third), value in iterated.items():
            p1, p2, p3 = _pi_parity(first), _pi_parity(second), _pi_parity(third)
            _add(total, (first, second, third), value)
            _add(total, (third, first, second), sign_of_parity(p3 * (p1 + p2)) * value)
            _add(total, (second, third, first), sign_of_parity(p1 * (p2 + p3)) * value)
        report.record(_label(word), not total)
    logger.info(report.summary())
    return report


def check_compatibility(space: SymplecticSpace, max_length: int, max_total_length: int) -> CheckReport:
    """δ[x, y] = x·δ(y) - (-1)^{xy} y·δ(x) on Πh."""
    report = CheckReport('compatibility')
    words = _monomials(space, max_length)
    for first, second in product(words, repeat=2):
        if len(first) + len(second) > max_total_length:
            continue
        left: Tensor = {}
        for word, value in pi_bracket(first, second).items():
            for key, coefficient in pi_cobracket(word).items():
                _add(left, key, coefficient * value)
        right = dict(_act_on_square(first, pi_cobracket(second)))
        sign = sign_of_parity(_pi_parity(first) * _pi_parity(second))
        for key, value in _act_on_square(second, pi_cobracket(first)).items():
            _add(right, key, -sign * value)
        report.record(_label(first, second), left == right)
    logger.info(report.summary())
    return report


# ==================== divergence ====================

def monomial_fields(space: SymplecticSpace, max_length: int):
    fields = []
    generators = space.generators()
    for length in range(max_length + 1):
        for letters in product(generators, repeat=length):
            for direction in generators:
                fields.append(VectorField.term(letters, direction))
    return fields


def check_divergence_commutator(space: SymplecticSpace, max_length: int) -> CheckReport:
    """∇[ξ, γ] = L_ξ ∇γ - (-1)^{ξγ} L_γ ∇ξ for monomial fields."""
    report = CheckReport('divergence-commutator')
    fields = monomial_fields(space, max_length)
    for first, second in product(fields, repeat=2):
        (first_key,), (second_key,) = first.keys(), second.keys()
        sign = sign_of_parity(VectorField.key_parity(first_key) * VectorField.key_parity(second_key))
        left = divergence(field_commutator(first, second))
        right = lie_derivative_tensor(first, divergence(second)) - lie_derivative_tensor(second, divergence(first)).scale(sign)
        report.record(f'{first!r}, {second!r}', left == right)
    logger.info(report.summary())
    return report


def check_coordinate_independence(space: SymplecticSpace, max_length: int) -> CheckReport:
    """∇(φ ξ φ⁻¹) = (φ ⊗ φ) ∇ξ and φ{a, b} = {φa, φb} for the shear substitution."""
    report = CheckReport('coordinate-independence')
    substitution = shear_substitution(space)
    for field in monomial_fields(space, max_length):
        left = divergence(substitution.conjugate_field(field))
        right = substitution.apply_to_tensor(divergence(field))
        report.record(repr(field), left == right)
    words = _monomials(space, max_length)
    for first, second in product(words, repeat=2):
        a, b = _word(first.letters), _word(second.letters)
        left = substitution.apply(bracket(a, b))
        right = bracket(substitution.apply(a), substitution.apply(b))
        report.record(f'bracket {_label(first, second)}', left == right)
    logger.info(report.summary())
    return report


def run_bialgebra_suite(space: SymplecticSpace, max_length: int) -> CheckReport:
    report = CheckReport('bialgebra')
    report.merge(check_graded_symmetry(space, max_length))
    report.merge(check_jacobi(space, min(max_length, 3)))
    report.merge(check_cobracket_divergence(space, max_length))
    report.merge(check_involutivity(space, max_length))
    report.merge(check_cojacobi(space, max_length))
    report.merge(check_compatibility(space, max_length, max_length + 1))
    return report


def run_divergence_suite(space: SymplecticSpace, max_length: int) -> CheckReport:
    report = CheckReport('divergence')
    report.merge(check_divergence_commutator(space, min(max_length, 2)))
    report.merge(check_coordinate_independence(space, min(max_length, 2)))
    return report
