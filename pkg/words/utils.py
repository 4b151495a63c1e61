"""
Operations of the odd Lie bialgebra h[V] of cyclic words.

Sign conventions: rotating a word so that its i-th letter comes first costs
``(-1)^{|a_1..a_{i-1}| |a_i..a_n|}``; the bracket is then

    {a, b} = Σ ε_i ε'_j (-1)^{|b_j||A_i|} <a_i, b_j> [A_i B_j]

where ``A_i`` is ``a`` with ``a_i`` removed, read cyclically from ``a_{i+1}``.
With these signs ``{a, b} = (-1)^{|a||b|} {b, a}`` and the bracket agrees
with the Lie derivative along the Hamiltonian vector field of ``a``.
"""
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Dict, Iterator, List, Sequence, Tuple

from core.utils import sign_of_parity
from words.structures import (
    CyclicWord,
    HamiltonianElement,
    Letter,
    SymplecticSpace,
    TensorSquareElement,
    VectorField,
    normalize_word,
    pairing,
    word_parity,
)

HALF = Fraction(1, 2)

__all__ = [
    'normalize_word',
    'bracket',
    'cobracket',
    'divergence',
    'hamiltonian_field',
    'lie_derivative',
    'lie_derivative_tensor',
    'field_commutator',
    'apply_field',
    'cyclic_words',
]


def rotation_sign(letters: Sequence[Letter], position: int) -> int:
    """Sign of rotating ``letters`` so that ``letters[position]`` comes first."""
    return sign_of_parity(word_parity(letters[:position]) * word_parity(letters[position:]))


def remainder(letters: Tuple[Letter, ...], position: int) -> Tuple[Letter, ...]:
    return letters[position + 1:] + letters[:position]


# ==================== bracket ====================

@lru_cache(maxsize=65536)
def bracket_words(first: Tuple[Letter, ...], second: Tuple[Letter, ...]) -> Tuple[Tuple[Tuple[Letter, ...], int], ...]:
    terms = []
    for i, left in enumerate(first):
        rest_first = remainder(first, i)
        parity_rest_first = word_parity(rest_first)
        for j, right in enumerate(second):
            if not pairing(left, right):
                continue
            sign = (
                rotation_sign(first, i)
                * rotation_sign(second, j)
                * sign_of_parity(right.parity * parity_rest_first)
            )
            terms.append((rest_first + remainder(second, j), sign))
    return tuple(terms)


def bracket(a: HamiltonianElement, b: HamiltonianElement) -> HamiltonianElement:
    """The odd Poisson bracket {a, b}, extended bilinearly."""
    a.check_compatible(b)
    result = HamiltonianElement(space=a.space or b.space)
    for first, first_value in a.items():
        for second, second_value in b.items():
            for letters, sign in bracket_words(first.letters, second.letters):
                result.add_term(letters, sign * first_value * second_value)
    return result


# ==================== vector fields ====================

def hamiltonian_field(a: HamiltonianElement) -> VectorField:
    """
    The field α with da = i_α(ω).

    The ∂_y component is the cyclic derivative of ``a`` by the letter dual to
    ``y``; field parity is ``|a| + 1``.
    """
    field = VectorField()
    for word, value in a.items():
        letters = word.letters
        for i, letter in enumerate(letters):
            direction = letter.dual()
            rest = remainder(letters, i)
            sign = rotation_sign(letters, i) * sign_of_parity(direction.parity * word_parity(rest))
            field.add_term((rest, direction), sign * value)
    return field


def _derive(letters: Sequence[Letter], image: Tuple[Letter, ...], direction: Letter, parity: int) -> Iterator[Tuple[Tuple[Letter, ...], int]]:
    # the derivation image·∂_direction of the given parity, applied to a plain word
    passed = 0
    for t, letter in enumerate(letters):
        if letter == direction:
            yield tuple(letters[:t]) + image + tuple(letters[t + 1:]), sign_of_parity(parity * passed)
        passed = (passed + letter.parity) % 2


def apply_field(field: VectorField, letters: Sequence[Letter]) -> Dict[Tuple[Letter, ...], Fraction]:
    """Action of a derivation of T(V*) on a plain (non-cyclic) word."""
    result: Dict[Tuple[Letter, ...], Fraction] = {}
    for key, value in field.items():
        image, direction = key
        for word, sign in _derive(letters, image, direction, VectorField.key_parity(key)):
            result[word] = result.get(word, 0) + sign * value
    return {word: value for word, value in result.items() if value}


def lie_derivative(field: VectorField, b: HamiltonianElement) -> HamiltonianElement:
    """L_ξ(b): the derivation applied letter by letter, then re-normalized cyclically."""
    result = b.empty()
    for word, value in b.items():
        for letters, coefficient in apply_field(field, word.letters).items():
            result.add_term(letters, coefficient * value)
    return result


def lie_derivative_tensor(field: VectorField, tensor: TensorSquareElement) -> TensorSquareElement:
    """(L_ξ ⊗ 1 + 1 ⊗ L_ξ) with the Koszul sign ``(-1)^{|ξ||u|}`` on the second slot."""
    result = TensorSquareElement()
    for key, field_value in field.items():
        single = VectorField.from_term(key, field_value)
        parity = VectorField.key_parity(key)
        for (left, right), value in tensor.items():
            for letters, coefficient in apply_field(single, left.letters).items():
                result.add_term((letters, right.letters), coefficient * value)
            sign = sign_of_parity(parity * left.parity)
            for letters, coefficient in apply_field(single, right.letters).items():
                result.add_term((left.letters, letters), sign * coefficient * value)
    return result


def field_commutator(first: VectorField, second: VectorField) -> VectorField:
    """[ξ, γ]_z = ξ(γ_z) - (-1)^{|ξ||γ|} γ(ξ_z), termwise on homogeneous parts."""
    result = VectorField()
    for first_key, first_value in first.items():
        first_parity = VectorField.key_parity(first_key)
        first_image, first_direction = first_key
        for second_key, second_value in second.items():
            second_parity = VectorField.key_parity(second_key)
            second_image, second_direction = second_key
            weight = first_value * second_value
            for letters, sign in _derive(second_image, first_image, first_direction, first_parity):
                result.add_term((letters, second_direction), sign * weight)
            swap = sign_of_parity(first_parity * second_parity)
            for letters, sign in _derive(first_image, second_image, second_direction, second_parity):
                result.add_term((letters, first_direction), -swap * sign * weight)
    return result


# ==================== divergence and cobracket ====================

def divergence(field: VectorField) -> TensorSquareElement:
    """∇(f_1..f_k ∂_z) = Σ_{f_t = z} (-1)^{|z|(1 + |f_{>t}|)} [f_{<t}] ⊗ [f_{>t}]."""
    result = TensorSquareElement()
    for (letters, direction), value in field.items():
        for t, letter in enumerate(letters):
            if letter != direction:
                continue
            after = letters[t + 1:]
            sign = sign_of_parity(direction.parity * (1 + word_parity(after)))
            result.add_term((letters[:t], after), sign * value)
    return result


@lru_cache(maxsize=65536)
def cobracket_word(letters: Tuple[Letter, ...]) -> Tuple[Tuple[Tuple[Tuple[Letter, ...], Tuple[Letter, ...]], Fraction], ...]:
    terms = []
    length = len(letters)
    for i, first in enumerate(letters):
        rest = remainder(letters, i)
        parity_rest = word_parity(rest)
        epsilon = rotation_sign(letters, i)
        for j, second in enumerate(letters):
            if i == j or not pairing(first, second):
                continue
            position = (j - i - 1) % length
            left, right = rest[:position], rest[position + 1:]
            sign = (
                epsilon
                * sign_of_parity(second.parity * parity_rest)
                * sign_of_parity(second.parity * (1 + word_parity(right)))
            )
            terms.append(((left, right), sign * HALF))
    return tuple(terms)


def cobracket(a: HamiltonianElement) -> TensorSquareElement:
    """
    The cobracket Δ = ½ ∇ ∘ hamiltonian_field, by its explicit formula.

    Summed over ordered pairs ``i != j`` of complementary letters, which is
    the ``i < j`` sum symmetrized by ``1 + (1 2)``.
    """
    result = TensorSquareElement()
    for word, value in a.items():
        for key, coefficient in cobracket_word(word.letters):
            result.add_term(key, coefficient * value)
    return result


# ==================== enumeration ====================

def cyclic_words(space: SymplecticSpace, max_length: int, min_length: int = 0) -> List[CyclicWord]:
    """All nonzero cyclic normal forms with ``min_length <= length <= max_length``."""
    words = set()
    generators = space.generators()
    for length in range(min_length, max_length + 1):
        for letters in product(generators, repeat=length):
            word, sign = normalize_word(letters)
            if word is not None:
                words.add(word)
    return sorted(words, key=HamiltonianElement.sort_key)
