"""Even linear changes of coordinates acting on words, fields and tensors."""
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Dict, Mapping, Sequence, Tuple

from words.structures import (
    HamiltonianElement,
    Letter,
    SymplecticSpace,
    TensorSquareElement,
    VectorField,
    pairing,
    x,
    xi,
)

LinearForm = Tuple[Tuple[Letter, int], ...]


@dataclass(frozen=True)
class LinearSubstitution:
    """
    A parity-preserving automorphism φ of V* given on generators.

    Letters missing from ``images`` are fixed. ``inverse_images`` describes
    φ⁻¹ the same way; ``is_inverse`` checks the pair on generators.
    """

    space: SymplecticSpace
    images: Mapping[Letter, LinearForm]
    inverse_images: Mapping[Letter, LinearForm]

    def image(self, letter: Letter) -> LinearForm:
        return self.images.get(letter, ((letter, 1),))

    def inverse_image(self, letter: Letter) -> LinearForm:
        return self.inverse_images.get(letter, ((letter, 1),))

    def apply_to_letters(self, letters: Sequence[Letter]) -> Dict[Tuple[Letter, ...], Fraction]:
        result: Dict[Tuple[Letter, ...], Fraction] = {}
        for choice in product(*(self.image(letter) for letter in letters)):
            word = tuple(letter for letter, _ in choice)
            coefficient = Fraction(1)
            for _, value in choice:
                coefficient *= value
            result[word] = result.get(word, 0) + coefficient
        return {word: value for word, value in result.items() if value}

    def apply(self, element: HamiltonianElement) -> HamiltonianElement:
        result = element.empty()
        for word, value in element.items():
            for letters, coefficient in self.apply_to_letters(word.letters).items():
                result.add_term(letters, coefficient * value)
        return result

    def apply_to_tensor(self, tensor: TensorSquareElement) -> TensorSquareElement:
        result = TensorSquareElement()
        for (left, right), value in tensor.items():
            for left_letters, left_value in self.apply_to_letters(left.letters).items():
                for right_letters, right_value in self.apply_to_letters(right.letters).items():
                    result.add_term((left_letters, right_letters), left_value * right_value * value)
        return result

    def conjugate_field(self, field: VectorField) -> VectorField:
        """The field φ ∘ ξ ∘ φ⁻¹, read off on generators: ξ'(y) = φ(ξ(φ⁻¹ y))."""
        result = VectorField()
        for target in self.space.generators():
            for source, weight in self.inverse_image(target):
                for (letters, direction), value in field.items():
                    if direction != source:
                        continue
                    for image, coefficient in self.apply_to_letters(letters).items():
                        result.add_term((image, target), weight * coefficient * value)
        return result

    def is_inverse(self) -> bool:
        for letter in self.space.generators():
            composite: Dict[Letter, Fraction] = {}
            for middle, weight in self.inverse_image(letter):
                for target, value in self.image(middle):
                    composite[target] = composite.get(target, 0) + weight * value
            if {key: value for key, value in composite.items() if value} != {letter: 1}:
                return False
        return True

    def is_symplectic(self) -> bool:
        generators = self.space.generators()
        for first in generators:
            for second in generators:
                value = sum(
                    a_value * b_value * pairing(a, b)
                    for a, a_value in self.image(first)
                    for b, b_value in self.image(second)
                )
                if value != pairing(first, second):
                    return False
        return True


def shear_substitution(space: SymplecticSpace) -> LinearSubstitution:
    """x1 -> x1 + x2 together with the dual correction xi2 -> xi2 - xi1."""
    if space.dim < 2:
        raise ValueError("The shear substitution needs at least two coordinates")
    return LinearSubstitution(
        space=space,
        images={
            x(1): ((x(1), 1), (x(2), 1)),
            xi(2): ((xi(2), 1), (xi(1), -1)),
        },
        inverse_images={
            x(1): ((x(1), 1), (x(2), -1)),
            xi(2): ((xi(2), 1), (xi(1), 1)),
        },
    )
