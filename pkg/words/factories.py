import factory

from words import Parity
from words.structures import CyclicWord, Letter, SymplecticSpace, x, xi


class SymplecticSpaceFactory(factory.Factory):
    """Factory for the odd symplectic space Q^{d|d}."""

    class Meta:
        model = SymplecticSpace

    dim = 2


class LetterFactory(factory.Factory):
    """Factory for Letter values."""

    class Meta:
        model = Letter

    parity = Parity.EVEN
    index = 1


class CyclicWordFactory(factory.Factory):
    """Factory for cyclic words; defaults to x1.xi1."""

    class Meta:
        model = CyclicWord

    letters = factory.LazyFunction(lambda: (x(1), xi(1)))
