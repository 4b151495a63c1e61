import factory

from wick.structures import ChordDiagram, DecoratedTensor, TensorVertex
from words.structures import x, xi


class ChordDiagramFactory(factory.Factory):
    """Factory for a chord diagram; defaults to the single chord on two slots."""

    class Meta:
        model = ChordDiagram

    pairs = ((0, 1),)


class TensorVertexFactory(factory.Factory):
    """A vertex carrying the cycle x1.xi1 and one power of ν."""

    class Meta:
        model = TensorVertex

    cycles = factory.LazyFunction(lambda: ((x(1), xi(1)),))
    gamma = 0
    nu = 1


class DecoratedTensorFactory(factory.Factory):
    class Meta:
        model = DecoratedTensor

    vertices = factory.LazyFunction(lambda: (TensorVertexFactory(),))
