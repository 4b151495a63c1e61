import factory

from graphs.structures import StableRibbonGraph, Vertex


class VertexFactory(factory.Factory):
    """Factory for a trivalent undecorated vertex."""

    class Meta:
        model = Vertex

    cycles = ((0, 1, 2),)
    genus = 0
    boundary = 0


class ThetaGraphFactory(factory.Factory):
    """Two trivalent vertices joined by three edges; (g, n) = (0, 3)."""

    class Meta:
        model = StableRibbonGraph

    edges = ((0, 3), (1, 4), (2, 5))
    vertices = factory.LazyFunction(lambda: (Vertex(cycles=((0, 1, 2),)), Vertex(cycles=((3, 5, 4),))))


class TwoLoopGraphFactory(factory.Factory):
    """One 4-valent vertex with two interleaved loops; (g, n) = (1, 1)."""

    class Meta:
        model = StableRibbonGraph

    edges = ((0, 2), (1, 3))
    vertices = factory.LazyFunction(lambda: (Vertex(cycles=((0, 1, 2, 3),)),))


class DumbbellGraphFactory(factory.Factory):
    """Two one-loop vertices joined by a bridge; (g, n) = (0, 3)."""

    class Meta:
        model = StableRibbonGraph

    edges = ((0, 1), (2, 5), (3, 4))
    vertices = factory.LazyFunction(lambda: (Vertex(cycles=((0, 1, 2),)), Vertex(cycles=((3, 4, 5),))))


class LoopGraphFactory(factory.Factory):
    """A single loop at a vertex with a boundary defect; (g, n) = (0, 3)."""

    class Meta:
        model = StableRibbonGraph

    edges = ((0, 1),)
    vertices = factory.LazyFunction(lambda: (Vertex(cycles=((0, 1),), boundary=1),))


class SplitLoopGraphFactory(factory.Factory):
    """A loop joining two singleton cycles of one vertex; (g, n) = (1, 1)."""

    class Meta:
        model = StableRibbonGraph

    edges = ((0, 1),)
    vertices = factory.LazyFunction(lambda: (Vertex(cycles=((0,), (1,))),))
