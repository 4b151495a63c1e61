class RibbonError(ValueError):
    """Base class for domain errors raised by the ribbon apps."""


class SpaceMismatchError(RibbonError):
    """Operands live over different symplectic spaces."""


class MembershipError(RibbonError):
    """A chain leaves the subspace the operation is defined on."""


class NotSpecializedError(RibbonError):
    """A chain still carries a deformation parameter."""


class IncompleteDegreeRange(RibbonError):
    """A complex slice is missing a basis or boundary matrix."""


class EdgeNotFoundError(RibbonError):
    """The requested edge index is not an edge of the graph."""


class MalformedGraphError(RibbonError):
    """The genus recovered from a graph is not a nonnegative integer."""


class GraphFormatError(RibbonError):
    """A graph record does not follow the graph file format."""


class WordFormatError(RibbonError):
    """A word or chain does not follow the text serialization."""
