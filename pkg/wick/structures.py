"""
Chord diagrams and decorated tensors.

A decorated tensor is a product of vertices. Each vertex is a product of
cyclic words together with powers of γ and ν, and its slots are the letters
read cycle by cycle in cycle order. The slots of a tensor are read vertex by
vertex; slot positions double as the half-edges of the graphs built by the
Wick map.
"""
from dataclasses import dataclass
from typing import Tuple

from core.utils import LinearCombination, format_rational
from words.serializers import format_letters
from words.structures import Letter, word_parity
from wick import CYCLE_SEPARATOR, VERTEX_SEPARATOR


@dataclass(frozen=True, order=True)
class ChordDiagram:
    """A partition of the slots ``0 .. 2k - 1`` into pairs ``(i_t, j_t)`` with ``i_t < j_t`` and ``i_1 < i_2 < ...``."""

    pairs: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        slots = sorted(slot for pair in self.pairs for slot in pair)
        if slots != list(range(2 * len(self.pairs))):
            raise ValueError(f"{self.pairs} is not a perfect matching of 0..{2 * len(self.pairs) - 1}")
        if any(first >= second for first, second in self.pairs) or list(self.pairs) != sorted(self.pairs):
            raise ValueError(f"Chord diagram pairs {self.pairs} are not normalized")

    @property
    def size(self) -> int:
        return len(self.pairs)

    def slot_order(self) -> Tuple[int, ...]:
        return tuple(slot for pair in self.pairs for slot in pair)


@dataclass(frozen=True, order=True)
class TensorVertex:
    cycles: Tuple[Tuple[Letter, ...], ...]
    gamma: int = 0
    nu: int = 0

    @property
    def slots(self) -> Tuple[Letter, ...]:
        return tuple(letter for cycle in self.cycles for letter in cycle)

    @property
    def parity(self) -> int:
        return word_parity(self.slots)

    def __str__(self):
        cycles = CYCLE_SEPARATOR.join(format_letters(cycle) for cycle in self.cycles)
        return f'gamma^{self.gamma} * nu^{self.nu} * ({cycles})'


@dataclass(frozen=True, order=True)
class DecoratedTensor:
    vertices: Tuple[TensorVertex, ...] = ()

    @property
    def slots(self) -> Tuple[Letter, ...]:
        return tuple(letter for vertex in self.vertices for letter in vertex.slots)

    @property
    def slot_count(self) -> int:
        return len(self.slots)

    @property
    def parity(self) -> int:
        return word_parity(self.slots)

    @property
    def dimension(self) -> int:
        """Smallest d with every letter in Q^{d|d}."""
        return max((letter.index for letter in self.slots), default=0)

    def __str__(self):
        if not self.vertices:
            return '1'
        return VERTEX_SEPARATOR.join(f'[{vertex}]' for vertex in self.vertices)


class TensorChain(LinearCombination):
    """
    Rational combination of decorated tensors.

    Keys are kept as given: rotating a cycle or reordering cycles and
    vertices yields another representative of the same element, and the
    Wick map gives the same graph chain for every representative.
    """

    @staticmethod
    def sort_key(key):
        return key.slot_count, key

    def __str__(self):
        if not self:
            return '0'
        return '\n'.join(f'{format_rational(value)} * {tensor}' for tensor, value in self.sorted_items())
