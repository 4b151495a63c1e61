"""
Value types of the cyclic word algebra over the odd symplectic space Q^{d|d}.

Letters ``x_i`` are even and ``xi_i`` are odd; the pairing is symmetric,
``<x_i, xi_j> = <xi_j, x_i> = delta_ij``. Cyclic words are kept in the
rotation-minimal normal form produced by ``normalize_word``.
"""
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Optional, Sequence, Tuple

from core.exceptions import SpaceMismatchError, WordFormatError
from core.utils import LinearCombination, sign_of_parity
from words import Parity


@dataclass(frozen=True, order=True)
class Letter:
    """A coordinate function on Q^{d|d}; ordered even before odd, then by index."""

    parity: int
    index: int

    def __post_init__(self):
        if self.parity not in (Parity.EVEN, Parity.ODD):
            raise WordFormatError(f"Invalid letter parity: {self.parity}")
        if self.index < 1:
            raise WordFormatError(f"Letter index must be positive, got {self.index}")

    @property
    def kind(self) -> str:
        return dict(Parity.CHOICES)[self.parity]

    @property
    def is_odd(self) -> bool:
        return self.parity == Parity.ODD

    def dual(self) -> 'Letter':
        """The unique letter pairing to one with this letter."""
        return Letter(1 - self.parity, self.index)

    def __str__(self):
        return f'{self.kind}{self.index}'

    __repr__ = __str__


def x(index: int) -> Letter:
    return Letter(Parity.EVEN, index)


def xi(index: int) -> Letter:
    return Letter(Parity.ODD, index)


def pairing(first: Letter, second: Letter) -> int:
    if first.index == second.index and first.parity != second.parity:
        return 1
    return 0


def word_parity(letters: Iterable[Letter]) -> int:
    return sum(letter.parity for letter in letters) % 2


@dataclass(frozen=True)
class SymplecticSpace:
    dim: int

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError(f"Dimension must be positive, got {self.dim}")

    def generators(self) -> Tuple[Letter, ...]:
        return tuple(x(i) for i in range(1, self.dim + 1)) + tuple(xi(i) for i in range(1, self.dim + 1))

    def contains(self, letter: Letter) -> bool:
        return letter.index <= self.dim

    def check_letters(self, letters: Iterable[Letter]) -> None:
        for letter in letters:
            if not self.contains(letter):
                raise SpaceMismatchError(f"Letter {letter} does not live in Q^{{{self.dim}|{self.dim}}}")

    pairing = staticmethod(pairing)


@dataclass(frozen=True, order=True)
class CyclicWord:
    """A word up to cyclic rotation; construct normal forms via ``normalize_word``."""

    letters: Tuple[Letter, ...] = field(default_factory=tuple)

    @property
    def parity(self) -> int:
        return word_parity(self.letters)

    @property
    def is_empty(self) -> bool:
        return not self.letters

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        from words.serializers import format_letters
        return format_letters(self.letters)

    __repr__ = __str__


EMPTY_WORD = CyclicWord(())


@lru_cache(maxsize=65536)
def _rotation_normal_form(letters: Tuple[Letter, ...]) -> Tuple[Optional[Tuple[Letter, ...]], int]:
    length = len(letters)
    if length <= 1:
        return letters, 1
    parities = [letter.parity for letter in letters]
    total = sum(parities) % 2
    best = None
    best_sign = 0
    prefix = 0
    for shift in range(length):
        # moving the first `shift` letters to the back
        candidate = letters[shift:] + letters[:shift]
        sign = sign_of_parity(prefix * (total - prefix))
        if best is None or candidate < best:
            best, best_sign = candidate, sign
        elif candidate == best and sign != best_sign:
            return None, 0
        prefix = (prefix + parities[shift]) % 2
    return best, best_sign


def normalize_word(letters: Sequence[Letter]) -> Tuple[Optional[CyclicWord], int]:
    """
    Bring a word to its rotation-minimal normal form.

    Returns ``(word, sign)`` with ``word`` equal to ``sign`` times the normal
    form, or ``(None, 0)`` when the word equals its own negative.
    """
    if isinstance(letters, CyclicWord):
        letters = letters.letters
    normal, sign = _rotation_normal_form(tuple(letters))
    if normal is None:
        return None, 0
    return CyclicWord(normal), sign


class HamiltonianElement(LinearCombination):
    """Element of h[V]: a rational combination of cyclic words."""

    def __init__(self, terms=None, space: Optional[SymplecticSpace] = None):
        self.space = space
        super().__init__(terms)

    @classmethod
    def normalize_key(cls, key):
        word, sign = normalize_word(key)
        if word is None:
            return None
        return word, sign

    @classmethod
    def monomial(cls, letters: Sequence[Letter], coefficient=1, space: Optional[SymplecticSpace] = None):
        return cls([(tuple(letters), coefficient)], space=space)

    def add_term(self, key, coefficient) -> None:
        if self.space is not None:
            self.space.check_letters(key.letters if isinstance(key, CyclicWord) else key)
        super().add_term(key, coefficient)

    def empty(self):
        return type(self)(space=self.space)

    def check_compatible(self, other) -> None:
        other_space = getattr(other, 'space', None)
        if self.space is not None and other_space is not None and self.space != other_space:
            raise SpaceMismatchError(
                f"Cannot combine elements of Q^{{{self.space.dim}|{self.space.dim}}} "
                f"and Q^{{{other_space.dim}|{other_space.dim}}}"
            )

    @staticmethod
    def sort_key(word):
        return len(word), word

    def __str__(self):
        from words.serializers import format_hamiltonian
        return format_hamiltonian(self)


class VectorField(LinearCombination):
    """
    Derivation of the tensor algebra, ``Σ c (f_1...f_k) ∂_z``.

    Keys are ``(letters, direction)`` with ``letters`` a plain (non-cyclic)
    tuple.
    """

    @classmethod
    def normalize_key(cls, key):
        letters, direction = key
        return (tuple(letters), direction), 1

    @classmethod
    def term(cls, letters: Sequence[Letter], direction: Letter, coefficient=1):
        return cls([((tuple(letters), direction), coefficient)])

    @staticmethod
    def key_parity(key) -> int:
        letters, direction = key
        return (word_parity(letters) + direction.parity) % 2

    @staticmethod
    def sort_key(key):
        letters, direction = key
        return direction, len(letters), letters


class TensorSquareElement(LinearCombination):
    """Element of h[V] ⊗ h[V]; both tensor factors are cyclic normal forms."""

    @classmethod
    def normalize_key(cls, key):
        left, right = key
        left, left_sign = normalize_word(left)
        right, right_sign = normalize_word(right)
        if left is None or right is None:
            return None
        return (left, right), left_sign * right_sign

    @staticmethod
    def sort_key(key):
        left, right = key
        return len(left) + len(right), left, right
