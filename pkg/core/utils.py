"""
Shared helpers: exact rationals, Koszul signs and linear combinations.

Every algebraic value in the project (Hamiltonians, vector fields, chains of
graphs or of symmetric products) is a finite formal sum with exact rational
coefficients. ``LinearCombination`` is the common base; subclasses decide how
a raw key is brought to normal form through ``normalize_key``.
"""
import multiprocessing
from fractions import Fraction
from typing import Callable, Dict, Hashable, Iterable, Iterator, Optional, Tuple

from core.exceptions import WordFormatError


def to_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    return Fraction(value)


def format_rational(value) -> str:
    """Print a rational as ``p`` or ``p/q``."""
    value = to_fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f'{value.numerator}/{value.denominator}'


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise WordFormatError(f"Invalid rational coefficient: {text!r}")


def sign_of_parity(parity: int) -> int:
    return -1 if parity % 2 else 1


def koszul_sort(items: list, key: Callable, parity: Callable) -> Tuple[list, int, bool]:
    """
    Sort ``items`` by ``key`` with the Koszul sign of the reordering.

    Returns the sorted list, the accumulated sign and a flag that is set when
    two equal odd items are adjacent (the graded-symmetric product vanishes).
    """
    items = list(items)
    sign = 1
    # insertion sort: every adjacent swap contributes its own sign
    for i in range(1, len(items)):
        j = i
        while j > 0 and key(items[j - 1]) > key(items[j]):
            if parity(items[j - 1]) and parity(items[j]):
                sign = -sign
            items[j - 1], items[j] = items[j], items[j - 1]
            j -= 1
    for left, right in zip(items, items[1:]):
        if key(left) == key(right) and parity(left):
            return items, sign, True
    return items, sign, False


class LinearCombination:
    """
    Finite formal sum ``Σ c_k · k`` with ``Fraction`` coefficients.

    Keys are stored in normal form and zero coefficients are never stored.
    Instances are treated as immutable values: every operation returns a new
    object.
    """

    def __init__(self, terms: Optional[Iterable[Tuple[Hashable, object]]] = None):
        self._terms: Dict[Hashable, Fraction] = {}
        if terms is None:
            return
        if isinstance(terms, dict):
            terms = terms.items()
        for key, coefficient in terms:
            self.add_term(key, coefficient)

    @classmethod
    def normalize_key(cls, key) -> Optional[Tuple[Hashable, int]]:
        """Return ``(normal_key, sign)`` or ``None`` when the key is zero."""
        return key, 1

    def add_term(self, key, coefficient) -> None:
        coefficient = to_fraction(coefficient)
        if not coefficient:
            return
        normal = self.normalize_key(key)
        if normal is None:
            return
        key, sign = normal
        value = self._terms.get(key, 0) + sign * coefficient
        if value:
            self._terms[key] = value
        else:
            self._terms.pop(key, None)

    @classmethod
    def from_term(cls, key, coefficient=1):
        return cls([(key, coefficient)])

    def empty(self):
        """Zero element of the same space as ``self``."""
        return type(self)()

    def check_compatible(self, other) -> None:
        """Hook for subclasses that carry an ambient space."""

    def _new_from_normal(self, terms: Dict[Hashable, Fraction]):
        combination = self.empty()
        combination._terms = {key: value for key, value in terms.items() if value}
        return combination

    # -- container protocol --------------------------------------------------

    def items(self):
        return self._terms.items()

    def keys(self):
        return self._terms.keys()

    def coefficient(self, key) -> Fraction:
        normal = self.normalize_key(key)
        if normal is None:
            return Fraction(0)
        key, sign = normal
        return sign * self._terms.get(key, Fraction(0))

    def __iter__(self) -> Iterator:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and other == 0:
            return not self._terms
        if not isinstance(other, LinearCombination):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    # -- vector space operations ----------------------------------------------

    def __add__(self, other):
        self.check_compatible(other)
        terms = dict(self._terms)
        for key, value in other.items():
            terms[key] = terms.get(key, 0) + value
        return self._new_from_normal(terms)

    def __neg__(self):
        return self._new_from_normal({key: -value for key, value in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, factor):
        factor = to_fraction(factor)
        if not factor:
            return self.empty()
        return self._new_from_normal({key: factor * value for key, value in self._terms.items()})

    def __mul__(self, factor):
        if isinstance(factor, (int, Fraction)):
            return self.scale(factor)
        return NotImplemented

    __rmul__ = __mul__

    def sorted_items(self):
        return sorted(self._terms.items(), key=lambda item: self.sort_key(item[0]))

    @staticmethod
    def sort_key(key):
        return key

    def __repr__(self):
        if not self._terms:
            return f'{type(self).__name__}(0)'
        body = ' + '.join(f'{format_rational(value)}*{key!r}' for key, value in self.sorted_items())
        return f'{type(self).__name__}({body})'


class CheckReport:
    """Outcome of a verification suite: how many cases ran and which failed."""

    def __init__(self, name: str):
        self.name = name
        self.checked = 0
        self.failures = []
        # one (case, status, detail) row per top-level case, e.g. per generator
        self.cases = []

    def record(self, label: str, ok: bool, detail: str = '') -> bool:
        self.checked += 1
        if not ok:
            self.failures.append((label, detail))
        return ok

    def add_case(self, label: str, ok: bool, detail: str = '') -> None:
        self.cases.append((label, 'PASS' if ok else 'FAIL', detail))

    def merge(self, other: 'CheckReport') -> 'CheckReport':
        self.checked += other.checked
        self.failures.extend(other.failures)
        self.cases.extend(other.cases)
        return self

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def first_failure(self):
        return self.failures[0] if self.failures else None

    def summary(self) -> str:
        status = 'PASS' if self.passed else 'FAIL'
        return f'{self.name}: {status} ({self.checked} checked, {len(self.failures)} failed)'

    def __repr__(self):
        return f'<CheckReport {self.summary()}>'


def perfect_matchings(items) -> Iterable[Tuple[Tuple[object, object], ...]]:
    """All partitions of ``items`` into pairs, each pair in input order, pairs ordered by their first item."""
    items = list(items)
    if not items:
        yield ()
        return
    first, rest = items[0], items[1:]
    for position, partner in enumerate(rest):
        remaining = rest[:position] + rest[position + 1:]
        for matching in perfect_matchings(remaining):
            yield ((first, partner),) + matching


def parallel_map(function: Callable, items: Iterable, workers: int = 1) -> list:
    """``map`` over a process pool of ``workers`` processes; in-process when ``workers <= 1``."""
    items = list(items)
    workers = min(workers, multiprocessing.cpu_count(), len(items))
    if workers <= 1:
        return [function(item) for item in items]
    with multiprocessing.Pool(workers) as pool:
        return pool.map(function, items)
