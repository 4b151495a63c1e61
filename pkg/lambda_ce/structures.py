"""
Chains of the two-parameter family Λ_{γ,ν}.

A chain is a rational combination of keys ``(γ-exponent, ν-exponent,
SymProduct)``. Empty-word factors are absorbed into powers of ν when a
product is normalized, so ``S(h) = Q[ν] ⊗ S(h_{≥1})`` holds literally.
"""
from dataclasses import dataclass
from typing import Iterable, Optional, Tuple

from core.exceptions import MembershipError
from core.utils import LinearCombination, koszul_sort
from words.structures import CyclicWord, HamiltonianElement, normalize_word


@dataclass(frozen=True, order=True)
class SymProduct:
    """Graded-symmetric product of nonempty cyclic words in canonical factor order."""

    factors: Tuple[CyclicWord, ...] = ()

    @property
    def parity(self) -> int:
        return sum(factor.parity for factor in self.factors) % 2

    @property
    def total_length(self) -> int:
        return sum(len(factor) for factor in self.factors)

    @property
    def is_empty(self) -> bool:
        return not self.factors

    def __len__(self):
        return len(self.factors)

    def __str__(self):
        from lambda_ce.serializers import format_product
        return format_product(self)

    __repr__ = __str__


EMPTY_PRODUCT = SymProduct(())


def _factor_key(word: CyclicWord):
    return HamiltonianElement.sort_key(word)


def normalize_product(factors: Iterable) -> Optional[Tuple[SymProduct, int, int]]:
    """
    Normal form of a product of words.

    Returns ``(product, sign, extra_nu)`` or ``None`` when the product
    vanishes (a zero word, or a repeated odd factor).
    """
    if isinstance(factors, SymProduct):
        return factors, 1, 0
    sign = 1
    extra_nu = 0
    words = []
    for factor in factors:
        word, word_sign = normalize_word(factor)
        if word is None:
            return None
        sign *= word_sign
        if word.is_empty:
            extra_nu += 1
            continue
        words.append(word)
    words, sort_sign, vanishes = koszul_sort(words, key=_factor_key, parity=lambda word: word.parity)
    if vanishes:
        return None
    return SymProduct(tuple(words)), sign * sort_sign, extra_nu


@dataclass(frozen=True)
class LinearSymplecticElement:
    """A quadratic word, i.e. an element of pe[Q^{d|d}] inside h."""

    word: CyclicWord

    def __post_init__(self):
        if len(self.word) != 2:
            raise ValueError(f"Linear symplectic elements are quadratic words, got length {len(self.word)}")

    def as_hamiltonian(self) -> HamiltonianElement:
        return HamiltonianElement.from_term(self.word)


def is_member(key) -> bool:
    """Whether a normalized key lies in Λ_{γ,ν}."""
    gamma, nu, product = key
    if product.is_empty:
        return False
    if len(product) == 1 and len(product.factors[0]) == 1:
        return gamma + nu >= 1
    return True


class CEChain(LinearCombination):
    """
    Element of Q[γ,ν] ⊗ S(h_{≥1}).

    Terms with an empty product are scalars of the trivial ideal Q[γ,ν] and
    are dropped unless ``keep_scalars`` is set.
    """

    def __init__(self, terms=None, keep_scalars: bool = False):
        self.keep_scalars = keep_scalars
        super().__init__(terms)

    def normalize_key(self, key):
        gamma, nu, factors = key
        if gamma < 0 or nu < 0:
            raise ValueError(f"Exponents must be nonnegative, got gamma^{gamma} nu^{nu}")
        normal = normalize_product(factors)
        if normal is None:
            return None
        product, sign, extra_nu = normal
        if product.is_empty and not self.keep_scalars:
            return None
        return (gamma, nu + extra_nu, product), sign

    @classmethod
    def monomial(cls, factors, coefficient=1, gamma: int = 0, nu: int = 0, keep_scalars: bool = False):
        return cls([((gamma, nu, tuple(factors)), coefficient)], keep_scalars=keep_scalars)

    def empty(self):
        return type(self)(keep_scalars=self.keep_scalars)

    def is_member(self) -> bool:
        return all(is_member(key) for key in self.keys())

    def check_membership(self) -> None:
        for key in self.keys():
            if not is_member(key):
                gamma, nu, product = key
                raise MembershipError(f"gamma^{gamma} nu^{nu} * ({product}) is not in Lambda")

    @staticmethod
    def sort_key(key):
        gamma, nu, product = key
        return product.total_length, len(product), gamma, nu, product

    def __str__(self):
        from lambda_ce.serializers import format_chain
        return format_chain(self)
