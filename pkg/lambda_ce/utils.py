"""
Differentials and brackets on Λ_{γ,ν}.

Signs follow the Koszul rule on word parity: a term is written with the new
factor (a bracket or the two halves of a cobracket) in front, and the sign
is that of moving the consumed factors to the front in order.
"""
import logging
from typing import Sequence

from core.exceptions import NotSpecializedError
from core.utils import sign_of_parity
from lambda_ce.structures import CEChain, SymProduct
from words.structures import CyclicWord, HamiltonianElement
from words.utils import bracket, cobracket

logger = logging.getLogger(__name__)


def _parities(product: SymProduct) -> Sequence[int]:
    return [factor.parity for factor in product.factors]


def _without(factors, *positions):
    return tuple(factor for index, factor in enumerate(factors) if index not in positions)


def _monomial(word: CyclicWord) -> HamiltonianElement:
    return HamiltonianElement.from_term(word)


def ce_differential_delta(chain: CEChain) -> CEChain:
    """δ(g_1...g_n) = Σ_{i<j} (-1)^p {g_i, g_j} · g_1..ĝ_i..ĝ_j..g_n."""
    result = chain.empty()
    for (gamma, nu, product), value in chain.items():
        factors = product.factors
        parities = _parities(product)
        for i in range(len(factors)):
            before_i = sum(parities[:i])
            for j in range(i + 1, len(factors)):
                exponent = parities[i] * before_i + parities[j] * sum(parities[:j]) + parities[i] * parities[j]
                rest = _without(factors, i, j)
                for word, coefficient in bracket(_monomial(factors[i]), _monomial(factors[j])).items():
                    result.add_term((gamma, nu, (word,) + rest), sign_of_parity(exponent) * coefficient * value)
    return result


def extended_cobracket(chain: CEChain) -> CEChain:
    """Δ(h_1...h_n) = Σ_i (-1)^{|h_i|(|h_1|+..+|h_{i-1}|)} Δ(h_i) · h_1..ĥ_i..h_n."""
    result = chain.empty()
    for (gamma, nu, product), value in chain.items():
        factors = product.factors
        parities = _parities(product)
        for i, factor in enumerate(factors):
            sign = sign_of_parity(parities[i] * sum(parities[:i]))
            rest = _without(factors, i)
            for (left, right), coefficient in cobracket(_monomial(factor)).items():
                result.add_term((gamma, nu, (left, right) + rest), sign * coefficient * value)
    return result


def multiply_gamma(chain: CEChain, power: int = 1) -> CEChain:
    result = chain.empty()
    for (gamma, nu, product), value in chain.items():
        result.add_term((gamma + power, nu, product), value)
    return result


def deformed_differential(chain: CEChain, check: bool = True) -> CEChain:
    """D = γ·δ + Δ on Λ_{γ,ν}; raises MembershipError outside Λ."""
    if check:
        chain.check_membership()
    return multiply_gamma(ce_differential_delta(chain)) + extended_cobracket(chain)


def extended_bracket(first: CEChain, second: CEChain) -> CEChain:
    """The BV bracket: the bracket of h extended by the Leibniz rule."""
    result = CEChain(keep_scalars=first.keep_scalars or second.keep_scalars)
    for (gamma, nu, left), left_value in first.items():
        left_parities = _parities(left)
        left_total = sum(left_parities)
        for (other_gamma, other_nu, right), right_value in second.items():
            right_parities = _parities(right)
            for i, g in enumerate(left.factors):
                left_rest = _without(left.factors, i)
                for j, h in enumerate(right.factors):
                    exponent = (
                        left_parities[i] * sum(left_parities[:i])
                        + right_parities[j] * (left_total + sum(right_parities[:j]))
                        + left_parities[i] * right_parities[j]
                    )
                    rest = left_rest + _without(right.factors, j)
                    weight = sign_of_parity(exponent) * left_value * right_value
                    for word, coefficient in bracket(_monomial(g), _monomial(h)).items():
                        result.add_term((gamma + other_gamma, nu + other_nu, (word,) + rest), weight * coefficient)
    return result


def multiply(first: CEChain, second: CEChain) -> CEChain:
    """The graded-symmetric product of chains."""
    result = CEChain(keep_scalars=first.keep_scalars or second.keep_scalars)
    for (gamma, nu, left), left_value in first.items():
        for (other_gamma, other_nu, right), right_value in second.items():
            result.add_term((gamma + other_gamma, nu + other_nu, left.factors + right.factors), left_value * right_value)
    return result


def specialize(chain: CEChain, set_nu_zero: bool = False, set_gamma_zero: bool = False) -> CEChain:
    """Set deformation parameters to zero by dropping terms with a positive exponent."""
    result = chain.empty()
    for (gamma, nu, product), value in chain.items():
        if set_nu_zero and nu > 0:
            continue
        if set_gamma_zero and gamma > 0:
            continue
        result.add_term((gamma, nu, product), value)
    return result


def project_to_g(chain: CEChain) -> HamiltonianElement:
    """π: Λ → h_{≥2}, keeping single factors of length at least two."""
    result = HamiltonianElement()
    for (gamma, nu, product), value in chain.items():
        if gamma or nu:
            raise NotSpecializedError(
                f"Projection needs gamma = nu = 0, found gamma^{gamma} nu^{nu} * ({product})"
            )
        if len(product) == 1 and len(product.factors[0]) >= 2:
            result.add_term(product.factors[0], value)
    return result


def embed_hamiltonian(element: HamiltonianElement, gamma: int = 0, nu: int = 0) -> CEChain:
    """h_{≥1} as single-factor chains."""
    chain = CEChain()
    for word, value in element.items():
        chain.add_term((gamma, nu, (word,)), value)
    return chain
