"""Brute-force checks of the dgla and BV structure on Λ_{γ,ν}."""
import logging
from collections import defaultdict
from itertools import combinations_with_replacement, product
from typing import Iterator, List, Sequence, Tuple

from core.utils import CheckReport, sign_of_parity
from lambda_ce.structures import CEChain, LinearSymplecticElement
from lambda_ce.utils import (
    ce_differential_delta,
    deformed_differential,
    embed_hamiltonian,
    extended_bracket,
    extended_cobracket,
    multiply,
    project_to_g,
    specialize,
)
from words.structures import SymplecticSpace
from words.utils import bracket, cyclic_words

logger = logging.getLogger(__name__)


def spanning_chains(space: SymplecticSpace, max_factors: int, max_total_length: int) -> List[CEChain]:
    """
    Monomials spanning Λ_{γ,ν} up to the given size.

    Exponents are zero except on single letters, which carry one γ. All
    operations are Q[γ,ν]-linear, so this is a spanning set for the checks.
    """
    words = cyclic_words(space, max_total_length, min_length=1)
    chains = []
    seen = set()
    for count in range(1, max_factors + 1):
        for factors in combinations_with_replacement(words, count):
            if sum(len(word) for word in factors) > max_total_length:
                continue
            gamma = 1 if count == 1 and len(factors[0]) == 1 else 0
            chain = CEChain.monomial(factors, gamma=gamma)
            if chain.is_zero():
                continue
            (key,) = chain.keys()
            if key not in seen:
                seen.add(key)
                chains.append(CEChain.from_term(key))
    return chains


def chain_parity(chain: CEChain) -> int:
    (gamma, nu, product), = chain.keys()
    return product.parity


def _label(chain: CEChain) -> str:
    return str(chain).replace('\n', ' + ')


# ==================== differentials ====================

def check_differentials_square_to_zero(space: SymplecticSpace, max_factors: int, max_total_length: int) -> CheckReport:
    """δ² = 0, Δ² = 0 and D² = 0 on the spanning set."""
    report = CheckReport('lambda-d2')
    for chain in spanning_chains(space, max_factors, max_total_length):
        label = _label(chain)
        report.record(f'delta^2 {label}', ce_differential_delta(ce_differential_delta(chain)).is_zero())
        report.record(f'Delta^2 {label}', extended_cobracket(extended_cobracket(chain)).is_zero())
        image = deformed_differential(chain)
        report.record(f'membership {label}', image.is_member())
        report.record(f'D^2 {label}', deformed_differential(image, check=False).is_zero())
    logger.info(report.summary())
    return report


# ==================== BV structure ====================

def check_bv_axioms(space: SymplecticSpace, max_factors: int, max_total_length: int) -> CheckReport:
    """Leibniz rule, δ as a derivation of the bracket and the BV relation for δ."""
    report = CheckReport('bv-axioms')
    # products see the scalar part, so it is kept here
    chains = [CEChain(chain.items(), keep_scalars=True) for chain in spanning_chains(space, max_factors, max_total_length)]
    for a, b in bounded_tuples(chains, 2, max_total_length):
        label = f'{_label(a)} ; {_label(b)}'
        parity = chain_parity(a)
        # δ(ab) = δ(a)b + (-1)^a a δ(b) + {a, b}
        left = ce_differential_delta(multiply(a, b))
        right = (
            multiply(ce_differential_delta(a), b)
            + multiply(a, ce_differential_delta(b)).scale(sign_of_parity(parity))
            + extended_bracket(a, b)
        )
        report.record(f'bv {label}', left == right)
        # δ{a, b} + {δa, b} + (-1)^a {a, δb} = 0
        derivation = (
            ce_differential_delta(extended_bracket(a, b))
            + extended_bracket(ce_differential_delta(a), b)
            + extended_bracket(a, ce_differential_delta(b)).scale(sign_of_parity(parity))
        )
        report.record(f'derivation {label}', derivation.is_zero())
        # {a, b} = (-1)^{ab} {b, a}
        swapped = extended_bracket(b, a).scale(sign_of_parity(parity * chain_parity(b)))
        report.record(f'symmetry {label}', extended_bracket(a, b) == swapped)
    for a, b, c in bounded_tuples(chains, 3, max_total_length):
        label = f'{_label(a)} ; {_label(b)} ; {_label(c)}'
        left = extended_bracket(a, multiply(b, c))
        sign = sign_of_parity((chain_parity(a) + 1) * chain_parity(b))
        right = multiply(extended_bracket(a, b), c) + multiply(b, extended_bracket(a, c)).scale(sign)
        report.record(f'leibniz {label}', left == right)
    logger.info(report.summary())
    return report


def check_deformed_derivation(space: SymplecticSpace, max_factors: int, max_total_length: int) -> CheckReport:
    """D{a, b} + {Da, b} + (-1)^a {a, Db} = 0."""
    report = CheckReport('deformed-derivation')
    chains = spanning_chains(space, max_factors, max_total_length)
    for a, b in bounded_tuples(chains, 2, max_total_length):
        total = (
            deformed_differential(extended_bracket(a, b), check=False)
            + extended_bracket(deformed_differential(a), b)
            + extended_bracket(a, deformed_differential(b)).scale(sign_of_parity(chain_parity(a)))
        )
        report.record(f'{_label(a)} ; {_label(b)}', total.is_zero())
    logger.info(report.summary())
    return report


def _size(chain: CEChain) -> int:
    (gamma, nu, product), = chain.keys()
    return product.total_length


def bounded_tuples(chains: Sequence[CEChain], arity: int, max_total_length: int) -> Iterator[Tuple[CEChain, ...]]:
    """
    Ordered tuples of chains whose sizes add up to at most the bound.

    Chains are bucketed by size first, so tuples above the bound are never formed.
    """
    buckets = defaultdict(list)
    for chain in chains:
        buckets[_size(chain)].append(chain)
    for sizes in product(sorted(buckets), repeat=arity):
        if sum(sizes) > max_total_length:
            continue
        yield from product(*(buckets[size] for size in sizes))


# ==================== specialization ====================

def check_specializations(space: SymplecticSpace, max_factors: int, max_total_length: int) -> CheckReport:
    """Setting ν or γ to zero commutes with the truncated differentials; π kills the image of D."""
    report = CheckReport('specializations')
    for chain in spanning_chains(space, max_factors, max_total_length):
        label = _label(chain)
        image = deformed_differential(chain)
        without_nu = specialize(chain, set_nu_zero=True)
        report.record(
            f'nu=0 {label}',
            specialize(image, set_nu_zero=True) == specialize(deformed_differential(without_nu), set_nu_zero=True),
        )
        without_gamma = specialize(chain, set_gamma_zero=True)
        report.record(
            f'gamma=0 {label}',
            specialize(image, set_gamma_zero=True) == extended_cobracket(without_gamma),
        )
        both = specialize(chain, set_nu_zero=True, set_gamma_zero=True)
        reduced = specialize(deformed_differential(both, check=False), set_nu_zero=True, set_gamma_zero=True)
        report.record(f'projection {label}', project_to_g(reduced).is_zero())
    logger.info(report.summary())
    return report


def check_pe_embedding(space: SymplecticSpace) -> CheckReport:
    """Quadratic words close under the bracket and pass unchanged through the specialization maps."""
    report = CheckReport('pe-embedding')
    quadratic = [LinearSymplecticElement(word) for word in cyclic_words(space, 2, min_length=2)]
    for first, second in product(quadratic, repeat=2):
        image = bracket(first.as_hamiltonian(), second.as_hamiltonian())
        report.record(f'{first.word} ; {second.word}', all(len(word) == 2 for word in image.keys()))
    for element in quadratic:
        chain = embed_hamiltonian(element.as_hamiltonian())
        both = specialize(specialize(chain, set_nu_zero=True), set_gamma_zero=True)
        report.record(f'{element.word}', project_to_g(both) == element.as_hamiltonian())
    logger.info(report.summary())
    return report


def run_lambda_suite(space: SymplecticSpace, max_factors: int, max_total_length: int) -> CheckReport:
    """D² = 0, the BV relations and D as a derivation of the bracket, all at the full bounds."""
    report = CheckReport('lambda')
    report.merge(check_differentials_square_to_zero(space, max_factors, max_total_length))
    report.merge(check_bv_axioms(space, max_factors, max_total_length))
    report.merge(check_deformed_derivation(space, max_factors, max_total_length))
    return report


def run_lambda_projection_suite(space: SymplecticSpace, max_factors: int, max_total_length: int) -> CheckReport:
    report = CheckReport('lambda-projections')
    report.merge(check_specializations(space, max_factors, max_total_length))
    report.merge(check_pe_embedding(space))
    return report
