"""Chain text format: ``<p/q> * gamma^<a> * nu^<b> * (<word> | <word> | ...)``."""
import re

from core.exceptions import WordFormatError
from core.utils import format_rational, parse_rational
from lambda_ce import FACTOR_SEPARATOR
from words.serializers import format_letters, parse_word

CHAIN_LINE_PATTERN = re.compile(
    r'^\s*(?P<coefficient>[-+]?\d+(?:/\d+)?)\s*\*\s*gamma\^(?P<gamma>\d+)\s*\*\s*nu\^(?P<nu>\d+)\s*\*\s*\((?P<factors>.*)\)\s*$'
)


def format_product(product) -> str:
    return '(' + FACTOR_SEPARATOR.join(format_letters(word.letters) for word in product.factors) + ')'


def format_chain(chain) -> str:
    if not chain:
        return '0'
    return '\n'.join(
        f'{format_rational(value)} * gamma^{gamma} * nu^{nu} * {format_product(product)}'
        for (gamma, nu, product), value in chain.sorted_items()
    )


def parse_chain(text: str, keep_scalars: bool = False):
    from lambda_ce.structures import CEChain

    chain = CEChain(keep_scalars=keep_scalars)
    for line in text.splitlines():
        if not line.strip() or line.strip() == '0':
            continue
        match = CHAIN_LINE_PATTERN.match(line)
        if not match:
            raise WordFormatError(f"Invalid chain line: {line!r}")
        body = match.group('factors').strip()
        factors = [parse_word(part) for part in body.split('|')] if body else []
        chain.add_term(
            (int(match.group('gamma')), int(match.group('nu')), factors),
            parse_rational(match.group('coefficient')),
        )
    return chain
