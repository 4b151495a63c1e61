"""
Text format of words: dot-separated letters such as ``x1.xi1.x2``.

The empty word is written ``1``. Elements of h[V] are printed one term per
line as ``<p/q> * <word>``.
"""
import re
from typing import Iterable, Tuple

from core.exceptions import WordFormatError
from core.utils import format_rational, parse_rational
from words import EMPTY_WORD_TEXT, LETTER_SEPARATOR, Parity

LETTER_PATTERN = re.compile(r'^(xi|x)(\d+)$')


def format_letters(letters: Iterable) -> str:
    letters = tuple(letters)
    if not letters:
        return EMPTY_WORD_TEXT
    return LETTER_SEPARATOR.join(str(letter) for letter in letters)


def parse_letter(text: str):
    from words.structures import Letter

    match = LETTER_PATTERN.match(text.strip())
    if not match:
        raise WordFormatError(f"Invalid letter: {text!r}")
    kind, index = match.groups()
    parity = Parity.ODD if kind == 'xi' else Parity.EVEN
    return Letter(parity, int(index))


def parse_word(text: str) -> Tuple:
    text = text.strip()
    if text == EMPTY_WORD_TEXT:
        return ()
    if not text:
        raise WordFormatError("Empty word text; use '1' for the empty word")
    return tuple(parse_letter(part) for part in text.split(LETTER_SEPARATOR))


def format_hamiltonian(element) -> str:
    if not element:
        return '0'
    return '\n'.join(
        f'{format_rational(value)} * {format_letters(word.letters)}'
        for word, value in element.sorted_items()
    )


def parse_hamiltonian(text: str, space=None):
    from words.structures import HamiltonianElement

    element = HamiltonianElement(space=space)
    for line in text.splitlines():
        line = line.strip()
        if not line or line == '0':
            continue
        if '*' in line:
            coefficient, word = line.split('*', 1)
            element.add_term(parse_word(word), parse_rational(coefficient))
        else:
            element.add_term(parse_word(line), 1)
    return element
