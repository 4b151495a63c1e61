class Parity:
    EVEN = 0
    ODD = 1

    CHOICES = (
        (EVEN, 'x'),
        (ODD, 'xi'),
    )


EMPTY_WORD_TEXT = '1'
LETTER_SEPARATOR = '.'
