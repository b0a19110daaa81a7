"""Finite words over integer letters.

A word is a plain ``tuple`` of ints.  Letters must fit in a signed byte,
which is checked when a word is built from untrusted input
(:func:`as_word`, :func:`parse_word`).
"""

from __future__ import annotations

from itertools import accumulate
from typing import Iterable, Tuple

Word = Tuple[int, ...]

LETTER_MIN = -128
LETTER_MAX = 127


class WordError(ValueError):
    """Raised for malformed word text or out-of-range letters."""


def as_word(letters: Iterable[int]) -> Word:
    """Return ``letters`` as a word, checking the letter range."""
    word = tuple(int(a) for a in letters)
    for pos, a in enumerate(word, start=1):
        if not LETTER_MIN <= a <= LETTER_MAX:
            raise WordError(f"letter {a} at position {pos} outside [{LETTER_MIN}, {LETTER_MAX}]")
    return word


def parikh(word: Iterable[int], alphabet_size: int) -> Tuple[int, ...]:
    """Count occurrences of each letter ``0 .. alphabet_size-1``."""
    counts = [0] * alphabet_size
    for pos, a in enumerate(word, start=1):
        if not 0 <= a < alphabet_size:
            raise WordError(f"letter {a} at position {pos} outside [0, {alphabet_size})")
        counts[a] += 1
    return tuple(counts)


def prefix_sums(word: Iterable[int]) -> Tuple[int, ...]:
    """Running sums ``(0, w1, w1+w2, ...)``; length is ``len(word) + 1``."""
    return tuple(accumulate(word, initial=0))


def parse_word(text: str) -> Word:
    """Parse a word written as compact digits (``0102``) or csv (``0,1,-1``).

    The csv style is chosen when the text contains a comma or a minus sign.
    A trailing comma is accepted, so a single multi-digit letter can be
    written as ``12,``.
    """
    text = text.strip()
    if not text:
        return ()
    if "," not in text and "-" not in text:
        for offset, ch in enumerate(text):
            if not ch.isdigit():
                raise WordError(f"unexpected character {ch!r} at offset {offset}")
        return tuple(int(ch) for ch in text)

    letters = []
    offset = 0
    tokens = text.split(",")
    if tokens[-1].strip() == "" and len(tokens) > 1:
        tokens.pop()
    for token in tokens:
        stripped = token.strip()
        try:
            value = int(stripped)
        except ValueError:
            raise WordError(f"malformed letter {token!r} at offset {offset}") from None
        if not LETTER_MIN <= value <= LETTER_MAX:
            raise WordError(f"letter {value} at offset {offset} outside [{LETTER_MIN}, {LETTER_MAX}]")
        letters.append(value)
        offset += len(token) + 1
    return tuple(letters)


def render_word(word: Iterable[int], style: str = "compact") -> str:
    word = tuple(word)
    if style == "compact":
        if any(not 0 <= a <= 9 for a in word):
            raise WordError("compact style needs letters in [0, 9]")
        return "".join(str(a) for a in word)
    if style == "csv":
        text = ",".join(str(a) for a in word)
        # a lone letter >= 10 would read back as several digits
        if len(word) == 1 and word[0] > 9:
            text += ","
        return text
    raise ValueError(f"unknown style {style!r}")


def render_auto(word: Iterable[int]) -> str:
    """Compact when every letter is a digit, csv otherwise."""
    word = tuple(word)
    if all(0 <= a <= 9 for a in word):
        return render_word(word, "compact")
    return render_word(word, "csv")
