"""
Positive words in the generators, and their compact text form.

A word is a tuple of generator names.  The text form collapses runs into
powers: ``("t", "t", "t", "s", "t", "t")`` is written ``t^3st^2``.  The empty
word is written ``1``.
"""

from __future__ import annotations

import re
from typing import Iterable, Sequence, Tuple

Word = Tuple[str, ...]


class WordError(ValueError):
    pass


def runs(word: Sequence[str]) -> list:
    """Split a word into ``(letter, exponent)`` blocks of equal letters."""
    out = []
    for x in word:
        if out and out[-1][0] == x:
            out[-1][1] += 1
        else:
            out.append([x, 1])
    return [(x, e) for x, e in out]


def from_runs(blocks: Iterable) -> Word:
    w = []
    for x, e in blocks:
        w.extend([x] * e)
    return tuple(w)


def format_word(word: Sequence[str]) -> str:
    if not word:
        return "1"
    return "".join(x if e == 1 else f"{x}^{e}" for x, e in runs(word))


def tex_word(word: Sequence[str]) -> str:
    if not word:
        return "1"
    return "".join(x if e == 1 else f"{x}^{{{e}}}" for x, e in runs(word))


def parse_word(text: str, letters: Sequence[str]) -> Word:
    """
    Parse ``t^3st^2``-style text over the given generator names.

    Names are matched longest first so ``s1s2`` works when the names are
    ``s1`` and ``s2``.  ``1`` and the empty string denote the empty word.
    """
    text = text.replace(" ", "").replace("{", "").replace("}", "")
    if text in ("", "1"):
        return ()
    names = sorted(letters, key=len, reverse=True)
    pattern = re.compile("(" + "|".join(re.escape(n) for n in names) + r")(?:\^(\d+))?")
    pos = 0
    out = []
    while pos < len(text):
        mt = pattern.match(text, pos)
        if not mt:
            raise WordError(f"cannot parse word {text!r} at position {pos} (letters {list(letters)})")
        out.extend([mt.group(1)] * int(mt.group(2) or 1))
        pos = mt.end()
    return tuple(out)
