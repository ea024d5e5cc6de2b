"""Freely reduced words over the mixed alphabet ``a_1, a_2, ...`` / ``x_1, x_2, ...``.

A word is rendered as space separated tokens, ``a1 x3' a2 x3``; a trailing
apostrophe marks an inverse letter and the empty word is written ``e``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator, NamedTuple, Sequence, overload


class ParseError(ValueError):
    """Syntax error in textual input; ``position`` is a 0-based character offset."""

    def __init__(self, message: str, position: int = 0):
        super().__init__(f"{message} (at position {position})")
        self.message = message
        self.position = position


class Family(str, Enum):
    A = "a"
    X = "x"


class Letter(NamedTuple):
    family: Family
    index: int
    sign: int = 1

    def inverse(self) -> Letter:
        return Letter(self.family, self.index, -self.sign)

    def __str__(self) -> str:
        return f"{self.family.value}{self.index}" + ("'" if self.sign < 0 else "")


def a(index: int, sign: int = 1) -> Letter:
    return Letter(Family.A, index, sign)


def x(index: int, sign: int = 1) -> Letter:
    return Letter(Family.X, index, sign)


@dataclass(frozen=True)
class Word:
    """An immutable freely reduced word. Use :func:`free_reduce` for raw input."""

    letters: tuple[Letter, ...] = ()

    def __post_init__(self) -> None:
        letters = tuple(self.letters)
        object.__setattr__(self, "letters", letters)
        for t in range(len(letters) - 1):
            if letters[t] == letters[t + 1].inverse():
                raise ValueError(f"word is not freely reduced at position {t}")

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    @overload
    def __getitem__(self, item: int) -> Letter: ...

    @overload
    def __getitem__(self, item: slice) -> Word: ...

    def __getitem__(self, item):
        if isinstance(item, slice):
            # a factor of a reduced word is reduced
            return _trusted(self.letters[item])
        return self.letters[item]

    def __bool__(self) -> bool:
        return bool(self.letters)

    def __mul__(self, other: Word) -> Word:
        return concat(self, other)

    def __invert__(self) -> Word:
        return invert(self)

    def __str__(self) -> str:
        return render_word(self)

    def __repr__(self) -> str:
        return f"Word({render_word(self)!r})"


EMPTY = Word()


def _trusted(letters: tuple[Letter, ...]) -> Word:
    w = object.__new__(Word)
    object.__setattr__(w, "letters", letters)
    return w


def free_reduce(raw: Iterable[Letter]) -> Word:
    stack: list[Letter] = []
    for letter in raw:
        if stack and stack[-1] == letter.inverse():
            stack.pop()
        else:
            stack.append(letter)
    return _trusted(tuple(stack))


def concat(u: Word, v: Word) -> Word:
    ul, vl = u.letters, v.letters
    i, n = 0, min(len(ul), len(vl))
    while i < n and ul[len(ul) - 1 - i] == vl[i].inverse():
        i += 1
    return _trusted(ul[: len(ul) - i] + vl[i:])


def concat_all(words: Iterable[Word]) -> Word:
    return free_reduce(letter for w in words for letter in w.letters)


def invert(w: Word) -> Word:
    return _trusted(tuple(letter.inverse() for letter in reversed(w.letters)))


def power(w: Word, n: int) -> Word:
    base = w if n >= 0 else invert(w)
    return concat_all([base] * abs(n))


def cyclic_permutation(w: Word, j: int) -> Word:
    """``b_{j+1} ... b_n b_1 ... b_j`` for ``w = b_1 ... b_n``."""
    n = len(w)
    if not 0 <= j < n:
        raise IndexError(f"rotation {j} out of range for word of length {n}")
    if n > 1 and w.letters[0] == w.letters[-1].inverse():
        raise ValueError("word is not cyclically reduced")
    return _trusted(w.letters[j:] + w.letters[:j])


def is_cyclically_reduced(w: Word) -> bool:
    return len(w) < 2 or w.letters[0] != w.letters[-1].inverse()


def polarity(w: Word, m: int) -> tuple[bool, bool]:
    """(positive in x_m, negative in x_m)."""
    positive = negative = True
    for letter in w.letters:
        if letter.family is Family.X and letter.index == m:
            if letter.sign > 0:
                negative = False
            else:
                positive = False
    return positive, negative


def longest_common_prefix(u: Word | Sequence[Letter], v: Word | Sequence[Letter]) -> int:
    ul = u.letters if isinstance(u, Word) else u
    vl = v.letters if isinstance(v, Word) else v
    t, n = 0, min(len(ul), len(vl))
    while t < n and ul[t] == vl[t]:
        t += 1
    return t


def find_occurrences(needle: Word, haystack: Word) -> list[int]:
    if not needle:
        raise ValueError("needle must be nonempty")
    nl, hl = needle.letters, haystack.letters
    n = len(nl)
    return [p for p in range(len(hl) - n + 1) if hl[p : p + n] == nl]


def x_indices(w: Word) -> set[int]:
    return {letter.index for letter in w.letters if letter.family is Family.X}


_TOKEN = re.compile(r"([ax])([0-9]+)('?)")


def parse_word(text: str) -> Word:
    """Parse the token grammar; the input must already be freely reduced."""
    if text == "e":
        return EMPTY
    if not text:
        raise ParseError("empty input; the empty word is written 'e'", 0)
    letters = []
    pos = 0
    for token in text.split(" "):
        m = _TOKEN.fullmatch(token)
        if m is None:
            raise ParseError(f"bad word token {token!r}", pos)
        index = int(m.group(2))
        if index < 1 or m.group(2).startswith("0"):
            raise ParseError(f"letter index must be a positive integer without leading zeros: {token!r}", pos)
        letter = Letter(Family(m.group(1)), index, -1 if m.group(3) else 1)
        if letters and letters[-1] == letter.inverse():
            raise ParseError(f"word is not freely reduced at token {token!r}", pos)
        letters.append(letter)
        pos += len(token) + 1
    return _trusted(tuple(letters))


def render_word(w: Word) -> str:
    if not w.letters:
        return "e"
    return " ".join(str(letter) for letter in w.letters)
