"""The relator family ``w_i`` for an even ``k >= 8``, piece analysis and the
metric small cancellation check, plus loading of small user presentations."""

from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from pathlib import Path
from typing import Iterable, Iterator, Union

from .words import (
    EMPTY,
    Letter,
    ParseError,
    Word,
    a,
    cyclic_permutation,
    find_occurrences,
    free_reduce,
    invert,
    is_cyclically_reduced,
    longest_common_prefix,
    x,
    x_indices,
)

# (relator index, rotation, sign)
RelatorId = tuple[int, int, int]


@dataclass(frozen=True)
class PresentationParams:
    k: int = 8

    def __post_init__(self) -> None:
        if not isinstance(self.k, int) or self.k < 8 or self.k % 2:
            raise ValueError(f"k must be an even integer >= 8, got {self.k!r}")


def _params(params: PresentationParams | int) -> PresentationParams:
    return params if isinstance(params, PresentationParams) else PresentationParams(params)


@lru_cache(maxsize=4096)
def _relator(k: int, i: int) -> Word:
    letters = []
    for r in range(1, k + 1):
        letters.append(a(r))
        letters.append(x(i, -1 if r % 2 else 1))
    return Word(tuple(letters))


def relator(params: PresentationParams | int, i: int) -> Word:
    """``a_1 x_i^-1 a_2 x_i a_3 x_i^-1 ... a_k x_i``."""
    params = _params(params)
    if i < 1:
        raise ValueError(f"relator index must be >= 1, got {i}")
    return _relator(params.k, i)


def relevant_indices(v: Word) -> set[int]:
    return x_indices(v)


def member(params: PresentationParams | int, rid: RelatorId) -> Word:
    """The family member ``(w_i rotated by j)^sign``."""
    i, j, sign = rid
    rotated = cyclic_permutation(relator(params, i), j)
    return rotated if sign > 0 else invert(rotated)


@lru_cache(maxsize=4096)
def _members(k: int, i: int) -> tuple[tuple[RelatorId, Word], ...]:
    return tuple(
        ((i, j, sign), member(k, (i, j, sign))) for j in range(2 * k) for sign in (-1, 1)
    )


def family_members(params: PresentationParams | int, i: int) -> tuple[tuple[RelatorId, Word], ...]:
    """All 4k members contributed by index ``i``, ordered by relator id."""
    return _members(_params(params).k, i)


@dataclass(frozen=True)
class RelatorFamily:
    params: PresentationParams
    indices: frozenset[int]
    members: tuple[tuple[RelatorId, Word], ...] = field(repr=False, compare=False)

    @cached_property
    def words(self) -> frozenset[Word]:
        return frozenset(w for _, w in self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, w: Word) -> bool:
        return w in self.words


def symmetrized_family(params: PresentationParams | int, indices: Iterable[int]) -> RelatorFamily:
    params = _params(params)
    idx = frozenset(indices)
    if not idx:
        raise ValueError("index set must be nonempty")
    if min(idx) < 1:
        raise ValueError("relator indices must be >= 1")
    members = tuple(m for i in sorted(idx) for m in family_members(params, i))
    return RelatorFamily(params, idx, members)


@dataclass(frozen=True)
class GenericPresentation:
    """A finite presentation over single-character generators.

    Generator number ``n`` (1-based, in declaration order) is encoded as the
    letter ``a_n`` so the word machinery applies unchanged.
    """

    generators: tuple[str, ...]
    relators: tuple[Word, ...]
    members: tuple[tuple[RelatorId, Word], ...] = field(repr=False, compare=False, default=())

    def __post_init__(self) -> None:
        if not self.members:
            object.__setattr__(self, "members", _symmetrize(self.relators))

    @cached_property
    def words(self) -> frozenset[Word]:
        return frozenset(w for _, w in self.members)

    def __len__(self) -> int:
        return len(self.members)

    def parse(self, text: str) -> Word:
        """Parse ``abAB``-style text; ``e`` or ``""`` is the empty word."""
        if text in ("", "e", "1"):
            return EMPTY
        letters = []
        for pos, ch in enumerate(text):
            if ch.isspace():
                continue
            try:
                n = self.generators.index(ch.lower()) + 1
            except ValueError:
                raise ParseError(f"unknown generator {ch!r}", pos) from None
            letters.append(a(n, -1 if ch.isupper() else 1))
        return free_reduce(letters)

    def render(self, w: Word) -> str:
        if not w:
            return "e"
        out = []
        for letter in w:
            ch = self.generators[letter.index - 1]
            out.append(ch.upper() if letter.sign < 0 else ch)
        return "".join(out)


def _symmetrize(relators: Iterable[Word]) -> tuple[tuple[RelatorId, Word], ...]:
    seen: set[Word] = set()
    members = []
    for i, r in enumerate(relators, start=1):
        for j in range(len(r)):
            for sign in (-1, 1):
                rot = cyclic_permutation(r, j)
                w = rot if sign > 0 else invert(rot)
                if w not in seen:
                    seen.add(w)
                    members.append(((i, j, sign), w))
    return tuple(members)


def load_presentation(path: str | Path) -> GenericPresentation:
    return parse_presentation(Path(path).read_text(encoding="utf-8"))


def parse_presentation(text: str) -> GenericPresentation:
    """Parse the ``generators:`` / ``relator:`` line format."""
    generators: tuple[str, ...] | None = None
    raw_relators: list[tuple[str, int]] = []
    offset = 0
    for line in text.splitlines(keepends=True):
        body = line.split("#", 1)[0].strip()
        if body:
            key, sep, value = body.partition(":")
            key, value = key.strip(), value.strip()
            if not sep:
                raise ParseError(f"expected 'key: value', got {body!r}", offset)
            if key == "generators":
                if generators is not None:
                    raise ParseError("duplicate generators line", offset)
                gens = tuple(value.split())
                for g in gens:
                    if len(g) != 1 or not g.isalpha() or not g.islower():
                        raise ParseError(f"generator must be a single lowercase letter: {g!r}", offset)
                if len(set(gens)) != len(gens):
                    raise ParseError("duplicate generator", offset)
                generators = gens
            elif key == "relator":
                if generators is None:
                    raise ParseError("relator before generators line", offset)
                raw_relators.append((value, offset))
            else:
                raise ParseError(f"unknown key {key!r}", offset)
        offset += len(line)
    if generators is None:
        raise ParseError("missing generators line", offset)
    relators = []
    for value, pos in raw_relators:
        letters = []
        for ch in value.replace(" ", ""):
            if ch.lower() not in generators:
                raise ParseError(f"unknown generator {ch!r} in relator", pos)
            letters.append(a(generators.index(ch.lower()) + 1, -1 if ch.isupper() else 1))
        w = free_reduce(letters)
        if len(w) != len(letters):
            raise ParseError(f"relator {value!r} is not freely reduced", pos)
        if not w:
            raise ParseError("empty relator", pos)
        if not is_cyclically_reduced(w):
            raise ParseError(f"relator {value!r} is not cyclically reduced", pos)
        relators.append(w)
    return GenericPresentation(generators, tuple(relators))


Presentation = Union[RelatorFamily, GenericPresentation]


def _first_letter_buckets(members) -> Iterator[list[tuple[RelatorId, Word]]]:
    buckets: dict[Letter, list[tuple[RelatorId, Word]]] = defaultdict(list)
    for rid, w in members:
        buckets[w.letters[0]].append((rid, w))
    for first in sorted(buckets):
        yield buckets[first]


def _sort_key(w: Word):
    return tuple((letter.family.value, letter.index, letter.sign) for letter in w.letters)


def piece_pairs(pres: Presentation) -> Iterator[tuple[int, Word, Word]]:
    """Every unordered pair of distinct members with a nonempty common prefix.

    Pairs with different first letters share no prefix, so only same-first-letter
    pairs are visited.
    """
    for bucket in _first_letter_buckets(pres.members):
        for (_, u), (_, v) in itertools.combinations(bucket, 2):
            if u != v:
                yield longest_common_prefix(u, v), u, v


def max_piece_length(pres: Presentation) -> tuple[int, tuple[Word, Word] | None]:
    """Length of the longest piece and the lexicographically least pair realising it."""
    if len(pres.words) < 2:
        raise ValueError("need at least two distinct members")
    best, witness = 0, None
    for length, u, v in piece_pairs(pres):
        pair = (u, v) if _sort_key(u) <= _sort_key(v) else (v, u)
        if length > best or (
            length == best and witness is not None
            and (_sort_key(pair[0]), _sort_key(pair[1])) < (_sort_key(witness[0]), _sort_key(witness[1]))
        ):
            best, witness = length, pair
    return best, witness


def pieces(pres: Presentation) -> set[Word]:
    return {u[:length] for length, u, _ in piece_pairs(pres) if length}


def check_metric_condition(pres: Presentation, lam: Fraction | float | str) -> bool:
    """Whether every piece U inside a member W satisfies ``|U| < lam * |W|``."""
    lam = Fraction(lam)
    if not 0 < lam < 1:
        raise ValueError(f"lambda must lie strictly between 0 and 1, got {lam}")
    if isinstance(pres, RelatorFamily):
        # all members have length 2k
        longest, _ = max_piece_length(pres)
        return longest < lam * 2 * pres.params.k
    for piece in pieces(pres):
        for w in pres.words:
            if len(piece) >= lam * len(w) and (
                len(piece) <= len(w) and find_occurrences(piece, w)
            ):
                return False
    return True
