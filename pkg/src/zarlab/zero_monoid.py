"""The monomial semigroup ``<x_1, x_2, ..., y_1, y_2, ... | x_i y_i = 0>``.

The only defining relations send words to zero, so an element is either zero
or a positive word containing no factor ``x_i y_i``, and equality is syntactic.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Union

from .words import ParseError


class SGen(NamedTuple):
    family: str  # "x" or "y"
    index: int

    def __str__(self) -> str:
        return f"{self.family}{self.index}"


@dataclass(frozen=True)
class SWord:
    """A normal-form element. ``gens == ()`` encodes zero (S has no identity)."""

    gens: tuple[SGen, ...]

    @property
    def is_zero(self) -> bool:
        return not self.gens

    def __mul__(self, other: SWord) -> SWord:
        return s_mul(self, other)

    def __str__(self) -> str:
        return "0" if self.is_zero else " ".join(map(str, self.gens))


ZERO = SWord(())


def sx(i: int) -> SWord:
    return SWord((SGen("x", i),))


def sy(i: int) -> SWord:
    return SWord((SGen("y", i),))


def _has_zero_factor(gens: tuple[SGen, ...]) -> bool:
    return any(
        u.family == "x" and v.family == "y" and u.index == v.index
        for u, v in zip(gens, gens[1:])
    )


def s_normalize(raw: Iterable[SGen | tuple[str, int]]) -> SWord:
    gens = tuple(SGen(*g) for g in raw)
    if not gens:
        raise ValueError("S has no identity; an element needs at least one generator")
    for g in gens:
        if g.family not in ("x", "y") or g.index < 1:
            raise ValueError(f"bad generator {g!r}")
    return ZERO if _has_zero_factor(gens) else SWord(gens)


def s_mul(u: SWord, v: SWord) -> SWord:
    if u.is_zero or v.is_zero:
        return ZERO
    gens = u.gens + v.gens
    return ZERO if _has_zero_factor(gens) else SWord(gens)


def s_product(words: Iterable[SWord]) -> SWord:
    gens: list[SGen] = []
    for w in words:
        if w.is_zero:
            return ZERO
        gens.extend(w.gens)
    return s_normalize(gens)


def s_equal(u: SWord, v: SWord) -> bool:
    return u.gens == v.gens


def project(w: SWord, i: int) -> SWord:
    """Image of ``w`` in the quotient where ``y_i`` is identified with zero."""
    return ZERO if SGen("y", i) in w.gens else w


Term = Union[SWord, int]


@dataclass(frozen=True)
class SPolynomial:
    """Alternating coefficients and positive exponents.

    Adjacent coefficients are multiplied and adjacent variable powers merged.
    A zero coefficient makes the whole polynomial the constant zero.
    """

    terms: tuple[Term, ...]

    @property
    def is_constant(self) -> bool:
        return not any(isinstance(t, int) for t in self.terms)

    @property
    def coefficients(self) -> tuple[SWord, ...]:
        return tuple(t for t in self.terms if isinstance(t, SWord))

    def indices(self) -> set[int]:
        return {g.index for c in self.coefficients for g in c.gens}

    def __str__(self) -> str:
        return render_spolynomial(self)


ZERO_POLY = SPolynomial((ZERO,))


def s_poly_normalize(raw: Iterable[Term]) -> SPolynomial:
    out: list[Term] = []
    for term in raw:
        if isinstance(term, SWord):
            if term.is_zero:
                return ZERO_POLY
            if out and isinstance(out[-1], SWord):
                out[-1] = s_mul(out[-1], term)
                if out[-1].is_zero:
                    return ZERO_POLY
            else:
                out.append(term)
        else:
            if term < 0:
                raise ValueError("exponents must be nonnegative")
            if term == 0:
                continue
            if out and isinstance(out[-1], int):
                out[-1] += term
            else:
                out.append(term)
    if not out:
        raise ValueError("empty polynomial: S has no identity")
    return SPolynomial(tuple(out))


def spoly(*terms: Term) -> SPolynomial:
    return s_poly_normalize(terms)


def eval_s(p: SPolynomial, s: SWord) -> SWord:
    parts: list[SWord] = []
    for t in p.terms:
        if isinstance(t, SWord):
            parts.append(t)
        else:
            parts.extend([s] * t)
    return s_product(parts)


def kill_generator(p: SPolynomial, i: int) -> SPolynomial:
    """Send every coefficient containing ``y_i`` to zero and renormalize."""
    return s_poly_normalize(project(t, i) if isinstance(t, SWord) else t for t in p.terms)


def eval_quotient(p: SPolynomial, s: SWord, i: int) -> SWord:
    """Evaluation in the quotient killing ``y_i``."""
    return project(eval_s(p, project(s, i)), i)


_SGEN = re.compile(r"([xy])([1-9][0-9]*)")
_VAR = re.compile(r"X(?:\^([0-9]+))?")


def parse_sword(text: str) -> SWord:
    if text == "0":
        return ZERO
    if not text:
        raise ParseError("empty input; S has no identity", 0)
    gens = []
    pos = 0
    for token in text.split(" "):
        m = _SGEN.fullmatch(token)
        if m is None:
            raise ParseError(f"bad semigroup token {token!r}", pos)
        gens.append(SGen(m.group(1), int(m.group(2))))
        pos += len(token) + 1
    return s_normalize(gens)


def parse_spolynomial(text: str) -> SPolynomial:
    terms: list[Term] = []
    pending: list[str] = []
    pending_pos = pos = 0

    def flush() -> None:
        if pending:
            try:
                terms.append(parse_sword(" ".join(pending)))
            except ParseError as err:
                raise ParseError(err.message, pending_pos + err.position) from None
            pending.clear()

    for token in text.split(" "):
        if token.startswith("X"):
            m = _VAR.fullmatch(token)
            if m is None:
                raise ParseError(f"bad variable token {token!r}; exponents must be nonnegative", pos)
            flush()
            terms.append(int(m.group(1)) if m.group(1) is not None else 1)
        else:
            if not pending:
                pending_pos = pos
            pending.append(token)
        pos += len(token) + 1
    flush()
    try:
        return s_poly_normalize(terms)
    except ValueError as err:
        raise ParseError(str(err), 0) from None


def render_spolynomial(p: SPolynomial) -> str:
    return " ".join(
        str(t) if isinstance(t, SWord) else ("X" if t == 1 else f"X^{t}") for t in p.terms
    )
