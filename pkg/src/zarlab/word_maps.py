"""One-variable word maps ``g_0 X^{i_1} g_1 ... X^{i_n} g_n`` over the group.

Text form: coefficient tokens use the word grammar, the variable is ``X`` or
``X^<int>``, e.g. ``a1 X^-1 a2 X``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Union

from .dehn import System, equal_in_group, is_identity
from .presentation import relevant_indices
from .words import EMPTY, ParseError, Word, a, concat, concat_all, invert, parse_word, power, render_word

RawTerm = Union[Word, int]


@dataclass(frozen=True)
class GroupPolynomial:
    """Normal form: leading coefficient and ``(exponent, coefficient)`` pairs.

    Exponents are nonzero and two variable powers are never separated by an
    empty coefficient.
    """

    lead: Word = EMPTY
    body: tuple[tuple[int, Word], ...] = ()

    def __post_init__(self) -> None:
        for t, (e, coeff) in enumerate(self.body):
            if e == 0:
                raise ValueError("zero exponent in normalized polynomial")
            if t + 1 < len(self.body) and not coeff:
                raise ValueError("adjacent variable powers must be merged")

    @property
    def is_constant(self) -> bool:
        return not self.body

    @property
    def coefficients(self) -> tuple[Word, ...]:
        return (self.lead,) + tuple(c for _, c in self.body)

    @property
    def exponents(self) -> tuple[int, ...]:
        return tuple(e for e, _ in self.body)

    def terms(self) -> list[RawTerm]:
        out: list[RawTerm] = [self.lead]
        for e, c in self.body:
            out += [e, c]
        return out

    def __mul__(self, other: GroupPolynomial) -> GroupPolynomial:
        return normalize(self.terms() + other.terms(), semigroup=isinstance(self, SemigroupPolynomial))

    def __str__(self) -> str:
        return render_polynomial(self)


class SemigroupPolynomial(GroupPolynomial):
    """Same normal form restricted to positive exponents."""

    def __post_init__(self) -> None:
        super().__post_init__()
        if any(e < 0 for e, _ in self.body):
            raise ValueError("semigroup polynomials take nonnegative exponents only")


def normalize(raw: Iterable[RawTerm], semigroup: bool = False) -> GroupPolynomial:
    """Bring a sequence of coefficients (words) and exponents (ints) to normal form."""
    coeffs = [EMPTY]
    exps: list[int] = []
    for term in raw:
        if isinstance(term, Word):
            coeffs[-1] = concat(coeffs[-1], term)
            continue
        if semigroup and term < 0:
            raise ValueError(f"negative exponent {term} in semigroup mode")
        exps.append(term)
        coeffs.append(EMPTY)
    return _rebuild(coeffs, exps, semigroup)


def _rebuild(coeffs: list[Word], exps: list[int], semigroup: bool) -> GroupPolynomial:
    changed = True
    while changed:
        changed = False
        for t in range(len(exps)):
            if exps[t] == 0:
                coeffs[t] = concat(coeffs[t], coeffs[t + 1])
                del exps[t], coeffs[t + 1]
                changed = True
                break
            if t + 1 < len(exps) and not coeffs[t + 1]:
                exps[t] += exps[t + 1]
                del exps[t + 1], coeffs[t + 1]
                changed = True
                break
    cls = SemigroupPolynomial if semigroup else GroupPolynomial
    return cls(coeffs[0], tuple(zip(exps, coeffs[1:])))


def polynomial(*terms: RawTerm, semigroup: bool = False) -> GroupPolynomial:
    return normalize(terms, semigroup=semigroup)


def eval_group(p: GroupPolynomial, value: Word) -> Word:
    parts = [p.lead]
    for e, c in p.body:
        parts += [power(value, e), c]
    return concat_all(parts)


def eval_unreduced(p: GroupPolynomial, value: Word) -> tuple:
    """Letters of the substituted expression before any free reduction."""
    out = list(p.lead.letters)
    for e, c in p.body:
        base = value.letters if e > 0 else invert(value).letters
        out += base * abs(e)
        out += c.letters
    return tuple(out)


def coefficient_indices(p: GroupPolynomial) -> set[int]:
    out: set[int] = set()
    for c in p.coefficients:
        out |= relevant_indices(c)
    return out


def fresh_index(ps: Iterable[GroupPolynomial]) -> int:
    return 1 + max((i for p in ps for i in coefficient_indices(p)), default=0)


def in_subbasic_closed_group(p: GroupPolynomial, value: Word, system: System) -> bool:
    """Whether ``p(value) = 1``."""
    return is_identity(eval_group(p, value), system)[0]


def in_subbasic_closed_semigroup(
    p: GroupPolynomial, q: GroupPolynomial, value: Word, system: System
) -> bool:
    """Whether ``p(value) = q(value)``, decided in the group."""
    return equal_in_group(eval_group(p, value), eval_group(q, value), system)


def c_polynomial(k: int) -> GroupPolynomial:
    """``a_1 X^-1 a_2 X ... a_{k-1} X^-1 a_k X``: evaluating at ``x_i`` gives ``w_i``."""
    terms: list[RawTerm] = []
    for r in range(1, k + 1):
        terms += [Word((a(r),)), -1 if r % 2 else 1]
    return normalize(terms)


_VAR = re.compile(r"X(?:\^(-?[0-9]+))?")


def parse_polynomial(text: str, semigroup: bool = False) -> GroupPolynomial:
    if not text:
        raise ParseError("empty polynomial", 0)
    terms: list[RawTerm] = []
    pending: list[str] = []
    pending_pos = 0
    pos = 0

    def flush() -> None:
        if pending:
            tokens = [t for t in pending if t != "e"]
            try:
                terms.append(parse_word(" ".join(tokens)) if tokens else EMPTY)
            except ParseError as err:
                raise ParseError(err.message, pending_pos + err.position) from None
            pending.clear()

    for token in text.split(" "):
        m = _VAR.fullmatch(token)
        if m:
            flush()
            e = int(m.group(1)) if m.group(1) is not None else 1
            if semigroup and e < 0:
                raise ParseError(f"negative exponent {e} not allowed in semigroup mode", pos)
            terms.append(e)
        else:
            if not pending:
                pending_pos = pos
            pending.append(token)
        pos += len(token) + 1
    flush()
    return normalize(terms, semigroup=semigroup)


def render_polynomial(p: GroupPolynomial) -> str:
    tokens = []
    if p.lead:
        tokens.append(render_word(p.lead))
    for e, c in p.body:
        tokens.append("X" if e == 1 else f"X^{e}")
        if c:
            tokens.append(render_word(c))
    return " ".join(tokens) if tokens else "e"
