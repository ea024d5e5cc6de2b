"""Dehn's algorithm for the word problem, with a certified reduction trace.

At each step the solver looks for a factor ``U`` of the current word that is an
initial segment of some relator member ``R = U S`` with ``|U| > |R| / 2`` and
replaces it with ``S^-1``.  For the family ``w_i`` the threshold is ``k + 1``.
Only relators whose x-index occurs in the word can match such a long factor,
so the search is restricted to those indices.
"""

from __future__ import annotations

import enum
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Union

from .presentation import (
    GenericPresentation,
    PresentationParams,
    RelatorId,
    check_metric_condition,
    family_members,
    member,
    relevant_indices,
)
from .words import Letter, Word, concat, concat_all, free_reduce, invert

System = Union[PresentationParams, GenericPresentation, int]

SMALL_CANCELLATION_BOUND = Fraction(1, 6)


@dataclass(frozen=True)
class Candidate:
    position: int
    relator_id: RelatorId
    match_length: int
    remainder: Word
    relator: Word = field(repr=False)

    @property
    def segment(self) -> Word:
        return self.relator[: self.match_length]


@dataclass(frozen=True)
class DehnStep:
    before: Word
    candidate: Candidate
    after: Word

    def render(self) -> str:
        i, j, sign = self.candidate.relator_id
        return (
            f"{len(self.before)} ({i},{j},{'+' if sign > 0 else '-'}1) "
            f"@{self.candidate.position} -> {len(self.after)}"
        )

    def as_dict(self) -> dict:
        i, j, sign = self.candidate.relator_id
        return {
            "before_length": len(self.before),
            "relator": [i, j, sign],
            "position": self.candidate.position,
            "match_length": self.candidate.match_length,
            "after_length": len(self.after),
        }


@dataclass
class DehnTrace:
    start: Word
    steps: list[DehnStep] = field(default_factory=list)

    @property
    def final(self) -> Word:
        return self.steps[-1].after if self.steps else self.start

    def __len__(self) -> int:
        return len(self.steps)

    def render(self) -> str:
        return "\n".join(step.render() for step in self.steps)

    def as_dicts(self) -> list[dict]:
        return [step.as_dict() for step in self.steps]


class Verdict(enum.Enum):
    IDENTITY = "IDENTITY"
    NONTRIVIAL = "NONTRIVIAL"
    INCONCLUSIVE = "INCONCLUSIVE"


def _system(system: System) -> PresentationParams | GenericPresentation:
    return PresentationParams(system) if isinstance(system, int) else system


@lru_cache(maxsize=256)
def _generic_buckets(pres: GenericPresentation) -> dict[Letter, tuple[tuple[RelatorId, Word], ...]]:
    buckets = defaultdict(list)
    for rid, w in pres.members:
        buckets[w.letters[0]].append((rid, w))
    return {first: tuple(sorted(ms)) for first, ms in buckets.items()}


@lru_cache(maxsize=4096)
def _family_buckets(k: int, i: int) -> dict[Letter, tuple[tuple[RelatorId, Word], ...]]:
    buckets = defaultdict(list)
    for rid, w in family_members(k, i):
        buckets[w.letters[0]].append((rid, w))
    return {first: tuple(ms) for first, ms in buckets.items()}


def _min_threshold(system) -> int:
    if isinstance(system, GenericPresentation):
        return min((len(w) // 2 + 1 for w in system.words), default=1)
    return system.k + 1


def _buckets(v: Word, system) -> dict[Letter, list[tuple[RelatorId, Word]]]:
    if isinstance(system, GenericPresentation):
        return _generic_buckets(system)
    merged: dict[Letter, list] = defaultdict(list)
    for i in sorted(relevant_indices(v)):
        for first, ms in _family_buckets(system.k, i).items():
            merged[first].extend(ms)
    return merged


def _matches_at(v: Word, p: int, buckets):
    letters = v.letters
    n = len(letters)
    for rid, r in buckets.get(letters[p], ()):
        rl = r.letters
        threshold = len(rl) // 2 + 1
        if n - p < threshold:
            continue
        t, limit = 1, min(len(rl), n - p)
        while t < limit and letters[p + t] == rl[t]:
            t += 1
        if t >= threshold:
            yield rid, r, t


def _candidate(p: int, rid: RelatorId, r: Word, length: int) -> Candidate:
    return Candidate(p, rid, length, r[length:], r)


def find_candidates(v: Word, system: System) -> list[Candidate]:
    """All qualifying (position, relator, split) triples.

    Ordered by position, then match length (longest first), then relator id.
    """
    system = _system(system)
    if len(v) < _min_threshold(system):
        return []
    buckets = _buckets(v, system)
    out = []
    for p in range(len(v)):
        for rid, r, longest in _matches_at(v, p, buckets):
            for length in range(longest, len(r) // 2, -1):
                out.append(_candidate(p, rid, r, length))
    out.sort(key=lambda c: (c.position, -c.match_length, c.relator_id))
    return out


def first_candidate(v: Word, system: System) -> Candidate | None:
    """The first element of :func:`find_candidates` without building the list."""
    system = _system(system)
    if len(v) < _min_threshold(system):
        return None
    buckets = _buckets(v, system)
    for p in range(len(v)):
        best = None
        for rid, r, longest in _matches_at(v, p, buckets):
            if best is None or (-longest, rid) < (-best[2], best[0]):
                best = (rid, r, longest)
        if best is not None:
            return _candidate(p, *best)
    return None


def apply_candidate(v: Word, c: Candidate) -> Word:
    return concat_all(
        [v[: c.position], invert(c.remainder), v[c.position + c.match_length :]]
    )


def dehn_step(v: Word, system: System) -> tuple[Word, Candidate] | None:
    c = first_candidate(v, system)
    if c is None:
        return None
    return apply_candidate(v, c), c


def reduce_word(v: Word, system: System) -> DehnTrace:
    """Run Dehn steps to a fixed point."""
    system = _system(system)
    trace = DehnTrace(v)
    current = v
    while current:
        step = dehn_step(current, system)
        if step is None:
            break
        after, c = step
        trace.steps.append(DehnStep(current, c, after))
        current = after
    return trace


def is_identity(v: Word, system: System) -> tuple[bool, DehnTrace]:
    trace = reduce_word(v, system)
    return not trace.final, trace


@lru_cache(maxsize=256)
def _certified(pres: GenericPresentation) -> bool:
    return len(pres.words) < 2 or check_metric_condition(pres, SMALL_CANCELLATION_BOUND)


def decide(v: Word, system: System) -> tuple[Verdict, DehnTrace]:
    """Like :func:`is_identity` but refuses to call a word nontrivial when the
    presentation is not known to satisfy C'(1/6)."""
    system = _system(system)
    trivial, trace = is_identity(v, system)
    if trivial:
        return Verdict.IDENTITY, trace
    if isinstance(system, GenericPresentation) and not _certified(system):
        return Verdict.INCONCLUSIVE, trace
    return Verdict.NONTRIVIAL, trace


def equal_in_group(u: Word, v: Word, system: System) -> bool:
    return is_identity(concat(u, invert(v)), system)[0]


def verify_trace(trace: DehnTrace, system: System) -> bool:
    """Re-check every step independently of the search.

    The relator is regenerated from its id, the replacement is redone, and
    ``before * after^-1`` must equal ``P R P^-1`` with ``P`` the prefix in
    front of the replaced factor.
    """
    system = _system(system)
    current = trace.start
    for step in trace.steps:
        c = step.candidate
        if step.before != current:
            return False
        if isinstance(system, GenericPresentation):
            i, j, sign = c.relator_id
            rot = system.relators[i - 1]
            rot = rot[j:] * rot[:j]
            r = rot if sign > 0 else invert(rot)
        else:
            r = member(system, c.relator_id)
        u = step.before[c.position : c.position + c.match_length]
        if len(u) != c.match_length or 2 * len(u) <= len(r):
            return False
        if concat(u, c.remainder) != r or len(u) + len(c.remainder) != len(r):
            return False
        rebuilt = free_reduce(
            step.before.letters[: c.position]
            + invert(c.remainder).letters
            + step.before.letters[c.position + len(u) :]
        )
        if rebuilt != step.after or len(step.after) >= len(step.before):
            return False
        prefix = step.before[: c.position]
        if concat(step.before, invert(step.after)) != concat_all([prefix, r, invert(prefix)]):
            return False
        current = step.after
    return True
