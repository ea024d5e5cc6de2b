import random

import pytest
from hypothesis import given, settings, strategies as st

from helpers import W
from zarlab.dehn import is_identity
from zarlab.presentation import relator
from zarlab.suites import group_alphabet, random_group_polynomial, random_word
from zarlab.word_maps import (
    GroupPolynomial,
    SemigroupPolynomial,
    c_polynomial,
    coefficient_indices,
    eval_group,
    eval_unreduced,
    fresh_index,
    in_subbasic_closed_group,
    in_subbasic_closed_semigroup,
    normalize,
    parse_polynomial,
    polynomial,
    render_polynomial,
)
from zarlab.words import EMPTY, ParseError, Word, concat, free_reduce, invert, polarity, x

C_TEXT = "a1 X^-1 a2 X a3 X^-1 a4 X a5 X^-1 a6 X a7 X^-1 a8 X"


def test_normalize_collapses_zero_exponent():
    p = normalize([W("a1"), 0, W("a2")])
    assert p.is_constant and p.lead == W("a1 a2")


def test_normalize_merges_across_empty_coefficient():
    p = normalize([W("a1"), 1, EMPTY, 1, W("a2")])
    assert p == GroupPolynomial(W("a1"), ((2, W("a2")),))


def test_normalize_cancelling_powers():
    p = normalize([W("a1"), 2, EMPTY, -2, W("a2")])
    assert p.is_constant and p.lead == W("a1 a2")
    # coefficient a2 a2' reduces to the empty word, letting X X^-1 cancel
    p = normalize([W("a1"), 1, W("a2"), W("a2'"), -1, W("a3")])
    assert p.is_constant and p.lead == W("a1 a3")
    # a nonempty coefficient separates the powers: a2 X a2' X^-1 is not 1 in the free product
    raw = [W("a1"), 1, W("a2"), 1, W("a2'"), -1, W("a3")]
    assert normalize(raw).exponents == (1, 1, -1)


def test_normalize_idempotent():
    p = parse_polynomial(C_TEXT)
    assert normalize(p.terms()) == p


def test_semigroup_rejects_negative_exponent():
    with pytest.raises(ValueError):
        normalize([W("a1"), -1], semigroup=True)
    with pytest.raises(ValueError):
        SemigroupPolynomial(EMPTY, ((-1, EMPTY),))
    assert isinstance(normalize([1, W("a1")], semigroup=True), SemigroupPolynomial)


def test_eval_examples():
    assert eval_group(polynomial(1), W("a1")) == W("a1")
    p = parse_polynomial(C_TEXT)
    for i in range(1, 6):
        assert eval_group(p, Word((x(i),))) == relator(8, i)
    assert eval_group(p, W("a9")) == W("a1 a9' a2 a9 a3 a9' a4 a9 a5 a9' a6 a9 a7 a9' a8 a9")
    assert c_polynomial(8) == p


def test_coefficient_indices_and_fresh_index():
    p = normalize([W("a1 x3"), 1, W("x7'")])
    assert coefficient_indices(p) == {3, 7}
    assert coefficient_indices(normalize([W("a1"), 2, W("a2")])) == set()
    assert coefficient_indices(polynomial(W("x2 x5"))) == {2, 5}
    assert fresh_index([p]) == 8
    assert fresh_index([polynomial(W("a1"), 1)]) == 1
    assert fresh_index([]) == 1
    assert fresh_index([polynomial(W("x1"), 1)]) == 2


def test_subbasic_closed_group():
    p = c_polynomial(8)
    assert in_subbasic_closed_group(p, W("x3"), 8)
    assert not in_subbasic_closed_group(p, W("a9"), 8)
    assert in_subbasic_closed_group(polynomial(1), EMPTY, 8)


def test_subbasic_closed_semigroup():
    p = parse_polynomial("X a1 X", semigroup=True)
    assert in_subbasic_closed_semigroup(p, p, W("x5 a3"), 8)
    assert in_subbasic_closed_semigroup(
        parse_polynomial("X a1", semigroup=True), parse_polynomial("a1 X", semigroup=True), EMPTY, 8
    )
    assert not in_subbasic_closed_semigroup(polynomial(1), polynomial(W("a1")), W("x5"), 8)
    # the escaping example: P(x_1) Q(x_1)^-1 reduces to x1 a1 x1' a2'
    P = parse_polynomial("X a1 X", semigroup=True)
    Q = parse_polynomial("a2 X^2", semigroup=True)
    assert fresh_index([P, Q]) == 1
    v = concat(eval_group(P, W("x1")), invert(eval_group(Q, W("x1"))))
    assert v == W("x1 a1 x1' a2'")
    assert not in_subbasic_closed_semigroup(P, Q, W("x1"), 8)


def test_junction_cancellation_can_remove_fresh_letter():
    P = parse_polynomial("a1 X", semigroup=True)
    Q = parse_polynomial("a2 X", semigroup=True)
    v = concat(eval_group(P, W("x1")), invert(eval_group(Q, W("x1"))))
    assert v == W("a1 a2'")
    assert not in_subbasic_closed_semigroup(P, Q, W("x1"), 8)


@pytest.mark.parametrize(
    "text",
    [C_TEXT, "X", "a1 X^2 a2", "x3' X^-4", "X^3 a1 X", "e", "a1 a2"],
)
def test_polynomial_round_trip(text):
    assert render_polynomial(parse_polynomial(text)) == text


def test_parse_polynomial_exponents():
    p = parse_polynomial("a1 X^-1 a2 X")
    assert p.exponents == (-1, 1)
    assert parse_polynomial("a1 X^0 a2") == polynomial(W("a1 a2"))
    assert parse_polynomial("e X e") == polynomial(1)


@pytest.mark.parametrize(
    "text, semigroup",
    [("a1 X^-1", True), ("a1 Y", False), ("a1 X^", False), ("", False), ("a1 b2", False)],
)
def test_parse_polynomial_errors(text, semigroup):
    with pytest.raises(ParseError):
        parse_polynomial(text, semigroup=semigroup)


def _random_pair(seed):
    rng = random.Random(seed)
    alphabet = group_alphabet(8, 3)
    p = random_group_polynomial(rng, alphabet, semigroup=False)
    q = random_group_polynomial(rng, alphabet, semigroup=False)
    point = random_word(rng, alphabet, rng.randint(0, 8))
    return p, q, point


@settings(max_examples=500, deadline=None)
@given(st.integers(min_value=0, max_value=2**32))
def test_eval_is_multiplicative(seed):
    p, q, point = _random_pair(seed)
    assert eval_group(p * q, point) == concat(eval_group(p, point), eval_group(q, point))


@settings(max_examples=100, deadline=None)
@given(st.integers(min_value=0, max_value=2**32))
def test_normalize_preserves_eval(seed):
    rng = random.Random(seed)
    alphabet = group_alphabet(8, 3)
    raw = []
    for _ in range(rng.randint(1, 6)):
        raw.append(random_word(rng, alphabet, rng.randint(0, 2)))
        raw.append(rng.randint(-2, 2))
    point = random_word(rng, alphabet, rng.randint(0, 6))
    expected = free_reduce(
        l for term in raw
        for l in (term.letters if isinstance(term, Word) else (point if term > 0 else invert(point)).letters * abs(term))
    )
    assert eval_group(normalize(raw), point) == expected


@given(st.integers(min_value=0, max_value=2**32))
def test_constant_eval_ignores_point(seed):
    rng = random.Random(seed)
    c = random_word(rng, group_alphabet(8, 3), 5)
    p = polynomial(c)
    assert eval_group(p, random_word(rng, group_alphabet(8, 3), 4)) == c == eval_group(p, EMPTY)


@settings(max_examples=300, deadline=None)
@given(st.integers(min_value=0, max_value=2**32))
def test_decomposition_feeds_lemma(seed):
    """P(x_m) Q(x_m)^-1 splits into an x_m-positive prefix and x_m-negative suffix."""
    rng = random.Random(seed)
    alphabet = group_alphabet(8, 3)
    p = random_group_polynomial(rng, alphabet)
    q = random_group_polynomial(rng, alphabet)
    m = fresh_index([p, q])
    xm = Word((x(m),))
    plus, minus = eval_unreduced(p, xm), invert(eval_group(q, xm)).letters
    assert polarity(free_reduce(plus), m)[0] and polarity(Word(minus), m)[1]
    v = free_reduce(plus + minus)
    splits = [t for t in range(len(v) + 1) if polarity(v[:t], m)[0] and polarity(v[t:], m)[1]]
    assert splits
    if m in {l.index for l in v if l.family.value == "x"}:
        assert not is_identity(v, 8)[0]
