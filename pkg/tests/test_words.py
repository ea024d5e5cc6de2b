import pytest
from hypothesis import given, strategies as st

from helpers import W, raw_sequences, words
from zarlab.presentation import relator
from zarlab.words import (
    EMPTY,
    ParseError,
    Word,
    a,
    concat,
    cyclic_permutation,
    find_occurrences,
    free_reduce,
    invert,
    longest_common_prefix,
    parse_word,
    polarity,
    render_word,
    x,
)


def test_free_reduce_cancels():
    assert free_reduce([x(3), x(3, -1)]) == EMPTY
    assert free_reduce([a(1), x(2), x(2, -1), a(1, -1), a(2)]) == Word((a(2),))
    raw = [a(1), x(1, -1), a(2), x(1)]
    assert free_reduce(raw).letters == tuple(raw)


def test_word_constructor_rejects_unreduced():
    with pytest.raises(ValueError):
        Word((a(1), a(1, -1)))


def test_concat():
    assert concat(W("a1 x5"), W("x5' a2")) == W("a1 a2")
    assert concat(W("a1 x5 a2"), EMPTY) == W("a1 x5 a2")
    assert concat(W("a1 x5 a2"), W("a2' x5' a1'")) == EMPTY


def test_invert(w81):
    assert invert(W("a1 x1'")) == W("x1 a1'")
    assert invert(EMPTY) == EMPTY
    # reversed with every sign flipped
    assert invert(w81) == W("x1' a8' x1 a7' x1' a6' x1 a5' x1' a4' x1 a3' x1' a2' x1 a1'")


def test_cyclic_permutation(w81):
    assert cyclic_permutation(w81, 0) == w81
    assert cyclic_permutation(w81, 1) == W("x1' a2 x1 a3 x1' a4 x1 a5 x1' a6 x1 a7 x1' a8 x1 a1")
    n = len(w81)
    for j in range(n):
        assert cyclic_permutation(cyclic_permutation(w81, j), (n - j) % n) == w81


def test_cyclic_permutation_range():
    with pytest.raises(IndexError):
        cyclic_permutation(W("a1 a2"), 2)
    with pytest.raises(IndexError):
        cyclic_permutation(EMPTY, 0)


@pytest.mark.parametrize(
    "text, expected",
    [
        ("a1 x3 a2 x3", (True, False)),
        ("x3 a1 x3'", (False, False)),
        ("a1 a2", (True, True)),
        ("x3' a1", (False, True)),
    ],
)
def test_polarity(text, expected):
    assert polarity(W(text), 3) == expected


def test_longest_common_prefix(w81):
    assert longest_common_prefix(relator(8, 1), relator(8, 2)) == 1
    assert longest_common_prefix(w81, w81) == 16
    assert longest_common_prefix(W("a1 x1"), W("x1 a1")) == 0


def test_find_occurrences():
    assert find_occurrences(W("a2"), W("a1 a2 a1 a2")) == [1, 3]
    assert find_occurrences(W("x5"), W("a1 a2")) == []
    assert find_occurrences(W("x1 a2"), relator(8, 1)) == []
    assert find_occurrences(W("x1' a2"), relator(8, 1)) == [1]
    with pytest.raises(ValueError):
        find_occurrences(EMPTY, W("a1"))


@pytest.mark.parametrize("text", ["a1 x3' a2 x3", "e", "x12", "a1' a2' x7"])
def test_parse_render_round_trip(text):
    assert render_word(parse_word(text)) == text


@pytest.mark.parametrize(
    "text, position",
    [("a1  a2", 3), ("b1", 0), ("a0", 0), ("a1 a1'", 3), ("", 0), ("a1 x", 3), ("a01", 0)],
)
def test_parse_errors_report_position(text, position):
    with pytest.raises(ParseError) as err:
        parse_word(text)
    assert err.value.position == position


@given(raw_sequences)
def test_free_reduce_idempotent(raw):
    once = free_reduce(raw)
    assert free_reduce(once.letters) == once
    assert len(once) % 2 == len(raw) % 2


@given(words, words, words)
def test_concat_associative(u, v, w):
    assert concat(concat(u, v), w) == concat(u, concat(v, w))


@given(words, words)
def test_invert_anti_homomorphism(u, v):
    assert invert(concat(u, v)) == concat(invert(v), invert(u))
    assert invert(invert(u)) == u
    assert concat(u, invert(u)) == EMPTY
    assert len(concat(u, v)) % 2 == (len(u) + len(v)) % 2
    assert len(concat(u, v)) <= len(u) + len(v)


@given(words, st.integers(min_value=1, max_value=3))
def test_polarity_both_iff_absent(w, m):
    absent = all(not (l.family.value == "x" and l.index == m) for l in w)
    assert (polarity(w, m) == (True, True)) == absent
