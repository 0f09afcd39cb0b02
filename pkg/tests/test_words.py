import pytest
from hypothesis import given, strategies as st

from leftorder.words import (
    Alphabet,
    ball,
    ball_count,
    concat,
    default_alphabet,
    inverse,
    power,
    reduce_letters,
    word_key,
)

AB = Alphabet(["a", "b"])


def test_reduce_cancellation():
    assert reduce_letters([(0, 1), (0, -1)]) == ()


def test_reduce_inner_cancellation():
    assert reduce_letters([(0, 1), (1, 1), (1, -1), (0, 1)]) == ((0, 1), (0, 1))


def test_reduce_already_reduced():
    assert reduce_letters([(0, 1), (1, 1)]) == ((0, 1), (1, 1))


def test_reduce_rejects_bad_letters():
    with pytest.raises(ValueError):
        reduce_letters([(0, 2)])
    with pytest.raises(ValueError):
        reduce_letters([(-1, 1)])


letters_strategy = st.lists(
    st.tuples(st.integers(min_value=0, max_value=2), st.sampled_from([1, -1])),
    max_size=30,
)


@given(letters_strategy)
def test_reduce_idempotent(letters):
    once = reduce_letters(letters)
    assert reduce_letters(once) == once


@given(letters_strategy)
def test_inverse_cancels(letters):
    w = reduce_letters(letters)
    assert concat(w, inverse(w)) == ()
    assert concat(inverse(w), w) == ()


@given(letters_strategy, st.integers(min_value=-4, max_value=4))
def test_power_matches_repeated_concat(letters, k):
    w = reduce_letters(letters)
    expected = ()
    step = w if k >= 0 else inverse(w)
    for _ in range(abs(k)):
        expected = concat(expected, step)
    assert power(w, k) == expected


def test_ball_rank_one_radius_two():
    a1 = Alphabet(["a"])
    words = ball(a1, 2)
    assert len(words) == 5
    assert words == [
        (),
        ((0, 1),),
        ((0, -1),),
        ((0, 1), (0, 1)),
        ((0, -1), (0, -1)),
    ]


def test_ball_counts_match_formula():
    for n, radius in [(1, 3), (2, 1), (2, 3), (2, 4), (3, 2)]:
        alphabet = default_alphabet(n)
        assert len(ball(alphabet, radius)) == ball_count(n, radius)
    assert ball_count(2, 1) == 5
    assert ball_count(2, 3) == 53
    assert ball_count(2, 4) == 161


def test_ball_nesting_and_order():
    b3 = ball(AB, 3)
    b4 = ball(AB, 4)
    assert b4[: len(b3)] == b3
    assert b3 == sorted(b3, key=word_key)
    assert len(b3) == len(set(b3))


def test_ball_canonical_order_prefix():
    # positive letter sorts before its inverse, index 0 before index 1
    assert ball(AB, 1) == [(), ((0, 1),), ((0, -1),), ((1, 1),), ((1, -1),)]


def test_parse_format_roundtrip():
    for text, expected in [
        ("", ()),
        ("a", ((0, 1),)),
        ("a b^-2", ((0, 1), (1, -1), (1, -1))),
        ("b^3", ((1, 1), (1, 1), (1, 1))),
        ("a a^-1", ()),
    ]:
        assert AB.parse(text) == expected
    w = AB.parse("a^2 b^-1 a")
    assert AB.parse(AB.format(w)) == w
    assert AB.format(()) == ""
    assert AB.format(((1, -1), (1, -1), (0, 1))) == "b^-2 a"


def test_parse_errors():
    with pytest.raises(ValueError):
        AB.parse("c")
    with pytest.raises(ValueError):
        AB.parse("a^x")


def test_alphabet_validation():
    with pytest.raises(ValueError):
        Alphabet(["a", "a"])
    with pytest.raises(ValueError):
        Alphabet(["a", "b c"])
    with pytest.raises(ValueError):
        Alphabet([])


@given(st.integers(min_value=1, max_value=3), st.integers(min_value=0, max_value=4))
def test_ball_size_formula_property(n, radius):
    assert len(ball(default_alphabet(n), radius)) == ball_count(n, radius)
