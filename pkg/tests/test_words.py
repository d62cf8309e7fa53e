import pytest
from hypothesis import given, strategies as st

from src.models import ContentMismatchError, ToolkitError
from src.shuffle.words import (
    WordPoly,
    check_word,
    comult_expand,
    content,
    derivation,
    format_wordpoly,
    parse_wordpoly,
    reverse,
    shuffle,
    shuffle_words,
    words_of_content,
)


words = st.lists(st.integers(1, 3), max_size=3).map(tuple)


@st.composite
def word_polys(draw):
    terms = draw(st.lists(st.tuples(words, st.integers(-3, 3)), max_size=3))
    return WordPoly(tuple(terms))


def test_terms_are_normalized():
    p = WordPoly((((2, 1), 1), ((1,), 2), ((2, 1), -1)))
    assert p.terms == (((1,), 2),)
    assert not WordPoly((((1,), 0),))
    assert WordPoly.word(2, 1).coefficient((2, 1)) == 1


def test_shuffle_example():
    p = shuffle(WordPoly.word(2, 1), WordPoly.word(2))
    assert p == 2 * WordPoly.word(2, 2, 1) + WordPoly.word(2, 1, 2)


def test_shuffle_words_counts_positions():
    assert len(list(shuffle_words((1, 2), (3, 4, 5)))) == 10


@given(word_polys(), word_polys())
def test_shuffle_is_commutative(p, q):
    assert shuffle(p, q) == shuffle(q, p)


@given(word_polys(), word_polys(), word_polys())
def test_shuffle_is_associative(p, q, r):
    assert shuffle(shuffle(p, q), r) == shuffle(p, shuffle(q, r))


@given(word_polys())
def test_unit(p):
    assert shuffle(WordPoly.unit(), p) == p


@given(word_polys(), word_polys(), st.integers(1, 3))
def test_derivation_is_a_derivation(p, q, i):
    left = derivation(i, shuffle(p, q))
    right = shuffle(derivation(i, p), q) + shuffle(p, derivation(i, q))
    assert left == right


@given(word_polys(), word_polys())
def test_reverse_is_an_algebra_map(p, q):
    assert reverse(shuffle(p, q)) == shuffle(reverse(p), reverse(q))
    assert reverse(reverse(p)) == p


def test_format_and_parse():
    p = 2 * WordPoly.word(4, 2, 3) + WordPoly.word(1) - 3 * WordPoly.word(2, 2)
    text = format_wordpoly(p)
    assert text == "w[1] - 3 w[2,2] + 2 w[4,2,3]"
    assert parse_wordpoly(text) == p
    assert parse_wordpoly("0") == WordPoly()
    assert parse_wordpoly("-w[2,1]") == -WordPoly.word(2, 1)
    with pytest.raises(ToolkitError):
        parse_wordpoly("w[1] + v[2]")


def test_json_form():
    p = WordPoly.word(2, 1) * 3
    assert p.to_json() == [{"word": [2, 1], "coeff": 3}]
    assert WordPoly.from_json(p.to_json()) == p
    with pytest.raises(ToolkitError):
        WordPoly.from_json([{"word": [1], "coeff": 0}])


def test_content_and_letters():
    assert content((2, 1, 2), 3) == (1, 2, 0)
    with pytest.raises(ContentMismatchError):
        check_word((0, 1), 2)


def test_words_of_content():
    assert list(words_of_content((1, 1))) == [(1, 2), (2, 1)]
    assert len(list(words_of_content((2, 1, 1)))) == 12


def test_comult_expand():
    pairs = comult_expand((1, 2, 1), (1, 0), (1, 1))
    assert pairs == [((1,), (2, 1)), ((1,), (1, 2))]
    with pytest.raises(ContentMismatchError):
        comult_expand((1, 2), (2, 0), (0, 1))
