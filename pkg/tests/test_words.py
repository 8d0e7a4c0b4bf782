from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from milnorlink.verify import naive_magnus
from milnorlink.words import (Letter, TruncatedSeries, Word, epsilon, epsilon_pair, free_reduce,
                              magnus_coeff, magnus_expand)

letters = st.tuples(st.integers(1, 4), st.sampled_from((1, -1)))
words = st.lists(letters, max_size=40).map(Word)
pairs = st.lists(st.integers(1, 4), min_size=2, max_size=2, unique=True)


def test_parse_and_print():
    w = Word.parse("g1 g2 g1^-1 g2^-1")
    assert w == Word([(1, 1), (2, 1), (1, -1), (2, -1)])
    assert str(w) == "g1 g2 g1^-1 g2^-1"
    assert Word.parse("i j^-1", {"i": 1, "j": 2}) == Word([(1, 1), (2, -1)])


@pytest.mark.parametrize("bad", ["g0", "x", "g1^2", "g1^-"])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        Word.parse(bad)


def test_letter_validation():
    with pytest.raises(ValueError):
        Word([(1, 2)])
    with pytest.raises(ValueError):
        Word([(True, 1)])
    assert Letter(3, -1).inverse() == Letter(3, 1)


def test_powers_and_slices():
    w = Word.parse("g1 g2")
    assert w * 2 == Word.parse("g1 g2 g1 g2")
    assert w * -1 == w.inverse() == Word.parse("g2^-1 g1^-1")
    assert isinstance(w[1:], Word)


def test_commutator_counts():
    c = Word.parse("g1 g2 g1^-1 g2^-1")
    assert epsilon(1, c) == epsilon(2, c) == 0
    assert epsilon_pair(1, 2, c) == 1
    assert epsilon_pair(2, 1, c) == -1
    with pytest.raises(ValueError):
        epsilon_pair(1, 1, c)


def test_free_reduce():
    assert free_reduce(Word.parse("g1 g2 g2^-1 g1^-1 g3")) == Word.parse("g3")


@given(words, words, pairs)
def test_epsilon_additive(u, v, ij):
    i, j = ij
    assert epsilon(i, u + v) == epsilon(i, u) + epsilon(i, v)
    assert epsilon_pair(i, j, u + v) == (epsilon_pair(i, j, u) + epsilon_pair(i, j, v)
                                         + epsilon(i, u) * epsilon(j, v))


@given(words, pairs)
def test_epsilon_pair_symmetrization(w, ij):
    i, j = ij
    assert epsilon_pair(i, j, w) + epsilon_pair(j, i, w) == epsilon(i, w) * epsilon(j, w)


@given(words, pairs)
def test_low_magnus_coefficients(w, ij):
    i, j = ij
    assert magnus_coeff(w, (i,)) == epsilon(i, w)
    assert magnus_coeff(w, (i, j)) == epsilon_pair(i, j, w)


@settings(max_examples=60)
@given(words, st.integers(0, 3))
def test_magnus_matches_naive(w, d):
    assert magnus_expand(w, d).terms == naive_magnus(w, d)


@settings(max_examples=60)
@given(words, words)
def test_magnus_is_homomorphism(u, v):
    assert magnus_expand(u + v, 3) == magnus_expand(u, 3) * magnus_expand(v, 3)
    assert magnus_expand(u.inverse(), 3) == magnus_expand(u, 3).inverse()
    assert magnus_expand(free_reduce(u), 3) == magnus_expand(u, 3)


def test_inverse_letter_expansion():
    # (1 + h)^-1 = 1 - h + h^2 - h^3
    s = magnus_expand(Word([(2, -1)]), 3)
    assert s.terms == {(): 1, (2,): -1, (2, 2): 1, (2, 2, 2): -1}


def test_series_arithmetic():
    x = TruncatedSeries.variable(1, 2)
    one = TruncatedSeries.one(2)
    assert (one + x) * (one - x) == one - x * x
    assert (one + x).inverse() * (one + x) == one
    assert (x * x * x).terms == {}
    assert (one + x).coefficient((1,)) == 1
