import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from garsidelab._garside_common import LetterOutOfRange, StrandMismatch
from garsidelab.braid import (
    Braid,
    as_simple,
    conjugate,
    delta_power,
    from_factors,
    identity_braid,
    inverse,
    is_left_weighted,
    is_rigid,
    multiply,
    normal_form,
    tau_braid,
)
from garsidelab.simple import delta, generator, simple_from_word
from garsidelab.utils import random_rewrite


def words(n, max_size=12):
    letters = st.integers(1, n - 1).flatmap(lambda i: st.sampled_from([i, -i]))
    return st.lists(letters, max_size=max_size)


def test_normal_form_example():
    x = normal_form(3, [2, 1, 1, 2])
    assert x.inf == 0
    assert [f.word() for f in x.factors] == [(2, 1), (1, 2)]
    assert is_left_weighted(x.factors)


def test_delta_collapses():
    assert normal_form(3, [1, 2, 1]) == Braid(3, 1, ())
    assert normal_form(3, [2, 1, 2]) == delta_power(3, 1)
    assert normal_form(4, []) == identity_braid(4)


def test_inverse_of_a_simple():
    x = normal_form(3, [1, 2])
    y = inverse(x)
    assert y.inf == -1
    assert y.factors == (generator(3, 2),)
    assert multiply(x, y) == identity_braid(3)


def test_mixed_signs():
    x = normal_form(3, [1, -2])
    assert x == Braid(3, -1, (generator(3, 2), simple_from_word(3, [2, 1])))
    assert is_rigid(x)


def test_rigidity():
    assert is_rigid(normal_form(3, [1, 1]))
    assert not is_rigid(normal_form(3, [1, 2]))
    assert not is_rigid(identity_braid(3))
    assert not is_rigid(delta_power(3, 2))


def test_bad_letters():
    with pytest.raises(LetterOutOfRange):
        normal_form(3, [3])
    with pytest.raises(LetterOutOfRange):
        normal_form(3, [0])
    with pytest.raises(LetterOutOfRange):
        normal_form(3, [-4])


def test_strand_mismatch():
    with pytest.raises(StrandMismatch):
        multiply(identity_braid(3), identity_braid(4))


def test_key_and_word():
    x = normal_form(3, [2, 1, 1, 2])
    assert x.key() == "3:0:2,3,1|3,1,2"
    assert normal_form(3, x.word()) == x
    y = normal_form(4, [1, -3, -3, 2])
    assert normal_form(4, y.word()) == y


def test_as_simple():
    assert as_simple(normal_form(4, [1, 2])) == simple_from_word(4, [1, 2])
    assert as_simple(delta_power(4, 1)) == delta(4)
    with pytest.raises(ValueError):
        as_simple(normal_form(3, [1, 1]))


@settings(max_examples=100)
@given(words(4), words(4))
def test_normal_form_is_multiplicative(w1, w2):
    assert normal_form(4, w1 + w2) == multiply(normal_form(4, w1), normal_form(4, w2))


@settings(max_examples=100)
@given(words(5))
def test_inverse(w):
    x = normal_form(5, w)
    assert multiply(x, inverse(x)) == identity_braid(5)
    assert multiply(inverse(x), x) == identity_braid(5)
    assert inverse(x) == normal_form(5, [-i for i in reversed(w)])


@settings(max_examples=100)
@given(words(5))
def test_factors_stay_proper_and_left_weighted(w):
    x = normal_form(5, w)
    assert is_left_weighted(x.factors)
    assert all(not f.is_identity and not f.is_delta for f in x.factors)
    assert from_factors(5, x.inf, x.factors) == x


@pytest.mark.parametrize("n", range(3, 8))
def test_relations_do_not_change_the_normal_form(n):
    rng = random.Random(n)
    for _ in range(200):
        size = rng.randint(0, 30)
        w = [rng.choice((1, -1)) * rng.randint(1, n - 1) for _ in range(size)]
        rewritten = random_rewrite(w, n, 40, rng)
        assert normal_form(n, rewritten) == normal_form(n, w)


@pytest.mark.parametrize("n", range(3, 8))
def test_long_words_stay_left_weighted(n):
    rng = random.Random(100 + n)
    for _ in range(200):
        w = [rng.choice((1, -1)) * rng.randint(1, n - 1) for _ in range(30)]
        x = normal_form(n, w)
        assert is_left_weighted(x.factors)
        assert all(not f.is_identity and not f.is_delta for f in x.factors)
        back = [-letter for letter in reversed(w)]
        assert multiply(x, normal_form(n, back)) == identity_braid(n)


@settings(max_examples=50)
@given(words(5))
def test_tau_is_conjugation_by_delta(w):
    x = normal_form(5, w)
    assert tau_braid(x) == conjugate(x, delta_power(5, 1))
    flipped = [(5 - abs(i)) * (1 if i > 0 else -1) for i in w]
    assert tau_braid(x) == normal_form(5, flipped)


@settings(max_examples=50)
@given(words(4), words(4))
def test_conjugate(w, c):
    x, y = normal_form(4, w), normal_form(4, c)
    assert conjugate(x, y) == multiply(multiply(inverse(y), x), y)
    expected = normal_form(4, [-2, -1] + w + [1, 2])
    assert conjugate(x, simple_from_word(4, [1, 2])) == expected
