import random

import pytest

from garsidelab.braid import normal_form
from garsidelab.family import m0_elements
from garsidelab.utils import (
    generate_many,
    generate_one,
    random_element,
    random_m0_element,
    random_rewrite,
    random_row,
    random_word,
)


def test_random_word():
    rng = random.Random(5)
    word = random_word(4, 20, rng)
    assert len(word) == 20
    assert all(1 <= abs(letter) <= 3 for letter in word)


def test_rewrites_keep_the_braid():
    rng = random.Random(11)
    for n in (3, 5, 8):
        word = random_word(n, 12, rng)
        rewritten = random_rewrite(word, n, 40, rng)
        assert normal_form(n, rewritten) == normal_form(n, word)


def test_random_row():
    row = random_row(6, random.Random(1))
    assert len(row) == 6
    assert row[0] == 0 and row[-1] == 1


def test_random_element():
    e = random_element(3, 15, random.Random(2))
    assert (e.k, e.n) == (3, 15)
    assert 0 <= e.b <= e.p
    assert random_element(2, 14).b is None
    with pytest.raises(ValueError):
        random_element(2, 5)


def test_random_m0_element():
    for n in (10, 11, 14, 17):
        e = random_m0_element(3, n, random.Random(n))
        assert e.is_m0()
        assert e in set(m0_elements(3, n))
    with pytest.raises(ValueError):
        random_m0_element(1, 14)
    with pytest.raises(ValueError):
        random_m0_element(2, 8)


def test_generate():
    elements = list(generate_many(2, 16, 10, seed=4))
    assert len(elements) == 10
    assert elements == list(generate_many(2, 16, 10, seed=4))
    assert generate_one(2, 16, seed=4) == elements[0]
    assert generate_one(2, 14, m0=True).is_m0()
