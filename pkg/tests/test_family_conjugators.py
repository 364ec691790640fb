import random

import pytest

from garsidelab._garside_common import FamilyRegimeWarning, NotM0, NotTerminal
from garsidelab.braid import (
    as_simple,
    conjugate,
    delta_power,
    from_simple,
    identity_braid,
    inverse,
    multiply,
    normal_form,
)
from garsidelab.const import ADD_TAIL, CUT_HEAD, PLAIN, TAU
from garsidelab.family import (
    all_rows,
    alpha,
    alpha_row,
    decode_row,
    forced_prefixes,
    initializer,
    m0_elements,
    make_element,
    rho_closed_form,
    rho_generator_form,
    rho_path,
    switching_conjugator,
    switching_word,
    switchings,
    theta,
    transform,
)
from garsidelab.simple import (
    is_prefix,
    right_complement,
    simple_from_word,
    starting_set,
    tau,
)

EXAMPLE_ROWS = [(0, 1, 0, 1, 1, 0, 1), (0, 1, 0, 1, 0, 1, 1)]


def test_switching_words():
    assert switching_word(3) == (3, 2, 4, 3, 1)
    assert switching_word(7) == (7, 6, 8, 7)
    for j in (1, 4, 6):
        with pytest.raises(ValueError):
            switching_word(j)
    assert switching_conjugator(14, 5).length == 4


def test_switching_moves_a_zero_column_right():
    e = make_element([(0, 0, 1, 0, 1, 1), (0, 0, 1, 1, 0, 1)], require_M0=True)
    moves = switchings(e)
    assert [rho for rho, _ in moves] == [switching_conjugator(14, 5)]
    rho, target = moves[0]
    assert target.rows == ((0, 1, 0, 0, 1, 1), (0, 1, 0, 1, 0, 1))
    assert conjugate(alpha(e), rho) == alpha(target)


def test_switching_clears_column_2():
    e = make_element([(0, 1, 1, 0, 1, 1), (0, 1, 1, 1, 0, 1)], require_M0=True)
    (rho, target), = switchings(e)
    assert rho == switching_conjugator(14, 3)
    assert target.rows == ((0, 0, 1, 0, 1, 1), (0, 0, 1, 1, 0, 1))
    assert conjugate(alpha(e), rho) == alpha(target)


@pytest.mark.parametrize("n", [14, 15, 16, 17])
def test_every_switching_is_a_conjugation(n):
    for e in m0_elements(2, n):
        for side in (e, transform(e, "tau")):
            for rho, target in switchings(side):
                assert conjugate(alpha(side), rho) == alpha(target)
                if side.side == TAU:
                    assert target.side == TAU


def test_terminal_elements_have_no_switchings():
    for e in m0_elements(2, 16, terminal_only=True):
        assert switchings(e) == []


def test_switchings_need_m0():
    with pytest.raises(NotM0):
        switchings(make_element([(0, 1), (0, 1)]))


def test_rho_path_of_the_example():
    e = make_element(EXAMPLE_ROWS, b=5, require_M0=True)
    expected = normal_form(17, switching_word(3) + switching_word(5))
    assert rho_path(e) == expected
    assert rho_path(e, random.Random(1)) == expected
    start = transform(e, "hat")
    assert conjugate(alpha(start), expected) == alpha(e)


@pytest.mark.parametrize("n", [14, 15, 16, 17, 18, 19])
def test_closed_form(n):
    e = next(m0_elements(2, n, terminal_only=True))
    p = e.p
    rho = rho_closed_form(n)
    assert rho_path(e) == rho
    assert rho_generator_form(n) == rho
    assert rho.inf == 0
    assert starting_set(rho.factors[0]) == frozenset(range(3, 2 * p - 6, 2))
    for seed in (3, 4):
        assert rho_path(e, random.Random(seed)) == rho


def test_closed_form_small_cases():
    assert rho_closed_form(10) == identity_braid(10)
    for n in range(10, 14):
        assert rho_generator_form(n) == rho_closed_form(n)
    assert rho_closed_form(14) == normal_form(
        14, switching_word(3) + switching_word(5) + switching_word(3)
    )


@pytest.mark.parametrize("n", [14, 15, 16])
def test_initializer(n):
    for e in m0_elements(2, n, terminal_only=True):
        rho, target = initializer(e)
        assert target.side == TAU
        assert target.rows == transform(transform(e, "hat"), "uncycle").rows
        assert conjugate(alpha(e), rho) == alpha(target)

        mirrored = transform(e, "tau")
        rho_t, target_t = initializer(mirrored)
        assert rho_t == tau(rho)
        assert target_t.side == PLAIN
        assert conjugate(alpha(mirrored), rho_t) == alpha(target_t)


def test_initializer_without_switchings():
    for e in m0_elements(2, 10):
        with pytest.warns(FamilyRegimeWarning):
            rho, _ = initializer(e)
        last = from_simple(alpha_row(e.rows[-1]))
        assert rho == as_simple(multiply(inverse(last), delta_power(10, 1)))


def test_initializer_needs_terminal():
    e = make_element(EXAMPLE_ROWS, b=5, require_M0=True)
    with pytest.raises(NotTerminal):
        initializer(e)


def test_forced_prefix_examples():
    assert forced_prefixes((0, 1), None, 2, CUT_HEAD) == {(2, 1)}
    assert forced_prefixes((0, 1), None, 3, ADD_TAIL) == {(3, 2, 4, 3)}
    assert (3, 5, 6, 7) in forced_prefixes((0, 0, 1), None, 3, ADD_TAIL)
    assert forced_prefixes((0, 0, 0, 1), None, 3, ADD_TAIL) == {(3, 5, 6), (7, 6, 8, 7)}
    assert forced_prefixes((0, 1), 1, 3, ADD_TAIL) == {(3, 2)}
    assert forced_prefixes((0, 1), 1, 4, ADD_TAIL) == {(4, 5)}


def test_forced_prefix_errors():
    with pytest.raises(ValueError):
        forced_prefixes((0, 1), None, 3, CUT_HEAD)
    with pytest.raises(ValueError):
        forced_prefixes((0, 1), 1, 2, CUT_HEAD)
    with pytest.raises(ValueError):
        forced_prefixes((0, 1), None, 4, ADD_TAIL)
    with pytest.raises(ValueError):
        forced_prefixes((0, 1), 1, 5, ADD_TAIL)
    with pytest.raises(ValueError):
        forced_prefixes((0, 1), None, 2, "sideways")


@pytest.mark.parametrize("p", range(2, 7))
def test_forced_prefixes_are_prefixes(p):
    n = 2 * p + 2
    for a in all_rows(p):
        s = alpha_row(a)
        tail = right_complement(s)
        for seed in (1,) + tuple(range(2, 2 * p + 1, 2)) + (2 * p + 1,):
            for word in forced_prefixes(a, None, seed, CUT_HEAD):
                assert is_prefix(simple_from_word(n, word), s)
        for seed in range(3, 2 * p, 2):
            for word in forced_prefixes(a, None, seed, ADD_TAIL):
                assert is_prefix(simple_from_word(n, word), tail)


@pytest.mark.parametrize("p", range(2, 6))
def test_odd_forced_prefixes_are_prefixes(p):
    n = 2 * p + 3
    for a in all_rows(p):
        for b in range(1, p):
            tail = right_complement(alpha_row(a, b))
            for seed in (2 * b + 1, 2 * b + 2):
                for word in forced_prefixes(a, b, seed, ADD_TAIL):
                    assert is_prefix(simple_from_word(n, word), tail)


@pytest.mark.parametrize("n", [14, 16])
def test_forced_prefixes_divide_the_rigid_conjugators(n):
    checked = 0
    for e in m0_elements(2, n):
        x = alpha(e)
        head, _ = decode_row(x.factors[0])
        for seed in theta(head).labels:
            for word in forced_prefixes(head, None, seed, CUT_HEAD):
                assert is_prefix(simple_from_word(n, word), x.factors[0])
        last, _ = decode_row(x.factors[-1])
        for rho, _ in switchings(e):
            for seed in range(3, 2 * e.p, 2):
                if not is_prefix(simple_from_word(n, (seed,)), rho):
                    continue
                for word in forced_prefixes(last, None, seed, ADD_TAIL):
                    checked += 1
                    assert is_prefix(simple_from_word(n, word), rho)
    assert checked > 0
