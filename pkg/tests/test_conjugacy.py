import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from garsidelab._garside_common import BudgetExceeded, ZeroLength
from garsidelab.braid import (
    conjugate,
    delta_power,
    from_simple,
    identity_braid,
    inverse,
    is_rigid,
    multiply,
    normal_form,
)
from garsidelab.conjugacy import SummitCertificate, cycling, decycling, to_super_summit
from garsidelab.simple import all_simples, generator


def words(n, max_size=10):
    letters = st.integers(1, n - 1).flatmap(lambda i: st.sampled_from([i, -i]))
    return st.lists(letters, min_size=1, max_size=max_size)


def test_cycling_a_rigid_braid():
    x = normal_form(3, [1, -2])
    y, c = cycling(x)
    assert c == generator(3, 1)
    assert conjugate(x, c) == y
    assert is_rigid(y)
    assert (y.inf, y.length) == (x.inf, x.length)


def test_zero_length():
    with pytest.raises(ZeroLength):
        cycling(identity_braid(3))
    with pytest.raises(ZeroLength):
        decycling(delta_power(3, 2))


@settings(max_examples=100)
@given(words(4))
def test_cycling_and_decycling_are_conjugations(w):
    x = normal_form(4, w)
    if not x.factors:
        return
    y, c = cycling(x)
    assert conjugate(x, c) == y
    z, d = decycling(x)
    assert conjugate(x, d) == z


def test_rigid_braids_are_already_summit():
    x = normal_form(3, [1, 1])
    cert = to_super_summit(x)
    assert cert == SummitCertificate(x, identity_braid(3), 0, 2)


@settings(max_examples=60, deadline=None)
@given(words(4))
def test_super_summit_certificate(w):
    x = normal_form(4, w)
    cert = to_super_summit(x)
    y = cert.representative
    assert conjugate(x, cert.conjugator) == y
    assert (y.inf, y.sup) == (cert.inf_s, cert.sup_s)
    assert cert.inf_s >= x.inf
    assert cert.sup_s <= x.sup
    if y.factors:
        assert cycling(y)[0].inf == cert.inf_s
        assert decycling(y)[0].sup == cert.sup_s


def test_summit_budget():
    x = normal_form(3, [1, 2])
    with pytest.raises(BudgetExceeded) as info:
        to_super_summit(x, max_steps=1)
    assert isinstance(info.value.partial, SummitCertificate)
    assert not info.value.exhaustive


def summit_bounds_by_search(x):
    """Best inf and sup over conjugates reached by simple steps inside x's window."""
    steps = [from_simple(s) for s in all_simples(x.n)]
    steps += [inverse(s) for s in steps]
    seen = {x.key(): x}
    stack = [x]
    while stack:
        y = stack.pop()
        for c in steps:
            z = conjugate(y, c)
            if z.inf >= x.inf and z.sup <= x.sup and z.key() not in seen:
                seen[z.key()] = z
                stack.append(z)
    return max(y.inf for y in seen.values()), min(y.sup for y in seen.values())


@settings(max_examples=25, deadline=None)
@given(st.sampled_from([3, 4]).flatmap(lambda n: st.tuples(st.just(n), words(n, 4))))
def test_super_summit_matches_exhaustive_search(case):
    n, w = case
    x = normal_form(n, w)
    cert = to_super_summit(x)
    assert (cert.inf_s, cert.sup_s) == summit_bounds_by_search(x)


@settings(max_examples=100)
@given(
    st.sampled_from([3, 4, 5]).flatmap(
        lambda n: st.tuples(
            st.just(n),
            st.integers(-3, 3),
            st.lists(st.integers(1, n - 2), max_size=8),
        )
    )
)
def test_inf_is_the_largest_delta_power_prefix(case):
    # a positive word without the last generator has no Delta prefix
    n, k, word = case
    x = multiply(delta_power(n, k), normal_form(n, word))
    assert x.inf == k
    assert multiply(inverse(delta_power(n, k)), x) == normal_form(n, word)
