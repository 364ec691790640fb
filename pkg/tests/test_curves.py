import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from garsidelab.braid import delta_power, normal_form, tau_braid
from garsidelab.curves import (
    PeriodicCurve,
    StandardCurve,
    all_standard_curves,
    curve_image_simple,
    find_standard_reduction,
    pseudo_anosov_evidence,
    track_curve,
)
from garsidelab.family import all_rows, alpha, alpha_row
from garsidelab.simple import generator
from garsidelab.utils import generate_many


def test_standard_curves():
    assert all_standard_curves(4) == [
        StandardCurve(1, 2),
        StandardCurve(1, 3),
        StandardCurve(2, 3),
        StandardCurve(2, 4),
        StandardCurve(3, 4),
    ]
    with pytest.raises(ValueError):
        StandardCurve(2, 1)
    with pytest.raises(ValueError):
        StandardCurve(0, 2)


def test_image_under_a_simple():
    curve = StandardCurve(1, 2)
    assert curve_image_simple(generator(4, 1), curve) == curve
    assert curve_image_simple(generator(4, 2), curve) is None
    assert curve_image_simple(generator(4, 3), curve) == curve
    with pytest.raises(ValueError):
        curve_image_simple(generator(3, 1), StandardCurve(3, 4))


def test_delta_mirrors_curves():
    assert track_curve(delta_power(4, 1), StandardCurve(1, 2)) == StandardCurve(3, 4)
    assert track_curve(delta_power(4, 2), StandardCurve(1, 2)) == StandardCurve(1, 2)


def test_reducible_braids():
    x = normal_form(3, [1])
    curve = StandardCurve(1, 2)
    assert find_standard_reduction(x) == [PeriodicCurve(curve, (curve,), True)]

    y = normal_form(4, [1, 3])
    found = find_standard_reduction(y)
    assert [c.curve for c in found] == [StandardCurve(1, 2), StandardCurve(3, 4)]
    assert all(c.compatible for c in found)


def test_curve_swapped_by_delta():
    x = normal_form(4, [1, 2, 1, 3, 2, 1, 1])
    found = {c.curve: c.orbit for c in find_standard_reduction(x)}
    assert found[StandardCurve(1, 2)] == (StandardCurve(1, 2), StandardCurve(3, 4))


@pytest.mark.parametrize("n", [6, 7, 10, 14])
def test_family_braids_have_no_standard_reduction(n):
    for e in generate_many(3, n, 3, seed=n):
        assert find_standard_reduction(alpha(e)) == []
        assert pseudo_anosov_evidence(alpha(e)) == (True, True)


def mirrored(found, n):
    return {
        PeriodicCurve(
            c.curve.mirror(n), tuple(o.mirror(n) for o in c.orbit), c.compatible
        )
        for c in found
    }


def test_tau_mirrors_the_reduction():
    x = normal_form(5, [1])
    found = find_standard_reduction(tau_braid(x))
    assert StandardCurve(4, 5) in {c.curve for c in found}
    assert set(found) == mirrored(find_standard_reduction(x), 5)


@settings(max_examples=100)
@given(
    st.sampled_from([4, 5]).flatmap(
        lambda n: st.tuples(
            st.just(n),
            st.lists(
                st.integers(1, n - 1).flatmap(lambda i: st.sampled_from([i, -i])),
                max_size=8,
            ),
        )
    )
)
def test_reduction_commutes_with_tau(case):
    n, word = case
    x = normal_form(n, word)
    found = find_standard_reduction(tau_braid(x))
    assert set(found) == mirrored(find_standard_reduction(x), n)


@pytest.mark.parametrize("p", range(2, 7))
def test_rows_send_no_standard_curve_to_a_standard_curve(p):
    n = 2 * p + 2
    curves = all_standard_curves(n)
    for a in all_rows(p):
        s = alpha_row(a)
        assert [c for c in curves if curve_image_simple(s, c) is not None] == []
