from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import integer_points_oracle, law_of_cosines_ok, sf_oracle
from taucongruent.errors import DegenerateTriangle, InvalidParameter, NonIntegralInverseTau, PoleInput
from taucongruent.tau_curve import (
    HeronTriangle,
    Tau,
    XTauPoint,
    heron_triangle,
    integer_points,
    integer_points_in_box,
    on_curve,
    point_from_x,
    rational_points,
    tau_congruent_number,
)

taus = st.builds(F, st.integers(1, 200), st.integers(1, 50))
coords = st.builds(F, st.integers(-500, 500), st.integers(1, 60))


def as_pairs(points):
    return {(p.x, p.y) for p in points}


@pytest.mark.parametrize(
    "tau, x, y",
    [(F(1, 2), F(2), F(4, 3)), (F(2), F(3), F(7)), (F(1), F(0), F(-1)), (F(3), F(4), F(13)), (F(3, 2), F(2), F(8))],
)
def test_point_from_x(tau, x, y):
    p = point_from_x(tau, x)
    assert p.y == y
    assert on_curve(tau, p.x, p.y)


def test_point_from_x_pole():
    with pytest.raises(PoleInput):
        point_from_x(1, 1)
    with pytest.raises(PoleInput):
        XTauPoint(Tau(F(1, 2)), F(1, 2), 0)


def test_off_curve_point_rejected():
    with pytest.raises(InvalidParameter):
        XTauPoint(Tau(1), 2, 4)


def test_tau_must_be_positive():
    for bad in (0, -1, F(-1, 2)):
        with pytest.raises(InvalidParameter):
            Tau(bad)


def test_trig_accessors_exact():
    t = Tau(F(1, 2))
    assert t.cos == F(3, 5) and t.sin == F(4, 5)
    assert Tau(1).cos == 0 and Tau(1).sin == 1
    assert Tau(2).cos == F(-3, 5)
    assert t.cos**2 + t.sin**2 == 1


def test_integer_points_tau_one():
    assert as_pairs(integer_points(1)) == {(0, -1), (-1, 0), (2, 3), (3, 2)}


@pytest.mark.parametrize(
    "tau, expected",
    [
        (F(1, 2), {(0, -2), (-2, 0), (1, 3), (3, 1)}),
        (F(1, 3), {(0, -3), (-3, 0), (1, 2), (2, 1)}),
    ],
)
def test_integer_points_small_tau(tau, expected):
    assert integer_points_oracle(tau, 50) == expected
    assert as_pairs(integer_points(tau)) == expected


@pytest.mark.parametrize("k", range(1, 30))
def test_integer_points_match_grid_scan(k):
    tau = F(1, k)
    bound = 2 * k * k + 4
    pts = as_pairs(integer_points(tau))
    # |x| and |y| are at most tau*(k^2 + 2) = k + 2/k, well inside the box
    assert pts == integer_points_oracle(tau, bound)
    assert pts == as_pairs(integer_points_in_box(tau, bound))
    assert all(p[0] == int(p[0]) and p[1] == int(p[1]) for p in pts)


@pytest.mark.parametrize("tau", [F(2, 3), F(2), F(3, 7)])
def test_integer_points_requires_integral_inverse(tau):
    with pytest.raises(NonIntegralInverseTau):
        integer_points(tau)


@pytest.mark.parametrize("tau", [F(2), F(3), F(3, 2), F(5, 4), F(7, 3)])
def test_box_scan_general_tau_matches_grid(tau):
    assert as_pairs(integer_points_in_box(tau, 60)) == integer_points_oracle(tau, 60)


@pytest.mark.parametrize(
    "tau, x, sides",
    [
        (F(1), F(2), (F(4), F(3), F(5))),
        (F(1, 2), F(2), (F(10, 3), F(4), F(10, 3))),
        (F(2), F(3), (F(15, 2), F(7, 2), F(10))),
    ],
)
def test_heron_triangle_examples(tau, x, sides):
    assert law_of_cosines_ok(*sides, tau)
    tri = heron_triangle(point_from_x(tau, x))
    assert tri.sides == sides
    assert tri.inradius == 1


@pytest.mark.parametrize(
    "tau, x, n, cls",
    [(F(1), F(2), F(6), 6), (F(3), F(4), F(156), 39), (F(3, 2), F(2), F(24), 6), (F(1, 2), F(2), F(4, 3), 3)],
)
def test_tau_congruent_number_examples(tau, x, n, cls):
    p = point_from_x(tau, x)
    area, klass = tau_congruent_number(p)
    assert tau * p.x * p.y == n
    assert klass == cls == sf_oracle(n)
    assert area == p.x * p.y / tau
    assert sf_oracle(area) == cls


def test_degenerate_points_have_no_triangle():
    for p in integer_points(1):
        if p.x <= 0 or p.y <= 0:
            with pytest.raises(DegenerateTriangle):
                heron_triangle(p)
            with pytest.raises(DegenerateTriangle):
                tau_congruent_number(p)


def test_heron_triangle_rejects_wrong_angle():
    with pytest.raises(DegenerateTriangle):
        HeronTriangle(3, 4, 6, Tau(1))


def test_rational_points_height_order_skips_pole():
    pts = list(rational_points(1, count=5))
    assert [p.x for p in pts] == [F(1, 2), F(2), F(1, 3), F(2, 3), F(3, 2)]


def test_rational_points_explicit_pole_raises():
    with pytest.raises(PoleInput):
        list(rational_points(F(1, 2), xs=[2, F(1, 2)]))


@settings(max_examples=300, deadline=None)
@given(taus, coords)
def test_point_from_x_always_on_curve(tau, x):
    if x == tau:
        return
    p = point_from_x(tau, x)
    assert p.x * p.y == tau * (p.x + p.y) + 1


@settings(max_examples=300, deadline=None)
@given(taus, st.builds(F, st.integers(1, 500), st.integers(1, 60)))
def test_triangle_properties(tau, delta):
    p = point_from_x(tau, tau + delta)
    tri = heron_triangle(p)
    assert law_of_cosines_ok(*tri.sides, tau)
    assert tri.area == tri.semiperimeter
    assert tri.area == p.x * p.y / tau
    area, cls = tau_congruent_number(p)
    assert sf_oracle(area) == sf_oracle(tau * p.x * p.y) == cls

    mirror = heron_triangle(p.swapped())
    assert (mirror.a, mirror.b, mirror.c) == (tri.b, tri.a, tri.c)
    assert mirror.area == tri.area
