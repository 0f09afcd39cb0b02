import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from leftorder.plhomeo import PLHomeo


def doubling():
    return PLHomeo.affine(2, 0)


def test_identity_and_translation():
    e = PLHomeo.identity()
    t = PLHomeo.translation(3)
    assert e(5) == 5
    assert t(Fraction(1, 2)) == Fraction(7, 2)
    assert e.is_identity()
    assert not t.is_identity()


def test_affine_eval():
    f = doubling()
    assert f(3) == 6
    assert f(Fraction(-1, 4)) == Fraction(-1, 2)


def test_pl_eval_and_tails():
    # slope 3 on [-1,-1/2], slope 1/3 on [-1/2,1], identity tails
    g = PLHomeo.from_pairs([(-1, -1), (Fraction(-1, 2), Fraction(1, 2)), (1, 1)])
    assert g(-1) == -1
    assert g(0) == Fraction(2, 3)  # 1/2 + (1/3)*(1/2) between breakpoints
    assert g(-2) == -2  # left tail slope 1 through (-1,-1)
    assert g(4) == 4


def test_compose_order():
    f = doubling()
    t = PLHomeo.translation(1)
    # (f*t)(x) = f(t(x)) = 2(x+1)
    assert (f * t)(3) == 8
    assert (t * f)(3) == 7


def test_inverse_roundtrip():
    g = PLHomeo.from_pairs([(-1, -1), (Fraction(-1, 2), Fraction(1, 2)), (1, 1)])
    gi = g.inverse()
    for x in [-3, -1, Fraction(-3, 4), 0, Fraction(1, 3), 1, 10]:
        assert gi(g(x)) == Fraction(x)
    assert (g * gi).is_identity()
    assert (gi * g).is_identity()


def test_power():
    f = doubling()
    assert f.power(3)(1) == 8
    assert f.power(-2)(8) == 2
    assert f.power(0).is_identity()


def test_equality_canonical():
    # same map described with a redundant collinear breakpoint
    a = PLHomeo.from_pairs([(0, 0), (2, 4)], 2, 2)
    b = PLHomeo.affine(2, 0)
    assert a == b
    assert hash(a) == hash(b)


def test_fixed_points():
    g = PLHomeo.from_pairs([(-1, -1), (Fraction(-1, 2), Fraction(1, 2)), (1, 1)])
    assert g.fixed_points_in(-2, -1) == [-2, -1][1:] or -1 in g.fixed_points_in(-2, -1)
    inner = g.fixed_points_in(Fraction(-1, 2), 1)
    assert inner == [1]
    f = PLHomeo.translation(1)
    assert f.fixed_points_in(-10, 10) == []


def test_integrate():
    f = doubling()
    assert f.integrate(0, 1) == 1  # int of 2x over [0,1]
    g = PLHomeo.identity()
    assert g.integrate(-1, 1) == 0


def test_validation():
    with pytest.raises(ValueError):
        PLHomeo.from_pairs([(0, 0), (0, 1)])
    with pytest.raises(ValueError):
        PLHomeo.from_pairs([(0, 1), (1, 0)])
    with pytest.raises(ValueError):
        PLHomeo.from_pairs([(0, 0)], left_slope=0)
    with pytest.raises(ValueError):
        PLHomeo.affine(-1, 0)


def test_lateral_slopes():
    g = PLHomeo.from_pairs([(0, 0), (1, 2)], 1, 3)
    assert g.slope_right(0) == 2
    assert g.slope_left(0) == 1
    assert g.slope_right(1) == 3
    assert g.slope_left(1) == 2
    assert g.slope_right(Fraction(1, 2)) == 2
    assert g.slopes() == [1, 2, 3]


def random_pl(rng: random.Random) -> PLHomeo:
    n = rng.randint(1, 4)
    xs = sorted(rng.sample(range(-10, 11), n))
    ys = sorted(rng.sample(range(-10, 11), n))
    slopes = [Fraction(a, b) for a in (1, 2, 3) for b in (1, 2, 3)]
    return PLHomeo.from_pairs(list(zip(xs, ys)), rng.choice(slopes), rng.choice(slopes))


def test_compose_associative_seeded():
    rng = random.Random(7)
    for _ in range(25):
        f, g, h = random_pl(rng), random_pl(rng), random_pl(rng)
        lhs = (f * g) * h
        rhs = f * (g * h)
        for x in [-7, Fraction(-1, 3), 0, Fraction(5, 2), 9]:
            assert lhs(x) == rhs(x)
        assert lhs == rhs


@given(st.integers(min_value=-20, max_value=20), st.integers(min_value=1, max_value=5))
def test_affine_inverse_property(c, s):
    f = PLHomeo.affine(s, c)
    fi = f.inverse()
    assert (f * fi).is_identity()
    assert fi(f(Fraction(c, 3))) == Fraction(c, 3)
