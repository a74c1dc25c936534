"""Tests for the rational interval type."""

from fractions import Fraction

import pytest

from irratcert.enclosure import DEFAULT_MAX_REFINE, Enclosure, refinement_budget


def test_construction_coerces_and_orders():
    e = Enclosure("1/3", 0.5)
    assert e.lo == Fraction(1, 3)
    assert e.hi == Fraction(1, 2)
    assert isinstance(e.lo, Fraction) and isinstance(e.hi, Fraction)
    with pytest.raises(ValueError):
        Enclosure(1, 0)


def test_point_and_width():
    p = Enclosure.point(Fraction(3, 7))
    assert p.is_point
    assert p.width == 0
    assert Enclosure(1, 3).width == 2
    assert not Enclosure(1, 3).is_point


def test_contains_and_zero_exclusion():
    e = Enclosure(Fraction(-1, 2), Fraction(1, 3))
    assert e.contains(0)
    assert e.contains(Fraction(-1, 2))
    assert not e.contains(1)
    assert not e.excludes_zero()
    assert Enclosure(1, 2).excludes_zero()
    assert Enclosure(-2, -1).excludes_zero()
    # an endpoint touching zero does not exclude it
    assert not Enclosure(0, 1).excludes_zero()
    assert not Enclosure(-1, 0).excludes_zero()


def test_abs_extremes():
    assert Enclosure(-3, 2).max_abs() == 3
    assert Enclosure(-3, 2).min_abs() == 0
    assert Enclosure(1, 4).min_abs() == 1
    assert Enclosure(-4, -1).min_abs() == 1
    assert Enclosure(-4, -1).max_abs() == 4


def test_addition_subtraction_negation():
    a = Enclosure(1, 2)
    b = Enclosure(-1, 3)
    assert a + b == Enclosure(0, 5)
    assert a - b == Enclosure(-2, 3)
    assert -a == Enclosure(-2, -1)
    assert a + 1 == Enclosure(2, 3)
    assert 1 - a == Enclosure(-1, 0)
    assert 3 + a == Enclosure(4, 5)


def test_scalar_multiplication_sign_aware():
    a = Enclosure(1, 2)
    assert a * 3 == Enclosure(3, 6)
    assert a * -3 == Enclosure(-6, -3)
    assert -2 * a == Enclosure(-4, -2)
    assert a * 0 == Enclosure(0, 0)
    assert a * Fraction(1, 2) == Enclosure(Fraction(1, 2), 1)


def _grid():
    vals = [Fraction(k, 2) for k in range(-6, 7)]
    out = []
    for lo in vals:
        for hi in vals:
            if lo <= hi:
                out.append(Enclosure(lo, hi))
    return out


def test_interval_product_contains_all_pointwise_products():
    # exhaustive over a half-integer grid: the product enclosure must hold
    # x*y for x, y running over endpoints and midpoints of the factors
    for a in _grid():
        mids_a = [a.lo, (a.lo + a.hi) / 2, a.hi]
        for b in _grid():
            prod = a * b
            for x in mids_a:
                for y in (b.lo, (b.lo + b.hi) / 2, b.hi):
                    assert prod.lo <= x * y <= prod.hi


def test_intersect():
    a = Enclosure(0, 2)
    b = Enclosure(1, 3)
    assert a.intersect(b) == Enclosure(1, 2)
    assert b.intersect(a) == Enclosure(1, 2)
    assert a.intersect(Enclosure(2, 5)) == Enclosure(2, 2)
    with pytest.raises(ValueError):
        a.intersect(Enclosure(3, 4))


def test_floor_if_settled():
    assert Enclosure(Fraction(5, 2), Fraction(11, 4)).floor_if_settled() == 2
    assert Enclosure(Fraction(-3, 2), Fraction(-5, 4)).floor_if_settled() == -2
    assert Enclosure(Fraction(19, 10), Fraction(21, 10)).floor_if_settled() is None
    # integer point settles; interval with an interior integer does not
    assert Enclosure.point(4).floor_if_settled() == 4
    assert Enclosure(Fraction(7, 2), Fraction(9, 2)).floor_if_settled() is None


def test_str_form():
    assert str(Enclosure(1, Fraction(3, 2))) == "[1, 3/2]"


def test_refinement_budget_env(monkeypatch):
    monkeypatch.delenv("IRRATCERT_MAX_REFINE", raising=False)
    assert refinement_budget() == DEFAULT_MAX_REFINE
    monkeypatch.setenv("IRRATCERT_MAX_REFINE", "123")
    assert refinement_budget() == 123
