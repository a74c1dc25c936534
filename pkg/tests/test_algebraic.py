"""Tests for power-form reduction, monic transforms, and root classification."""

import random
from fractions import Fraction

import pytest

from irratcert.algebraic import (PowerForm, RootBracket, classify_roots,
                                 integer_root_test, isolate_real_roots,
                                 monic_certificate, monic_transform,
                                 reduce_power_form)
from irratcert.errors import NotMonicError, NotSquarefreeError
from irratcert.intpoly import IntPolynomial

from oracles import modular_powers_remainder, sqrt_bracket


def test_reduce_small_cases():
    mod = IntPolynomial((-2, 0, 0, 1))          # t^3 = 2
    assert reduce_power_form(mod, (0, 0, 0, 1)).coeffs == (2, 0, 0)
    assert reduce_power_form(mod, (1, 2)).coeffs == (1, 2, 0)
    assert reduce_power_form(mod, (0, 0, 0, 0, 0, 0, 1)).coeffs == (4, 0, 0)
    mod2 = IntPolynomial((1, 0, 1))             # t^2 = -1
    assert reduce_power_form(mod2, (0, 0, 1)).coeffs == (-1, 0)
    with pytest.raises(NotMonicError):
        reduce_power_form(IntPolynomial((1, 2)), (1,))


def test_reduce_matches_modular_powers_oracle():
    rng = random.Random(20240815)
    for _ in range(500):
        deg = rng.randint(1, 6)
        modulus_coeffs = [rng.randint(-9, 9) for _ in range(deg)] + [1]
        modulus = IntPolynomial(modulus_coeffs)
        length = rng.randint(1, 12)
        vec = [rng.randint(-9, 9) for _ in range(length)]
        got = reduce_power_form(modulus, vec)
        want = modular_powers_remainder(modulus_coeffs, vec)
        assert got.coeffs == want
        assert len(got.coeffs) == deg


def test_power_form_zero_flag():
    assert PowerForm((0, 0)).is_zero()
    assert not PowerForm((0, 1)).is_zero()


def test_monic_certificate():
    mod = IntPolynomial((-2, 0, 0, 1))
    # (t - 1)^2 = t^2 - 2t + 1, already reduced
    assert monic_certificate(mod, 1, 2).coeffs == (1, -2, 1)
    # (t - 1)^5 reduced mod t^3 - 2
    want = modular_powers_remainder((-2, 0, 0, 1),
                                    [-1, 5, -10, 10, -5, 1])
    assert monic_certificate(mod, 1, 5).coeffs == want


def test_monic_transform_example_and_identity():
    f = IntPolynomial((1, 1, -5, 2))
    g = monic_transform(f)
    assert g.coeffs == (4, 2, -5, 1)
    # defining identity g(a x) = a^(m-1) f(x)
    for f in (IntPolynomial((1, 1, -5, 2)), IntPolynomial((3, -4, 6)),
              IntPolynomial((-7, 0, 0, 0, 3))):
        a = f.leading
        m = f.degree
        g = monic_transform(f)
        for x in range(-3, 4):
            assert g(a * x) == a ** (m - 1) * f(x)


def test_integer_root_test():
    assert set(integer_root_test(IntPolynomial((-4, 0, 1)))) == {2, -2}
    assert set(integer_root_test(IntPolynomial((6, -5, 1)))) == {2, 3}
    assert set(integer_root_test(IntPolynomial((0, 0, -1, 1)))) == {0, 1}
    assert integer_root_test(IntPolynomial((1, 1, 1))) == []
    with pytest.raises(NotMonicError):
        integer_root_test(IntPolynomial((1, 2)))


def test_root_bracket_validation_and_refine():
    f = IntPolynomial((-2, 0, 1))
    br = RootBracket(Fraction(1), Fraction(2), f)
    assert br.width == 1
    tight = br.refine(Fraction(1, 1000))
    assert tight.width <= Fraction(1, 1000)
    lo, hi = sqrt_bracket(2, 60)
    assert tight.lo <= hi and lo <= tight.hi
    with pytest.raises(ValueError):
        RootBracket(Fraction(2), Fraction(1), f)
    with pytest.raises(ValueError):
        RootBracket(Fraction(2), Fraction(3), f)   # no sign change


def test_isolate_real_roots():
    f = IntPolynomial((-2, 0, 1))
    brackets = isolate_real_roots(f)
    assert len(brackets) == 2
    assert all(br.width <= Fraction(1, 4) for br in brackets)
    assert brackets[0].hi < 0 < brackets[1].lo
    assert isolate_real_roots(IntPolynomial((1, 0, 1))) == []
    line = isolate_real_roots(IntPolynomial((-3, 5)))
    assert len(line) == 1
    assert line[0].lo < Fraction(3, 5) < line[0].hi
    with pytest.raises(NotSquarefreeError):
        isolate_real_roots(IntPolynomial((-1, 1)) * IntPolynomial((-1, 1)))


def test_isolate_cubic_example():
    f = IntPolynomial((1, 1, -5, 2))
    brackets = isolate_real_roots(f)
    assert len(brackets) == 3
    windows = [(Fraction(-1, 2), Fraction(0)), (Fraction(1, 2), Fraction(1)),
               (Fraction(2), Fraction(5, 2))]
    for br, (lo, hi) in zip(brackets, windows):
        assert lo <= br.lo < br.hi <= hi


def test_classify_cubic_all_irrational():
    out = classify_roots(IntPolynomial((1, 1, -5, 2)))
    assert len(out) == 3
    assert all(v.is_irrational for v in out)


def test_classify_mixed_polynomial():
    # (2x - 3)(x^2 - 2): one rational root among irrational neighbours
    f = IntPolynomial((-3, 2)) * IntPolynomial((-2, 0, 1))
    out = classify_roots(f)
    assert len(out) == 3
    values = [v.rational_value for v in out]
    assert values[0] is None           # -sqrt(2)
    assert values[1] is None           # sqrt(2), just below 3/2
    assert values[2] == Fraction(3, 2)


def test_classify_pure_rational_roots():
    out = classify_roots(IntPolynomial((-4, 0, 1)))
    assert [v.rational_value for v in out] == [-2, 2]
    out = classify_roots(IntPolynomial((2, -7, 3)))   # 3x^2 - 7x + 2 = (3x-1)(x-2)
    assert [v.rational_value for v in out] == [Fraction(1, 3), 2]
