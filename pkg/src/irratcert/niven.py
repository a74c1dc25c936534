"""Niven polynomials x^n (1-x)^n / n! and their derivative functionals.

Every derivative of f_n at 0 and 1 is an integer, f_n is tiny on [0, 1],
and suitable alternating combinations F of those derivatives satisfy an
exact integral identity: F(1) * e^k - F(0) equals a positive integral that
shrinks to zero.  A Gaussian-integer variant produces an integer triple
(a, c, d) with c*cos(p/q) - d*sin(p/q) - a provably small but nonzero.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .errors import (AngleNearPiError, AngleOutOfRangeError, BadIndexError,
                     ZeroExponentError)
from .gaussian import GaussianInteger, i_power


@dataclass(frozen=True)
class RationalPolynomial:
    """Ascending rational coefficients, trailing zeros trimmed."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        cleaned = [Fraction(c) for c in self.coeffs]
        while cleaned and cleaned[-1] == 0:
            cleaned.pop()
        object.__setattr__(self, "coeffs", tuple(cleaned))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc


@dataclass(frozen=True)
class FPair:
    """A derivative functional evaluated at the endpoints of [0, 1]."""

    at0: int
    at1: int


@dataclass(frozen=True)
class GaussPair:
    at0: GaussianInteger
    at1: GaussianInteger


@dataclass(frozen=True)
class TrigWitness:
    """Integer triple with |c*cos(angle) - d*sin(angle) - a| in (0, bound)."""

    a: int
    c: int
    d: int
    bound: Fraction


def _check_index(n: int):
    if n < 1:
        raise BadIndexError(f"index must be >= 1, got {n}")


def niven_poly(n: int) -> RationalPolynomial:
    """x^n (1-x)^n / n!; degree 2n, coefficient of x^(n+i) is (-1)^i C(n,i)/n!."""
    _check_index(n)
    nf = factorial(n)
    coeffs = [Fraction(0)] * n
    coeffs.extend(Fraction((-1) ** i * comb(n, i), nf) for i in range(n + 1))
    return RationalPolynomial(tuple(coeffs))


def niven_derivative_at(n: int, j: int, point: int) -> int:
    """Exact integer value of the j-th derivative of f_n at 0 or 1.

    Derivatives vanish outside n <= j <= 2n; inside, the value at 0 is
    j!/n! times the coefficient (-1)^(j-n) C(n, j-n), and the symmetry
    f(x) = f(1-x) flips the sign at 1 for odd j.
    """
    _check_index(n)
    if j < 0:
        raise ValueError(f"derivative order must be >= 0, got {j}")
    if point not in (0, 1):
        raise ValueError(f"point must be 0 or 1, got {point}")
    if j < n or j > 2 * n:
        return 0
    i = j - n
    value = (-1) ** i * comb(n, i) * (factorial(j) // factorial(n))
    if point == 1 and j % 2 == 1:
        value = -value
    return value


def exp_functional_int(n: int, k: int) -> FPair:
    """F = sum((-1)^i k^(2n-i) f^(i)) at 0 and 1, for integer k >= 1.

    The pair satisfies 0 < F(1) e^k - F(0) < e^k k^(2n+1) / n!, because the
    mismatch equals the integral of e^(kx) k^(2n+1) f_n over [0, 1].
    """
    _check_index(n)
    if k < 1:
        raise ValueError(f"need an integer exponent k >= 1, got {k}")
    values = []
    for point in (0, 1):
        total = 0
        for i in range(2 * n + 1):
            total += (-1) ** i * k ** (2 * n - i) * niven_derivative_at(n, i, point)
        values.append(total)
    return FPair(values[0], values[1])


def exp_functional_rational(n: int, r) -> FPair:
    """F = sum((-1)^i p^(2n-i) q^i f^(i)) at 0 and 1, for r = p/q nonzero.

    F(1) e^r - F(0) equals (p^(2n+1)/q) times the integral of e^(rx) f_n,
    so it is nonzero with |.| <= |p|^(2n+1) max(1, e^r) / (n! q).
    """
    _check_index(n)
    r = Fraction(r)
    if r == 0:
        raise ZeroExponentError("exponent must be nonzero")
    p, q = r.numerator, r.denominator
    values = []
    for point in (0, 1):
        total = 0
        for i in range(2 * n + 1):
            total += (-1) ** i * p ** (2 * n - i) * q ** i * niven_derivative_at(n, i, point)
        values.append(total)
    return FPair(values[0], values[1])


def trig_functional(n: int, p: int, q: int) -> tuple[GaussPair, TrigWitness]:
    """Gaussian-integer functional for the angle p/q in (0, pi].

    F = sum((-1)^i (ip)^(2n-i) q^i f^(i)); writing F(0) = a + bi and
    F(1) = c + di, the combination c*cos(p/q) - d*sin(p/q) - a is nonzero
    with absolute value below p^(2n+1) / (n! q).

    The upper end of the angle range is policed rationally: angles at most
    3.14159 are accepted, angles in (3.14159, 355/113] are refused as too
    close to pi to resolve, anything larger is out of range.
    """
    _check_index(n)
    if p < 1 or q < 1:
        raise ValueError(f"angle must be a ratio of positive integers, got {p}/{q}")
    if p * 100000 > 314159 * q:
        if 113 * p <= 355 * q:
            raise AngleNearPiError(
                f"angle {p}/{q} lies within the refusal window just below pi")
        raise AngleOutOfRangeError(f"angle {p}/{q} exceeds pi")
    values = []
    for point in (0, 1):
        total = GaussianInteger(0, 0)
        for i in range(2 * n + 1):
            scalar = (-1) ** i * p ** (2 * n - i) * q ** i * niven_derivative_at(n, i, point)
            total = total + i_power(2 * n - i) * scalar
        values.append(total)
    pair = GaussPair(values[0], values[1])
    bound = Fraction(p ** (2 * n + 1), factorial(n) * q)
    witness = TrigWitness(a=pair.at0.re, c=pair.at1.re, d=pair.at1.im, bound=bound)
    return pair, witness
