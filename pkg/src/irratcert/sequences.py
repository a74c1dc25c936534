"""Closed-form approximant generators and the sequence transformation rules.

Each generator returns, for one 1-based index n, the exact integer pair
(p, q) of its construction together with the explicit upper bound that
construction guarantees for |q*value - p|.  Pairs are used exactly as
built; nothing is reduced to lowest terms.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial, isqrt

from .algebraic import PowerForm
from .constants import EPow, Root, Sqrt, enclose, integer_nth_root
from .errors import (BadIndexError, CapExceededError, ChainMismatchError,
                     DivisibilityViolationError, ZeroNumeratorError,
                     ZeroScaleError)

# Width of the helper enclosure used when a bound formula needs an upper
# rational estimate of the constant itself.  Coarse by design: the bound
# stays valid for any positive width, and the slack keeps the certified
# residual comfortably below it.
_BOUND_WIDTH = Fraction(1, 1000)


@dataclass(frozen=True)
class Approximant:
    """One term (p, q) of a rational approximation sequence."""

    n: int
    p: int
    q: int

    def __post_init__(self):
        if self.n < 1:
            raise BadIndexError(f"index must be >= 1, got {self.n}")
        if self.q == 0:
            raise ValueError("approximant denominator q must be nonzero")


@dataclass(frozen=True)
class BoundedBy:
    """Upper bound for |q*value - p| at one index.

    strict_positive records whether the construction proves q*value - p > 0
    rather than merely nonzero.
    """

    bound: Fraction
    strict_positive: bool = False

    def __post_init__(self):
        object.__setattr__(self, "bound", Fraction(self.bound))
        if self.bound <= 0:
            raise ValueError("bound must be positive")


def _check_index(n: int):
    if n < 1:
        raise BadIndexError(f"index must be >= 1, got {n}")


def sqrt_approximant(m: int, n: int) -> tuple[Approximant, BoundedBy]:
    """Binomial split of (sqrt(m) - z)**(2n-1), z = floor(sqrt(m)).

    Odd powers of sqrt(m) collect into q, even ones into p, so that
    q*sqrt(m) - p equals (sqrt(m) - z)**(2n-1) exactly: a strictly positive
    quantity shrinking geometrically.
    """
    _check_index(n)
    spec = Sqrt(m)
    z = isqrt(m)
    e = 2 * n - 1
    p = sum(comb(e, 2 * k - 1) * m ** (n - k) * z ** (2 * k - 1)
            for k in range(1, n + 1))
    q = sum(comb(e, 2 * k) * m ** (n - 1 - k) * z ** (2 * k)
            for k in range(n))
    hi = enclose(spec, _BOUND_WIDTH).hi
    return Approximant(n, p, q), BoundedBy((hi - z) ** e, strict_positive=True)


def mth_root_form(a: int, m: int, n: int) -> PowerForm:
    """Coefficients (d_0 .. d_{m-1}) with sum(d_l * a**(l/m)) = (a**(1/m) - z)**(mn-1)."""
    _check_index(n)
    Root(a, m)
    z = integer_nth_root(a, m)
    e = m * n - 1
    coeffs = []
    for l in range(m):
        total = 0
        for k in range(n):
            idx = m * k + l
            if idx <= e:
                total += comb(e, idx) * a ** k * (-z) ** (e - idx)
        coeffs.append(total)
    return PowerForm(tuple(coeffs))


def e_approximant(n: int) -> tuple[Approximant, BoundedBy]:
    """p = sum(n!/i!), q = n!; then 1/(n+1) < q*e - p < 1/n."""
    _check_index(n)
    q = factorial(n)
    p = sum(q // factorial(i) for i in range(n + 1))
    return Approximant(n, p, q), BoundedBy(Fraction(1, n), strict_positive=True)


def inv_e_approximant(n: int) -> tuple[Approximant, BoundedBy]:
    """Alternating partial sum: p = sum((-1)^i n!/i!), q = n!."""
    _check_index(n)
    q = factorial(n)
    p = sum((-1) ** i * (q // factorial(i)) for i in range(n + 1))
    return Approximant(n, p, q), BoundedBy(Fraction(1, n))


def e_squared_approximant(n: int) -> tuple[Approximant, BoundedBy]:
    """Composition of the e chain with the reciprocal 1/e chain at index 2n.

    p = sum((2n)!/i!), q = sum((-1)^i (2n)!/i!); the residual q*e^2 - p is
    strictly positive and below (e^2 + 1)/(2n).
    """
    _check_index(n)
    f = factorial(2 * n)
    p = sum(f // factorial(i) for i in range(2 * n + 1))
    q = sum((-1) ** i * (f // factorial(i)) for i in range(2 * n + 1))
    e2_hi = enclose(EPow(2), _BOUND_WIDTH).hi
    return Approximant(n, p, q), BoundedBy((e2_hi + 1) / (2 * n), strict_positive=True)


def sin_inv_m_approximant(m: int, n: int) -> tuple[Approximant, BoundedBy]:
    """Truncated sine series cleared of denominators at x = 1/m.

    q = m^(4n-1) (4n-1)!, p = sum over k < 2n of (4n-1)!/(2k+1)! (-1)^k m^(4n-2k-2);
    the tail groups into positive pairs, giving 0 < q*sin(1/m) - p and the
    geometric bound 1/(m^2 (4n)^2 - 1).
    """
    _check_index(n)
    if m < 1:
        raise ValueError(f"need m >= 1, got {m}")
    f = factorial(4 * n - 1)
    q = m ** (4 * n - 1) * f
    p = sum((f // factorial(2 * k + 1)) * (-1) ** k * m ** (4 * n - 2 * k - 2)
            for k in range(2 * n))
    bound = Fraction(1, m * m * (4 * n) ** 2 - 1)
    return Approximant(n, p, q), BoundedBy(bound, strict_positive=True)


def cos_inv_m_approximant(m: int, n: int) -> tuple[Approximant, BoundedBy]:
    """Cosine analogue: q = m^(4n-2) (4n-2)!, even factorials in p.

    The grouped tail is positive exactly as in the sine case; the factor
    products now start at 4n-1, so the geometric bound is
    1/(m^2 (4n-1)^2 - 1).
    """
    _check_index(n)
    if m < 1:
        raise ValueError(f"need m >= 1, got {m}")
    f = factorial(4 * n - 2)
    q = m ** (4 * n - 2) * f
    p = sum((f // factorial(2 * k)) * (-1) ** k * m ** (4 * n - 2 * k - 2)
            for k in range(2 * n))
    bound = Fraction(1, m * m * (4 * n - 1) ** 2 - 1)
    return Approximant(n, p, q), BoundedBy(bound, strict_positive=True)


# ---------------------------------------------------------------------------
# Transformation rules.  All operate term-wise on single approximants; apply
# them index by index to transform a whole sequence.

def reciprocal(a: Approximant) -> Approximant:
    """(p, q) for alpha becomes (q, p) for 1/alpha."""
    if a.p == 0:
        raise ZeroNumeratorError(f"numerator is zero at index {a.n}; 1/alpha has no term here")
    return Approximant(a.n, a.q, a.p)


def compose_chain(a: Approximant, b: Approximant) -> Approximant:
    """Chain (p, q) for alpha with (q, q') for beta into (p, q') for alpha*beta.

    Requires b.p == a.q at the same index: the inner denominator must be the
    outer numerator, so that |q' alpha beta - p| telescopes through
    |alpha| |q' beta - q| + |q alpha - p|.
    """
    if a.n != b.n:
        raise ChainMismatchError(f"indices differ: {a.n} vs {b.n}")
    if b.p != a.q:
        raise ChainMismatchError(
            f"chain broken at index {a.n}: inner numerator {b.p} != outer denominator {a.q}")
    return Approximant(a.n, a.p, b.q)


def scaled_compose(a: Approximant, b: Approximant, d: int, cap) -> Approximant:
    """Chain through a bounded integer divisor: a.q == b.p * d, |d| <= cap."""
    if a.n != b.n:
        raise ChainMismatchError(f"indices differ: {a.n} vs {b.n}")
    if abs(d) > Fraction(cap):
        raise CapExceededError(f"divisor |{d}| exceeds cap {cap} at index {a.n}")
    if a.q != b.p * d:
        raise DivisibilityViolationError(
            f"at index {a.n}: {a.q} != {b.p} * {d}")
    return Approximant(a.n, a.p, d * b.q)


def rescale(a: Approximant, scale: int) -> Approximant:
    """(p, q) for scale*alpha becomes (p, scale*q) for alpha."""
    if scale == 0:
        raise ZeroScaleError("cannot rescale by zero")
    return Approximant(a.n, a.p, scale * a.q)
