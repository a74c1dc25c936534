"""Dense univariate polynomials with integer coefficients, ascending order.

Coefficient index equals the exponent, trailing zeros are trimmed, and the
zero polynomial has an empty coefficient tuple (degree -1).  Sturm-chain
helpers at module level count distinct real roots in an interval exactly;
they are the backbone of root isolation and bracket validation.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

from .enclosure import Enclosure


def _trimmed(coeffs):
    n = len(coeffs)
    while n > 0 and coeffs[n - 1] == 0:
        n -= 1
    return coeffs[:n]


class IntPolynomial:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        object.__setattr__(self, "coeffs", tuple(_trimmed([int(c) for c in coeffs])))

    def __setattr__(self, name, value):
        raise AttributeError("IntPolynomial is immutable")

    @classmethod
    def from_csv(cls, text: str) -> "IntPolynomial":
        """Parse the wire format: ascending decimal coefficients, comma-separated."""
        return cls(int(part.strip()) for part in text.split(","))

    def to_csv(self) -> str:
        return ",".join(str(c) for c in (self.coeffs or (0,)))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __eq__(self, other):
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"IntPolynomial({list(self.coeffs)})"

    def __neg__(self):
        return IntPolynomial(-c for c in self.coeffs)

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(out)

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial(c * other for c in self.coeffs)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __call__(self, x):
        """Horner evaluation; exact for int or Fraction arguments."""
        acc = 0 if isinstance(x, int) else Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_interval(self, enc: Enclosure) -> Enclosure:
        """Interval Horner evaluation."""
        acc = Enclosure.point(0)
        for c in reversed(self.coeffs):
            acc = acc * enc + c
        return acc

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial(i * c for i, c in enumerate(self.coeffs) if i > 0)


# ---------------------------------------------------------------------------
# Sturm chains over the rationals.

def _frac_list(p: IntPolynomial) -> list[Fraction]:
    return [Fraction(c) for c in p.coeffs]


def _frac_trim(coeffs: list[Fraction]) -> list[Fraction]:
    n = len(coeffs)
    while n > 0 and coeffs[n - 1] == 0:
        n -= 1
    return coeffs[:n]


def _frac_rem(num: list[Fraction], den: list[Fraction]) -> list[Fraction]:
    """Remainder of polynomial division with rational coefficients."""
    num = list(num)
    dd = len(den) - 1
    lead = den[-1]
    while len(num) - 1 >= dd and num:
        factor = num[-1] / lead
        shift = len(num) - 1 - dd
        for i, c in enumerate(den):
            num[shift + i] -= factor * c
        num = _frac_trim(num)
        if not num:
            break
    return num


def _eval_frac(coeffs: list[Fraction], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def sturm_chain(f: IntPolynomial) -> list[list[Fraction]]:
    """Sturm chain of f, coefficient lists over the rationals."""
    chain = [_frac_list(f), _frac_list(f.derivative())]
    while chain[-1]:
        rem = _frac_rem(chain[-2], chain[-1])
        if not rem:
            break
        chain.append([-c for c in rem])
    return [c for c in chain if c]


def _sign_variations(values) -> int:
    signs = [1 if v > 0 else -1 for v in values if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _primitive(coeffs: list[Fraction]) -> IntPolynomial:
    """Clear denominators and the content, normalize the leading sign."""
    if not coeffs:
        return IntPolynomial()
    scale = lcm(*(c.denominator for c in coeffs))
    ints = [int(c * scale) for c in coeffs]
    content = 0
    for c in ints:
        content = gcd(content, c)
    ints = [c // content for c in ints]
    if ints[-1] < 0:
        ints = [-c for c in ints]
    return IntPolynomial(ints)


def poly_gcd(f: IntPolynomial, g: IntPolynomial) -> IntPolynomial:
    """Primitive gcd with positive leading coefficient."""
    a, b = _frac_list(f), _frac_list(g)
    while b:
        a, b = b, _frac_rem(a, b)
    return _primitive(a)


def is_squarefree(f: IntPolynomial) -> bool:
    if f.degree < 2:
        return not f.is_zero
    return poly_gcd(f, f.derivative()).degree == 0


def squarefree_part(f: IntPolynomial) -> IntPolynomial:
    """f divided exactly by gcd(f, f'), made primitive."""
    g = poly_gcd(f, f.derivative())
    if g.degree == 0:
        return f
    num = _frac_list(f)
    den = _frac_list(g)
    dd = len(den) - 1
    quot = [Fraction(0)] * (len(num) - dd)
    while num and len(num) - 1 >= dd:
        factor = num[-1] / den[-1]
        shift = len(num) - 1 - dd
        quot[shift] = factor
        for i, c in enumerate(den):
            num[shift + i] -= factor * c
        num = _frac_trim(num)
    if num:
        raise ValueError("gcd does not divide the polynomial; coefficients corrupt")
    return _primitive(quot)


def cauchy_root_bound(f: IntPolynomial) -> int:
    """Integer B with every real root of f strictly inside (-B, B)."""
    if f.degree < 1:
        raise ValueError("need degree >= 1")
    lead = abs(f.leading)
    worst = max(abs(c) for c in f.coeffs[:-1]) if f.degree >= 1 else 0
    return 2 + worst // lead


def count_roots_between(f: IntPolynomial, lo: Fraction, hi: Fraction) -> int:
    """Number of distinct real roots of f in the open interval (lo, hi).

    Endpoints must not themselves be roots.
    """
    lo, hi = Fraction(lo), Fraction(hi)
    if lo >= hi:
        raise ValueError("need lo < hi")
    g = squarefree_part(f)
    if g(lo) == 0 or g(hi) == 0:
        raise ValueError("interval endpoint is a root")
    chain = sturm_chain(g)
    at_lo = _sign_variations(_eval_frac(c, lo) for c in chain)
    at_hi = _sign_variations(_eval_frac(c, hi) for c in chain)
    return at_lo - at_hi
