"""Exact rational intervals, used everywhere floating point would normally appear.

An Enclosure is a closed interval [lo, hi] whose endpoints are Fractions and
which is certified (by whoever built it) to contain some real value.  The
arithmetic here is plain interval arithmetic; since the endpoints are exact
rationals there is no rounding step, so containment is preserved exactly.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from math import floor

DEFAULT_MAX_REFINE = 10**6


def refinement_budget() -> int:
    """Cap on refinement steps; the IRRATCERT_MAX_REFINE env var overrides it."""
    raw = os.environ.get("IRRATCERT_MAX_REFINE")
    return int(raw) if raw else DEFAULT_MAX_REFINE


@dataclass(frozen=True)
class Enclosure:
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if not isinstance(self.lo, Fraction):
            object.__setattr__(self, "lo", Fraction(self.lo))
        if not isinstance(self.hi, Fraction):
            object.__setattr__(self, "hi", Fraction(self.hi))
        if self.lo > self.hi:
            raise ValueError(f"enclosure endpoints out of order: {self.lo} > {self.hi}")

    @classmethod
    def point(cls, value) -> "Enclosure":
        v = Fraction(value)
        return cls(v, v)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def is_point(self) -> bool:
        return self.lo == self.hi

    def contains(self, value) -> bool:
        return self.lo <= value <= self.hi

    def excludes_zero(self) -> bool:
        return self.lo > 0 or self.hi < 0

    def max_abs(self) -> Fraction:
        """Largest |x| over the interval."""
        return max(abs(self.lo), abs(self.hi))

    def min_abs(self) -> Fraction:
        """Smallest |x| over the interval; zero when 0 is inside."""
        if self.lo <= 0 <= self.hi:
            return Fraction(0)
        return min(abs(self.lo), abs(self.hi))

    def __neg__(self) -> "Enclosure":
        return Enclosure(-self.hi, -self.lo)

    def __add__(self, other) -> "Enclosure":
        if isinstance(other, Enclosure):
            return Enclosure(self.lo + other.lo, self.hi + other.hi)
        return Enclosure(self.lo + other, self.hi + other)

    __radd__ = __add__

    def __sub__(self, other) -> "Enclosure":
        if isinstance(other, Enclosure):
            return Enclosure(self.lo - other.hi, self.hi - other.lo)
        return Enclosure(self.lo - other, self.hi - other)

    def __rsub__(self, other) -> "Enclosure":
        return (-self) + other

    def __mul__(self, other) -> "Enclosure":
        if isinstance(other, Enclosure):
            products = (self.lo * other.lo, self.lo * other.hi,
                        self.hi * other.lo, self.hi * other.hi)
            return Enclosure(min(products), max(products))
        other = Fraction(other)
        if other >= 0:
            return Enclosure(self.lo * other, self.hi * other)
        return Enclosure(self.hi * other, self.lo * other)

    __rmul__ = __mul__

    def intersect(self, other: "Enclosure") -> "Enclosure":
        lo, hi = max(self.lo, other.lo), min(self.hi, other.hi)
        if lo > hi:
            raise ValueError("enclosures are disjoint")
        return Enclosure(lo, hi)

    def floor_if_settled(self):
        """Common floor of both endpoints, or None while an integer is straddled."""
        a, b = floor(self.lo), floor(self.hi)
        return a if a == b else None

    def __str__(self):
        return f"[{self.lo}, {self.hi}]"
