"""Exact Gaussian integers a + b*i (Python's complex is float-backed, so not usable here)."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class GaussianInteger:
    re: int
    im: int

    def __add__(self, other: "GaussianInteger") -> "GaussianInteger":
        return GaussianInteger(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "GaussianInteger") -> "GaussianInteger":
        return GaussianInteger(self.re - other.re, self.im - other.im)

    def __neg__(self) -> "GaussianInteger":
        return GaussianInteger(-self.re, -self.im)

    def __mul__(self, other):
        if isinstance(other, int):
            return GaussianInteger(self.re * other, self.im * other)
        return GaussianInteger(self.re * other.re - self.im * other.im,
                               self.re * other.im + self.im * other.re)

    def __rmul__(self, other: int) -> "GaussianInteger":
        return GaussianInteger(self.re * other, self.im * other)

    def __str__(self):
        return f"{self.re}{self.im:+d}i"


_UNITS = ((1, 0), (0, 1), (-1, 0), (0, -1))


def i_power(k: int) -> GaussianInteger:
    """i**k as a Gaussian integer, k >= 0."""
    if k < 0:
        raise ValueError("negative power of i not supported")
    return GaussianInteger(*_UNITS[k % 4])
