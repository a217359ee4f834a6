"""Rational right triangle shared by the circumcircle, ellipse and excircle families."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DegenerateTriangle
from .exact_arith import RatLike, as_rat


@dataclass(frozen=True)
class RightTriangle:
    """Legs ``a``, ``b`` and hypotenuse ``c`` with a**2 + b**2 == c**2 exactly."""

    a: Fraction
    b: Fraction
    c: Fraction

    def __post_init__(self):
        for name in ("a", "b", "c"):
            object.__setattr__(self, name, as_rat(getattr(self, name)))
        if min(self.a, self.b, self.c) <= 0:
            raise DegenerateTriangle(f"non-positive side in {self.sides}")
        if self.a**2 + self.b**2 != self.c**2:
            raise DegenerateTriangle(f"{self.sides} is not a right triangle")

    @property
    def sides(self):
        return (self.a, self.b, self.c)

    @property
    def semiperimeter(self) -> Fraction:
        return (self.a + self.b + self.c) / 2

    @property
    def area(self) -> Fraction:
        return self.a * self.b / 2

    @property
    def inradius(self) -> Fraction:
        return self.area / self.semiperimeter

    @property
    def circumradius(self) -> Fraction:
        return self.c / 2

    def scaled(self, factor: RatLike) -> "RightTriangle":
        factor = as_rat(factor)
        return RightTriangle(self.a * factor, self.b * factor, self.c * factor)
