"""Rational right triangles inscribed in a circle of rational radius R.

The hypotenuse is a diameter, so (a/2R, b/2R) is a rational point of the
unit circle and the usual parametrization gives every such triangle.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from .errors import InvalidParameter
from .exact_arith import as_rat, format_rat, squarefree_class
from .triangles import RightTriangle


@dataclass(frozen=True)
class CircumParam:
    R: Fraction
    t: Fraction

    def __post_init__(self):
        object.__setattr__(self, "R", as_rat(self.R))
        object.__setattr__(self, "t", as_rat(self.t))
        if self.R <= 0:
            raise InvalidParameter(f"radius must be positive, got {format_rat(self.R)}")
        if not 0 < self.t < 1:
            raise InvalidParameter(f"t must lie in (0, 1), got {format_rat(self.t)}")


def inscribed_triangle(p: CircumParam) -> RightTriangle:
    """(2R(1 - t^2)/(1 + t^2), 2R*2t/(1 + t^2), 2R)."""
    R, t = p.R, p.t
    d = 1 + t * t
    return RightTriangle(2 * R * (1 - t * t) / d, 2 * R * 2 * t / d, 2 * R)


def circum_area_and_class(p: CircumParam) -> Tuple[Fraction, int]:
    """Area 4R^2 t(1 - t^2)/(1 + t^2)^2; its class is that of t(1 - t^2), free of R."""
    R, t = p.R, p.t
    area = 4 * R * R * t * (1 - t * t) / (1 + t * t) ** 2
    return area, squarefree_class(t * (1 - t * t))
