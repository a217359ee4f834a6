"""Exradii of rational right triangles and the unit-exradius families.

For a right triangle with legs a, b and hypotenuse c, r_l = area/(s - l)
simplifies to r_a = s - b, r_b = s - a, r_c = s.  Fixing one exradius to 1
puts the tangent lengths on a genus-zero curve:

    kind A:  z - z*x - x = 1     sides (x + 1, z - 1, z - x)
    kind B:  z*(x - 1) + x + 1 = 0   sides (z - 1, x + 1, z - x)
    kind C:  x*y + x + y = 1     sides (1 - y, 1 - x, x + y)

Each curve is a graph over x, so the families are indexed by x in (0, 1).
Scaling any rational right triangle by 1/r_l lands in the matching family
without changing its area modulo squares.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple, Union

from .errors import DegenerateTriangle, InvalidParameter
from .exact_arith import RatLike, as_rat, format_rat, squarefree_class
from .triangles import RightTriangle


class ExcircleKind(enum.Enum):
    A = "a"
    B = "b"
    C = "c"

    @classmethod
    def parse(cls, value: Union["ExcircleKind", str]) -> "ExcircleKind":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise InvalidParameter(f"excircle kind must be a, b or c, got {value!r}") from None


@dataclass(frozen=True)
class Exradii:
    r_a: Fraction
    r_b: Fraction
    r_c: Fraction

    def __post_init__(self):
        if min(self.r_a, self.r_b, self.r_c) <= 0:
            raise DegenerateTriangle("exradii must be positive")

    def __getitem__(self, kind) -> Fraction:
        kind = ExcircleKind.parse(kind)
        return {ExcircleKind.A: self.r_a, ExcircleKind.B: self.r_b, ExcircleKind.C: self.r_c}[kind]


def exradii(T: RightTriangle) -> Exradii:
    """Closed forms ((a - b + c)/2, (c - a + b)/2, (a + b + c)/2)."""
    a, b, c = T.sides
    return Exradii((a - b + c) / 2, (c - a + b) / 2, (a + b + c) / 2)


def exradii_by_area(T: RightTriangle) -> Exradii:
    """area/(s - l) for each side l; the general-triangle definition."""
    s, area = T.semiperimeter, T.area
    return Exradii(area / (s - T.a), area / (s - T.b), area / (s - T.c))


def _check_x(x: RatLike) -> Fraction:
    x = as_rat(x)
    if not 0 < x < 1:
        raise InvalidParameter(f"x must lie in (0, 1), got {format_rat(x)}")
    return x


def curve_point(kind, x: RatLike) -> Tuple[Fraction, Fraction]:
    """The point (x, z) of X_a / X_b, or (x, y) of X_c, above x."""
    kind = ExcircleKind.parse(kind)
    x = _check_x(x)
    if kind is ExcircleKind.C:
        return x, (1 - x) / (1 + x)
    return x, (1 + x) / (1 - x)


def on_curve(kind, x: RatLike, w: RatLike) -> bool:
    kind = ExcircleKind.parse(kind)
    x, w = as_rat(x), as_rat(w)
    if kind is ExcircleKind.A:
        return w - w * x - x == 1
    if kind is ExcircleKind.B:
        return w * (x - 1) + x + 1 == 0
    return x * w + x + w == 1


def triangle_with_unit_exradius(kind, x: RatLike) -> RightTriangle:
    kind = ExcircleKind.parse(kind)
    x, w = curve_point(kind, x)
    if kind is ExcircleKind.A:
        return RightTriangle(x + 1, w - 1, w - x)
    if kind is ExcircleKind.B:
        return RightTriangle(w - 1, x + 1, w - x)
    return RightTriangle(1 - w, 1 - x, x + w)


def excircle_area_class(kind, x: RatLike) -> Tuple[Fraction, int]:
    """Area x(x + 1)/(1 - x) for kinds A, B and x(1 - x)/(1 + x) for kind C."""
    kind = ExcircleKind.parse(kind)
    x = _check_x(x)
    if kind is ExcircleKind.C:
        area = x * (1 - x) / (1 + x)
    else:
        area = x * (x + 1) / (1 - x)
    return area, squarefree_class(area)


def normalize_to_unit_exradius(T: RightTriangle, kind) -> RightTriangle:
    """Scale T by 1/r_l so that its l-excircle has radius 1."""
    return T.scaled(1 / exradii(T)[kind])


def curve_parameter(T: RightTriangle, kind) -> Fraction:
    """Recover x such that triangle_with_unit_exradius(kind, x) == T.

    T must already have unit exradius of the given kind.
    """
    kind = ExcircleKind.parse(kind)
    if exradii(T)[kind] != 1:
        raise InvalidParameter(f"triangle does not have unit {kind.value}-exradius")
    if kind is ExcircleKind.A:
        return T.a - 1
    if kind is ExcircleKind.B:
        return T.b - 1
    return 1 - T.b
