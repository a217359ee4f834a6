"""Rational right triangles circumscribing the area-pi ellipses E_a.

E_a is centered at (a, 1/a) with semi-axes a and 1/a, tangent to both
coordinate axes.  The shear-free map T_a(x, y) = (x/a, a*y) has determinant
one and carries E_a onto the unit circle centered at (1, 1), so a triangle
with legs u, v along the axes circumscribes E_a exactly when the image legs
u/a, a*v circumscribe that circle.  Those are classified by the curve
x*y = x + y + 1, i.e. (x - 1)(y - 1) = 2, parametrized by x = 1 + t,
y = 1 + 2/t.

The ellipse parameter is called ``axis`` here so it does not clash with the
side ``a`` of a triangle.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from .errors import DegenerateTriangle, InvalidParameter
from .exact_arith import RatLike, as_rat, format_rat, squarefree_class
from .triangles import RightTriangle

Point = Tuple[Fraction, Fraction]


@dataclass(frozen=True)
class EllipseSpec:
    axis: Fraction

    def __post_init__(self):
        object.__setattr__(self, "axis", as_rat(self.axis))
        if self.axis == 0:
            raise InvalidParameter("ellipse parameter must be nonzero")

    @property
    def center(self) -> Point:
        return (self.axis, 1 / self.axis)

    @property
    def semi_axes(self) -> Point:
        return (abs(self.axis), abs(1 / self.axis))

    def contains(self, point) -> bool:
        """True iff ``point`` lies on the ellipse itself (not its interior)."""
        x, y = (as_rat(c) for c in point)
        a = self.axis
        return (x - a) ** 2 / a**2 + a**2 * (y - 1 / a) ** 2 == 1

    def point(self, s: RatLike) -> Point:
        """Rational point on E_a: the pull-back of a circle point with slope parameter s."""
        s = as_rat(s)
        X = 1 + (1 - s * s) / (1 + s * s)
        Y = 1 + 2 * s / (1 + s * s)
        return inverse_affine_map(self, (X, Y))


def _as_ellipse(e) -> EllipseSpec:
    return e if isinstance(e, EllipseSpec) else EllipseSpec(e)


def affine_map(e, point) -> Point:
    """T_a(x, y) = (x/a, a*y)."""
    e = _as_ellipse(e)
    x, y = (as_rat(c) for c in point)
    return (x / e.axis, e.axis * y)


def inverse_affine_map(e, point) -> Point:
    e = _as_ellipse(e)
    X, Y = (as_rat(c) for c in point)
    return (e.axis * X, Y / e.axis)


@dataclass(frozen=True)
class UnitCircleCurvePoint:
    """Rational point of x*y = x + y + 1."""

    x: Fraction
    y: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x", as_rat(self.x))
        object.__setattr__(self, "y", as_rat(self.y))
        if (self.x - 1) * (self.y - 1) != 2:
            raise InvalidParameter(f"({format_rat(self.x)}, {format_rat(self.y)}) is not on xy = x + y + 1")

    @classmethod
    def from_t(cls, t: RatLike) -> "UnitCircleCurvePoint":
        t = as_rat(t)
        if t == 0:
            raise InvalidParameter("t = 0 is the pole of y = 1 + 2/t")
        return cls(1 + t, 1 + 2 / t)

    @property
    def t(self) -> Fraction:
        return self.x - 1


@dataclass(frozen=True)
class RightTriangleLegs:
    """Legs u, v of a triangle circumscribing E_axis, plus the hypotenuse of its T_a image.

    The triangle (0,0), (u,0), (0,v) itself generally has an irrational
    hypotenuse; ``hyp`` belongs to the image triangle with legs u/axis and
    axis*v, which is a rational right triangle.
    """

    u: Fraction
    v: Fraction
    hyp: Fraction
    axis: Fraction

    def __post_init__(self):
        for name in ("u", "v", "hyp", "axis"):
            object.__setattr__(self, name, as_rat(getattr(self, name)))
        if min(self.u, self.v, self.hyp) <= 0:
            raise DegenerateTriangle("legs and hypotenuse must be positive")
        U, V = self.transformed_legs
        if self.hyp != abs(U + V - self.u * self.v) or self.hyp**2 != U**2 + V**2:
            raise DegenerateTriangle(
                f"legs ({format_rat(self.u)}, {format_rat(self.v)}) do not circumscribe E_{format_rat(self.axis)}"
            )

    @property
    def transformed_legs(self) -> Point:
        return (self.u / self.axis, self.axis * self.v)

    @property
    def transformed(self) -> RightTriangle:
        U, V = self.transformed_legs
        return RightTriangle(U, V, self.hyp)

    @property
    def area(self) -> Fraction:
        return self.u * self.v / 2


def triangle_from_point(e, p: UnitCircleCurvePoint) -> RightTriangleLegs:
    """u = axis*(x + 1), v = (y + 1)/axis, hyp = |u/axis + axis*v - u*v|."""
    e = _as_ellipse(e)
    if e.axis < 0:
        raise InvalidParameter("E_a with a < 0 lies outside the first quadrant")
    if p.x <= 1:
        raise DegenerateTriangle(f"x = {format_rat(p.x)} must exceed 1 for positive legs")
    u = e.axis * (p.x + 1)
    v = (p.y + 1) / e.axis
    hyp = abs(u / e.axis + e.axis * v - u * v)
    return RightTriangleLegs(u, v, hyp, e.axis)


def triangle_from_t(e, t: RatLike) -> RightTriangleLegs:
    """u = axis*(t + 2), v = (2 + 2/t)/axis, for t > 0."""
    t = as_rat(t)
    if t <= 0:
        raise InvalidParameter(f"t must be positive, got {format_rat(t)}")
    return triangle_from_point(e, UnitCircleCurvePoint.from_t(t))


def area_and_class(t: RatLike) -> Tuple[Fraction, int]:
    t = as_rat(t)
    if t <= 0:
        raise InvalidParameter(f"t must be positive, got {format_rat(t)}")
    return (t + 2) * (t + 1) / t, squarefree_class(t * (t + 1) * (t + 2))


def consecutive_product_triangle(t: int) -> RightTriangle:
    """Right triangle of area t*(t+1)*(t+2): the unit-circle triangle at t, scaled by t.

    >>> consecutive_product_triangle(3).sides
    (Fraction(15, 1), Fraction(8, 1), Fraction(17, 1))
    """
    t = as_rat(t)
    if t.denominator != 1 or t < 1:
        raise InvalidParameter(f"t must be a positive integer, got {format_rat(t)}")
    legs = triangle_from_t(1, t)
    return RightTriangle(legs.u, legs.v, legs.hyp).scaled(t)
