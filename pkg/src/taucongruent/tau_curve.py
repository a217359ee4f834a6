"""Heron triangles with a prescribed angle that tightly circumscribe the unit circle.

The angle theta is carried by tau = tan(theta/2), a positive rational.  The
two tangent lengths x, y from the vertices adjacent to the side opposite
theta lie on the genus-zero curve

    X_tau:  x*y = tau*(x + y) + 1,

which has the rational parametrization y = (tau*x + 1)/(x - tau).  A point
with x, y > 0 gives the triangle (y + 1/tau, x + 1/tau, x + y) whose incircle
is the unit circle, and whose area x*y/tau is congruent to tau*x*y modulo
rational squares.

theta itself is never evaluated; sin and cos are the exact rationals
2*tau/(1 + tau**2) and (1 - tau**2)/(1 + tau**2).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import islice
from typing import FrozenSet, Iterable, Iterator, Optional, Tuple, Union

from .errors import DegenerateTriangle, InvalidParameter, NonIntegralInverseTau, PoleInput
from .exact_arith import RatLike, as_rat, format_rat, rationals_by_height, signed_divisors, squarefree_class


@dataclass(frozen=True)
class Tau:
    """tau = tan(theta/2) > 0 for an angle theta in (0, pi)."""

    value: Fraction

    def __post_init__(self):
        object.__setattr__(self, "value", as_rat(self.value))
        if self.value <= 0:
            raise InvalidParameter(f"tau must be positive, got {format_rat(self.value)}")

    @property
    def inverse(self) -> Fraction:
        return 1 / self.value

    @property
    def cos(self) -> Fraction:
        t2 = self.value**2
        return (1 - t2) / (1 + t2)

    @property
    def sin(self) -> Fraction:
        return 2 * self.value / (1 + self.value**2)

    def __str__(self):
        return format_rat(self.value)


TauLike = Union[Tau, RatLike]


def as_tau(tau: TauLike) -> Tau:
    return tau if isinstance(tau, Tau) else Tau(tau)


def on_curve(tau: TauLike, x: RatLike, y: RatLike) -> bool:
    t = as_tau(tau).value
    x, y = as_rat(x), as_rat(y)
    return x * y == t * (x + y) + 1


@dataclass(frozen=True)
class XTauPoint:
    tau: Tau
    x: Fraction
    y: Fraction

    def __post_init__(self):
        object.__setattr__(self, "tau", as_tau(self.tau))
        object.__setattr__(self, "x", as_rat(self.x))
        object.__setattr__(self, "y", as_rat(self.y))
        if self.x == self.tau.value:
            raise PoleInput(f"x = tau = {self.tau} is the pole of X_tau")
        if not on_curve(self.tau, self.x, self.y):
            raise InvalidParameter(f"({format_rat(self.x)}, {format_rat(self.y)}) is not on X_{self.tau}")

    def swapped(self) -> "XTauPoint":
        return XTauPoint(self.tau, self.y, self.x)


@dataclass(frozen=True)
class HeronTriangle:
    """Sides a, b, c with the angle theta between a and b."""

    a: Fraction
    b: Fraction
    c: Fraction
    tau: Tau

    def __post_init__(self):
        object.__setattr__(self, "tau", as_tau(self.tau))
        for name in ("a", "b", "c"):
            object.__setattr__(self, name, as_rat(getattr(self, name)))
        a, b, c = self.sides
        if min(a, b, c) <= 0 or a + b <= c or a + c <= b or b + c <= a:
            raise DegenerateTriangle(f"({a}, {b}, {c}) violates the triangle inequality")
        if not self.satisfies_law_of_cosines():
            raise DegenerateTriangle(f"({a}, {b}, {c}) has no angle theta with tan(theta/2) = {self.tau}")

    @property
    def sides(self) -> Tuple[Fraction, Fraction, Fraction]:
        return (self.a, self.b, self.c)

    def satisfies_law_of_cosines(self) -> bool:
        return self.c**2 == self.a**2 + self.b**2 - 2 * self.a * self.b * self.tau.cos

    @property
    def semiperimeter(self) -> Fraction:
        return (self.a + self.b + self.c) / 2

    @property
    def area(self) -> Fraction:
        return self.a * self.b * self.tau.sin / 2

    @property
    def inradius(self) -> Fraction:
        return self.area / self.semiperimeter


def point_from_x(tau: TauLike, x: RatLike) -> XTauPoint:
    """The point of X_tau above x; raises PoleInput at x = tau.

    >>> point_from_x(Fraction(1, 2), 2).y
    Fraction(4, 3)
    """
    tau = as_tau(tau)
    x = as_rat(x)
    t = tau.value
    if x == t:
        raise PoleInput(f"x = tau = {tau} is the pole of y = (tau*x + 1)/(x - tau)")
    return XTauPoint(tau, x, (t * x + 1) / (x - t))


def integer_points(tau: TauLike) -> FrozenSet[XTauPoint]:
    """All integer points of X_tau when 1/tau is a positive integer.

    Writing k = 1/tau, the curve becomes (k*x - 1)(k*y - 1) = k**2 + 1, so
    integer points come from divisors d of k**2 + 1 with d = -1 (mod k),
    via x = (d + 1)/k and y = ((k**2 + 1)/d + 1)/k.
    """
    tau = as_tau(tau)
    k = tau.inverse
    if k.denominator != 1:
        raise NonIntegralInverseTau(f"1/tau = {format_rat(k)} is not a positive integer")
    k = k.numerator
    n = k * k + 1
    t = tau.value
    points = set()
    for d in signed_divisors(n):
        if d % k != k - 1:
            continue
        points.add(XTauPoint(tau, t * (d + 1), t * (Fraction(n, d) + 1)))
    return frozenset(points)


def integer_points_in_box(tau: TauLike, bound: int) -> FrozenSet[XTauPoint]:
    """Integer points of X_tau with |x|, |y| <= bound, found by scanning x.

    Works for any positive rational tau; no completeness claim is made
    beyond the box.
    """
    tau = as_tau(tau)
    t = tau.value
    found = set()
    for x in range(-bound, bound + 1):
        if x == t:
            continue
        y = (t * x + 1) / (x - t)
        if y.denominator == 1 and abs(y) <= bound:
            found.add(XTauPoint(tau, x, y))
    return frozenset(found)


def heron_triangle(p: XTauPoint) -> HeronTriangle:
    """Triangle (y + 1/tau, x + 1/tau, x + y) with inradius 1."""
    if p.x <= 0 or p.y <= 0:
        raise DegenerateTriangle(
            f"point ({format_rat(p.x)}, {format_rat(p.y)}) needs x > 0 and y > 0 for a triangle"
        )
    k = p.tau.inverse
    return HeronTriangle(p.y + k, p.x + k, p.x + p.y, p.tau)


def tau_congruent_number(p: XTauPoint) -> Tuple[Fraction, int]:
    """Exact area x*y/tau and the class of tau*x*y modulo rational squares."""
    if p.x <= 0 or p.y <= 0:
        raise DegenerateTriangle(
            f"point ({format_rat(p.x)}, {format_rat(p.y)}) needs x > 0 and y > 0 for a triangle"
        )
    t = p.tau.value
    return p.x * p.y / t, squarefree_class(t * p.x * p.y)


def rational_points(tau: TauLike, xs: Optional[Iterable[RatLike]] = None, count: Optional[int] = None) -> Iterator[XTauPoint]:
    """Points of X_tau over the given x values, or over positive rationals by height.

    The height-ordered stream skips the pole x = tau; an explicit x equal
    to tau raises PoleInput.
    """
    tau = as_tau(tau)
    if xs is not None:
        return (point_from_x(tau, x) for x in xs)
    points = (point_from_x(tau, x) for x in rationals_by_height() if x != tau.value)
    return points if count is None else islice(points, count)
