"""Recompute the three summary tables of the construction from first principles.

Only the input parameters of each row and the class values as originally
published are stored here.  Every other number is computed; a published
value is used solely to annotate rows where it disagrees with the
computation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from . import ellipse, excircle, tau_curve
from .exact_arith import format_rat

# (tau, x) -> published (y, n, class)
TABLE1_INPUTS: Tuple[Tuple[Fraction, Fraction, Tuple[Fraction, Fraction, int]], ...] = (
    (Fraction(1, 2), Fraction(2), (Fraction(4, 3), Fraction(4, 3), 3)),
    (Fraction(1), Fraction(2), (Fraction(3), Fraction(6), 6)),
    (Fraction(3, 2), Fraction(2), (Fraction(8), Fraction(24), 6)),
    (Fraction(2), Fraction(3), (Fraction(7), Fraction(42), 42)),
    (Fraction(3), Fraction(4), (Fraction(13), Fraction(156), 39)),
)

# t -> published class
TABLE2_INPUTS: Tuple[Tuple[int, int], ...] = ((1, 6), (3, 15), (4, 30), (5, 210), (6, 42))

TABLE3_SAMPLE_XS = tuple(Fraction(p, q) for q in range(2, 8) for p in range(1, q))


@dataclass(frozen=True)
class Table1Row:
    tau: Fraction
    x: Fraction
    y: Fraction
    n: Fraction
    cls: int
    erratum: Optional[str] = None

    def format(self) -> str:
        cells = ", ".join(format_rat(v) for v in (self.tau, self.x, self.y, self.n)) + f", {self.cls}"
        return cells if self.erratum is None else f"{cells}  [{self.erratum}]"


@dataclass(frozen=True)
class Table2Row:
    t: int
    product: int
    cls: int
    erratum: Optional[str] = None

    def format(self) -> str:
        cells = f"{self.t}, {self.t}·{self.t + 1}·{self.t + 2}, {self.cls}"
        return cells if self.erratum is None else f"{cells}  [{self.erratum}]"


@dataclass(frozen=True)
class Table3Row:
    kind: excircle.ExcircleKind
    parametrization: str
    curve: str
    area_formula: str
    sample_x: Fraction
    sample_sides: Tuple[Fraction, Fraction, Fraction]
    sample_area: Fraction
    sample_class: int
    verified: bool

    def format(self) -> str:
        sides = ", ".join(format_rat(s) for s in self.sample_sides)
        status = "ok" if self.verified else "FAILED"
        return (
            f"{self.kind.value}-excircle, {self.parametrization}, {self.curve}, A = {self.area_formula}"
            f"  (x = {format_rat(self.sample_x)}: sides ({sides}), A = {format_rat(self.sample_area)},"
            f" class {self.sample_class}; {status})"
        )


def _erratum(label: str, computed, published) -> Optional[str]:
    if computed == published:
        return None
    return f"erratum: published {label} is {format_rat(published)}, computed {format_rat(computed)}"


def table1() -> List[Table1Row]:
    rows = []
    for tau, x, (y_pub, n_pub, cls_pub) in TABLE1_INPUTS:
        point = tau_curve.point_from_x(tau, x)
        n = tau * point.x * point.y
        _, cls = tau_curve.tau_congruent_number(point)
        notes = [
            e
            for e in (_erratum("y", point.y, y_pub), _erratum("n", n, n_pub), _erratum("class", cls, cls_pub))
            if e
        ]
        rows.append(Table1Row(tau, x, point.y, n, cls, "; ".join(notes) or None))
    return rows


def table2() -> List[Table2Row]:
    rows = []
    for t, cls_pub in TABLE2_INPUTS:
        _, cls = ellipse.area_and_class(t)
        product = ellipse.consecutive_product_triangle(t).area
        rows.append(Table2Row(t, int(product), cls, _erratum("class", cls, cls_pub)))
    return rows


_TABLE3_TEXT = {
    excircle.ExcircleKind.A: ("(x+1, z-1, z-x)", "z(1-x)-x-1=0", "x(x+1)/(1-x)"),
    excircle.ExcircleKind.B: ("(z-1, x+1, z-x)", "z(x-1)+x+1=0", "x(x+1)/(1-x)"),
    excircle.ExcircleKind.C: ("(1-y, 1-x, x+y)", "xy+x+y=1", "x(1-x)/(1+x)"),
}


def table3(sample_x: Fraction = Fraction(1, 2)) -> List[Table3Row]:
    """One row per excircle kind; the area formula is checked against 1/2*legs on a grid of x."""
    rows = []
    for kind, (param, curve, formula) in _TABLE3_TEXT.items():
        ok = True
        for x in TABLE3_SAMPLE_XS:
            tri = excircle.triangle_with_unit_exradius(kind, x)
            area, _ = excircle.excircle_area_class(kind, x)
            w = excircle.curve_point(kind, x)[1]
            ok &= area == tri.area and excircle.exradii(tri)[kind] == 1 and excircle.on_curve(kind, x, w)
        tri = excircle.triangle_with_unit_exradius(kind, sample_x)
        area, cls = excircle.excircle_area_class(kind, sample_x)
        rows.append(Table3Row(kind, param, curve, formula, sample_x, tri.sides, area, cls, ok))
    return rows


def format_tables() -> str:
    lines = ["Table 1: tau-congruent numbers", "tau, x, y, n = tau*x*y, n mod squares"]
    lines += [row.format() for row in table1()]
    lines += ["", "Table 2: congruent numbers from right triangles circumscribing E_a", "t, t(t+1)(t+2), class"]
    lines += [row.format() for row in table2()]
    lines += ["", "Table 3: right triangles with unit exradius", "excircle, sides, curve, area"]
    lines += [row.format() for row in table3()]
    return "\n".join(lines) + "\n"
