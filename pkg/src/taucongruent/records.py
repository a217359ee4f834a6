"""Machine-readable output records and their independent re-verification.

A record is one JSON object per line::

    {"family": "tau", "parameters": {"tau": "1", "x": "2", "y": "3"},
     "sides": ["4", "3", "5"], "area": "6", "class": 6, "verified": true}

Rationals are written in canonical ``p/q`` form.  ``check_record`` re-runs
every exact invariant of the family from the serialized values alone, so a
record can be audited without trusting the code that produced it.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace
from fractions import Fraction
from itertools import islice
from typing import Dict, Iterable, Iterator, List, Optional, Tuple

from . import circumcircle, ellipse, excircle, tau_curve
from .exact_arith import RatLike, as_rat, format_rat, parse_rat, rationals_by_height, squarefree_class
from .triangles import RightTriangle

FAMILIES = ("tau", "ellipse", "circumcircle", "excircle")

LAW_OF_COSINES_FAILED = "Pythagoras/law-of-cosines failed"
CLASS_MISMATCH = "class mismatch"


@dataclass(frozen=True)
class OutputRecord:
    family: str
    parameters: Dict[str, object]
    sides: Optional[Tuple[Fraction, Fraction, Fraction]]
    area: Optional[Fraction]
    cls: Optional[int]
    verified: bool = False
    degenerate: bool = False

    def to_json(self) -> str:
        obj = {
            "family": self.family,
            "parameters": {
                k: v if isinstance(v, str) else format_rat(v) for k, v in self.parameters.items()
            },
            "sides": None if self.sides is None else [format_rat(s) for s in self.sides],
            "area": None if self.area is None else format_rat(self.area),
            "class": self.cls,
            "verified": self.verified,
        }
        if self.degenerate:
            obj["degenerate"] = True
        return json.dumps(obj, ensure_ascii=False)

    @classmethod
    def from_json(cls, line: str) -> "OutputRecord":
        """Parse one record line; raises ValueError describing what is malformed."""
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as exc:
            raise ValueError(f"invalid JSON: {exc.msg}") from None
        if not isinstance(obj, dict):
            raise ValueError("record must be a JSON object")
        missing = {"family", "parameters", "sides", "area", "class", "verified"} - obj.keys()
        if missing:
            raise ValueError(f"missing field(s): {', '.join(sorted(missing))}")
        family = obj["family"]
        if family not in FAMILIES:
            raise ValueError(f"unknown family {family!r}")
        params = obj["parameters"]
        if not isinstance(params, dict):
            raise ValueError("parameters must be an object")
        parameters: Dict[str, object] = {}
        for name, value in params.items():
            if not isinstance(value, str):
                raise ValueError(f"parameter {name!r} must be a string")
            parameters[name] = value if name == "kind" else parse_rat(value)
        sides = obj["sides"]
        if sides is not None:
            if not isinstance(sides, list) or len(sides) != 3 or not all(isinstance(s, str) for s in sides):
                raise ValueError("sides must be a list of three rationals")
            sides = tuple(parse_rat(s) for s in sides)
        area = obj["area"]
        if area is not None:
            if not isinstance(area, str):
                raise ValueError("area must be a rational string")
            area = parse_rat(area)
        klass = obj["class"]
        if klass is not None and (not isinstance(klass, int) or isinstance(klass, bool)):
            raise ValueError("class must be an integer")
        if not isinstance(obj["verified"], bool):
            raise ValueError("verified must be true or false")
        degenerate = obj.get("degenerate", False)
        if not isinstance(degenerate, bool):
            raise ValueError("degenerate must be true or false")
        return cls(family, parameters, sides, area, klass, obj["verified"], degenerate)


# ---------------------------------------------------------------------------
# invariant checks, one per family

def _need(params, *names):
    missing = [n for n in names if n not in params]
    if missing:
        raise KeyError(f"missing parameter(s): {', '.join(missing)}")
    return [params[n] for n in names]


def _class_ok(record: OutputRecord, *values) -> bool:
    return all(record.cls == squarefree_class(v) for v in values)


def _check_tau(rec: OutputRecord) -> List[str]:
    t, x, y = _need(rec.parameters, "tau", "x", "y")
    if t <= 0:
        return ["tau must be positive"]
    tau = tau_curve.Tau(t)
    failures = []
    if x == t or not tau_curve.on_curve(tau, x, y):
        failures.append("point is not on X_tau")
    if rec.degenerate:
        if x > 0 and y > 0:
            failures.append("degenerate flag set on a positive point")
        if rec.sides is not None or rec.area is not None or rec.cls is not None:
            failures.append("degenerate record carries a triangle")
        return failures
    if rec.sides is None or rec.area is None or rec.cls is None:
        return failures + ["record has no triangle"]
    a, b, c = rec.sides
    if c**2 != a**2 + b**2 - 2 * a * b * tau.cos:
        failures.append(LAW_OF_COSINES_FAILED)
    if rec.sides != (y + tau.inverse, x + tau.inverse, x + y):
        failures.append("sides do not match parameters")
    if min(a, b, c) <= 0 or a + b <= c or a + c <= b or b + c <= a:
        failures.append("triangle inequality failed")
        return failures
    if rec.area != a * b * tau.sin / 2 or rec.area != x * y / t:
        failures.append("area mismatch")
    if rec.area != (a + b + c) / 2:
        failures.append("inradius is not 1")
    if x > 0 and y > 0 and not _class_ok(rec, rec.area, t * x * y):
        failures.append(CLASS_MISMATCH)
    return failures


def _check_ellipse(rec: OutputRecord) -> List[str]:
    axis, t = _need(rec.parameters, "axis", "t")
    if axis <= 0 or t <= 0:
        return ["axis and t must be positive"]
    if rec.sides is None or rec.area is None or rec.cls is None:
        return ["record has no triangle"]
    failures = []
    u, v, hyp = rec.sides
    U, V = u / axis, axis * v
    if U**2 + V**2 != hyp**2:
        failures.append(LAW_OF_COSINES_FAILED)
    if (U + V - u * v) ** 2 != U**2 + V**2 or hyp != abs(U + V - u * v):
        failures.append("tangency identity failed")
    if u != axis * (t + 2) or v != (2 + 2 / t) / axis:
        failures.append("sides do not match parameters")
    if rec.area != u * v / 2 or rec.area != (t + 2) * (t + 1) / t:
        failures.append("area mismatch")
    if min(u, v) > 0 and not _class_ok(rec, u * v / 2, t * (t + 1) * (t + 2)):
        failures.append(CLASS_MISMATCH)
    return failures


def _check_circumcircle(rec: OutputRecord) -> List[str]:
    R, t = _need(rec.parameters, "radius", "t")
    if R <= 0 or not 0 < t < 1:
        return ["radius must be positive and t in (0, 1)"]
    if rec.sides is None or rec.area is None or rec.cls is None:
        return ["record has no triangle"]
    failures = []
    a, b, c = rec.sides
    if a**2 + b**2 != c**2:
        failures.append(LAW_OF_COSINES_FAILED)
    if c != 2 * R:
        failures.append("hypotenuse is not the diameter")
    d = 1 + t * t
    if (a, b) != (2 * R * (1 - t * t) / d, 4 * R * t / d):
        failures.append("sides do not match parameters")
    if rec.area != a * b / 2 or rec.area != 4 * R * R * t * (1 - t * t) / d**2:
        failures.append("area mismatch")
    if min(a, b) > 0 and not _class_ok(rec, a * b / 2, t * (1 - t * t)):
        failures.append(CLASS_MISMATCH)
    return failures


def _check_excircle(rec: OutputRecord) -> List[str]:
    kind, x = _need(rec.parameters, "kind", "x")
    kind = excircle.ExcircleKind.parse(kind)
    if not 0 < x < 1:
        return ["x must lie in (0, 1)"]
    if rec.sides is None or rec.area is None or rec.cls is None:
        return ["record has no triangle"]
    failures = []
    a, b, c = rec.sides
    if a**2 + b**2 != c**2:
        failures.append(LAW_OF_COSINES_FAILED)
    if min(a, b, c) <= 0:
        return failures + ["non-positive side"]
    s, area = (a + b + c) / 2, a * b / 2
    side = {"a": a, "b": b, "c": c}[kind.value]
    radius = {"a": (a - b + c) / 2, "b": (c - a + b) / 2, "c": s}[kind.value]
    if s - side <= 0:
        return failures + ["exradius undefined"]
    if radius != area / (s - side):
        failures.append("exradius closed form disagrees with area/(s - l)")
    if radius != 1:
        failures.append("exradius is not 1")
    w = (1 - x) / (1 + x) if kind is excircle.ExcircleKind.C else (1 + x) / (1 - x)
    if not excircle.on_curve(kind, x, w):
        failures.append("curve point check failed")
    expected = {
        "a": (x + 1, w - 1, w - x),
        "b": (w - 1, x + 1, w - x),
        "c": (1 - w, 1 - x, x + w),
    }[kind.value]
    if rec.sides != expected:
        failures.append("sides do not match parameters")
    formula = x * (1 - x) / (1 + x) if kind is excircle.ExcircleKind.C else x * (x + 1) / (1 - x)
    if rec.area != area or rec.area != formula:
        failures.append("area mismatch")
    if not _class_ok(rec, area):
        failures.append(CLASS_MISMATCH)
    return failures


_CHECKS = {
    "tau": _check_tau,
    "ellipse": _check_ellipse,
    "circumcircle": _check_circumcircle,
    "excircle": _check_excircle,
}


def check_record(rec: OutputRecord) -> List[str]:
    """Failed invariants of ``rec`` (empty when everything holds).

    The ``verified`` flag itself is compared against the outcome.
    """
    try:
        failures = _CHECKS[rec.family](rec)
    except (KeyError, ValueError, ZeroDivisionError) as exc:
        failures = [f"cannot check record: {exc}"]
    if rec.verified != (not failures):
        failures.append("verified flag disagrees with recomputation")
    return failures


def _stamp(rec: OutputRecord) -> OutputRecord:
    rec = replace(rec, verified=True)
    return rec if not check_record(rec) else replace(rec, verified=False)


# ---------------------------------------------------------------------------
# generators

def tau_record(point: tau_curve.XTauPoint) -> OutputRecord:
    params = {"tau": point.tau.value, "x": point.x, "y": point.y}
    if point.x <= 0 or point.y <= 0:
        return _stamp(OutputRecord("tau", params, None, None, None, degenerate=True))
    tri = tau_curve.heron_triangle(point)
    area, klass = tau_curve.tau_congruent_number(point)
    return _stamp(OutputRecord("tau", params, tri.sides, area, klass))


def ellipse_record(axis: RatLike, t: RatLike) -> OutputRecord:
    legs = ellipse.triangle_from_t(axis, t)
    area, klass = ellipse.area_and_class(t)
    params = {"axis": as_rat(axis), "t": as_rat(t)}
    return _stamp(OutputRecord("ellipse", params, (legs.u, legs.v, legs.hyp), area, klass))


def circumcircle_record(radius: RatLike, t: RatLike) -> OutputRecord:
    p = circumcircle.CircumParam(radius, t)
    tri = circumcircle.inscribed_triangle(p)
    area, klass = circumcircle.circum_area_and_class(p)
    return _stamp(OutputRecord("circumcircle", {"radius": p.R, "t": p.t}, tri.sides, area, klass))


def excircle_record(kind, x: RatLike) -> OutputRecord:
    kind = excircle.ExcircleKind.parse(kind)
    tri = excircle.triangle_with_unit_exradius(kind, x)
    area, klass = excircle.excircle_area_class(kind, x)
    return _stamp(OutputRecord("excircle", {"kind": kind.value, "x": as_rat(x)}, tri.sides, area, klass))


def normalized_excircle_record(T: RightTriangle, kind) -> OutputRecord:
    """Record for T rescaled to unit exradius of the given kind."""
    unit = excircle.normalize_to_unit_exradius(T, kind)
    return excircle_record(kind, excircle.curve_parameter(unit, kind))


def _values(values: Optional[Iterable[RatLike]], count: Optional[int], keep=lambda q: True) -> Iterator[Fraction]:
    if values is not None:
        return (as_rat(v) for v in values)
    return islice((q for q in rationals_by_height() if keep(q)), count)


def tau_records(tau, xs=None, count=None) -> Iterator[OutputRecord]:
    for point in tau_curve.rational_points(tau, xs, count):
        yield tau_record(point)


def ellipse_records(axis, ts=None, count=None) -> Iterator[OutputRecord]:
    for t in _values(ts, count):
        yield ellipse_record(axis, t)


def circumcircle_records(radius, ts=None, count=None) -> Iterator[OutputRecord]:
    for t in _values(ts, count, lambda q: q < 1):
        yield circumcircle_record(radius, t)


def excircle_records(kind, xs=None, count=None) -> Iterator[OutputRecord]:
    for x in _values(xs, count, lambda q: q < 1):
        yield excircle_record(kind, x)
