"""Exact constructions of rational triangles and their (tau-)congruent numbers."""

from .circumcircle import CircumParam, circum_area_and_class, inscribed_triangle
from .ellipse import (
    EllipseSpec,
    RightTriangleLegs,
    UnitCircleCurvePoint,
    affine_map,
    area_and_class,
    consecutive_product_triangle,
    triangle_from_point,
    triangle_from_t,
)
from .errors import (
    DegenerateTriangle,
    FactorizationLimitExceeded,
    InvalidParameter,
    NonIntegralInverseTau,
    NonPositiveInput,
    PoleInput,
    TauCongruentError,
)
from .exact_arith import (
    Rat,
    format_rat,
    is_rational_square,
    parse_rat,
    signed_divisors,
    squarefree_class,
)
from .excircle import (
    ExcircleKind,
    Exradii,
    excircle_area_class,
    exradii,
    normalize_to_unit_exradius,
    triangle_with_unit_exradius,
)
from .tau_curve import (
    HeronTriangle,
    Tau,
    XTauPoint,
    heron_triangle,
    integer_points,
    point_from_x,
    tau_congruent_number,
)
from .triangles import RightTriangle

__version__ = "0.1.0"
