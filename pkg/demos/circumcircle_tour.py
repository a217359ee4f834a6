"""Right triangles inscribed in a circle of radius R.

The hypotenuse is always the diameter; changing R rescales the triangle
and leaves the area class alone.
"""

from fractions import Fraction as F

from taucongruent import CircumParam, circum_area_and_class, inscribed_triangle

for t in (F(1, 2), F(1, 3), F(2, 3)):
    for R in (F(1), F(5, 2)):
        p = CircumParam(R, t)
        tri = inscribed_triangle(p)
        area, cls = circum_area_and_class(p)
        print(f"R={R}, t={t}: sides {tuple(map(str, tri.sides))}, area {area}, class {cls}")
