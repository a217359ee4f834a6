"""Right triangles tangent to an ellipse, and the consecutive-product family.

The ellipse's axis ratio stretches the triangle without changing its
area, so the class depends only on the curve parameter t.
"""

from fractions import Fraction as F

from taucongruent import area_and_class, consecutive_product_triangle, triangle_from_t

for axis in (F(1), F(2, 3), F(7, 2)):
    legs = triangle_from_t(axis, 2)
    print(f"axis {axis}: legs u={legs.u}, v={legs.v}, hyp={legs.hyp}, area {legs.area}")

print("t, area, class")
for t in range(1, 9):
    area, cls = area_and_class(t)
    print(f"  {t}, {area}, {cls}")

tri = consecutive_product_triangle(4)
print("4*5*6 = 120 is the area of", tuple(map(str, tri.sides)))
