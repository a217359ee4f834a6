"""Right triangles with one exradius equal to 1.

Any rational right triangle can be shrunk to such a triangle by dividing
by the chosen exradius, and the area class survives the rescaling.
"""

from fractions import Fraction as F

from taucongruent import (
    ExcircleKind,
    RightTriangle,
    excircle_area_class,
    exradii,
    normalize_to_unit_exradius,
    triangle_with_unit_exradius,
)

for kind in ExcircleKind:
    T = triangle_with_unit_exradius(kind, F(1, 3))
    area, cls = excircle_area_class(kind, F(1, 3))
    print(f"kind {kind.value}, x=1/3: sides {tuple(map(str, T.sides))}, area {area}, class {cls}")

T = RightTriangle(20, 21, 29)
r = exradii(T)
print(f"20-21-29 has exradii {r.r_a}, {r.r_b}, {r.r_c}; r_a * r_b = {r.r_a * r.r_b} = area {T.area}")
for kind in ExcircleKind:
    unit = normalize_to_unit_exradius(T, kind)
    print(f"  normalized on {kind.value}: {tuple(map(str, unit.sides))}")
