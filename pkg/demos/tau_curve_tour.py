"""Walk along the curve xy = tau(x + y) + 1 and read off Heron triangles.

Each positive rational point gives a triangle with inradius 1 whose angle
opposite the side x + y has cosine tau / sqrt(1 + tau**2).  Run with
``python3 demos/tau_curve_tour.py``.
"""

from fractions import Fraction as F

from taucongruent import heron_triangle, integer_points, point_from_x, tau_congruent_number
from taucongruent.tau_curve import rational_points

tau = F(3, 2)
print(f"first positive points on the curve for tau = {tau}")
for p in rational_points(tau, count=8):
    if p.x <= 0 or p.y <= 0:
        continue
    tri = heron_triangle(p)
    area, cls = tau_congruent_number(p)
    print(f"  x={p.x}, y={p.y}: sides {tuple(map(str, tri.sides))}, area {area}, class {cls}")

# when 1/tau is a whole number k, integer points come from divisors of k**2 + 1
for tau in (F(1), F(1, 2), F(1, 3)):
    pts = sorted((p.x, p.y) for p in integer_points(tau))
    print(f"integer points for tau = {tau}: {[(int(x), int(y)) for x, y in pts]}")

p = point_from_x(1, 2)
print("tau = 1, x = 2 is the 3-4-5 triangle:", tuple(map(str, heron_triangle(p).sides)))
