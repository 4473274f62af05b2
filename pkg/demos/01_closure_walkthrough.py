"""Build the intersection closure for directions {0, pi/6, pi/3, pi/2}.

Starting from the seed points 0 and 1, each generation draws every line
with an allowed direction through every known point and keeps all pairwise
intersections.  The run prints the generation sizes, a few named points,
and writes a CSV/SVG pair next to this script.
"""

import pathlib

from origami_rings import (
    AngleSet,
    ConstructionConfig,
    UnitAngle,
    closure_to_depth,
    root_of_unity,
)
from origami_rings.export import generations_to_csv, points_to_svg

angles = AngleSet(
    [
        UnitAngle(root_of_unity(1, 0)),   # the real axis
        UnitAngle(root_of_unity(12, 1)),  # pi/6
        UnitAngle(root_of_unity(6, 1)),   # pi/3
        UnitAngle(root_of_unity(4, 1)),   # pi/2
    ]
)

gens = closure_to_depth(ConstructionConfig(angles, max_depth=2))
print("generation sizes:", [len(g) for g in gens])

z6 = root_of_unity(6, 1)
named = {
    "z1 = 1 + i/sqrt3": (1 + z6) * 2 / 3,
    "z2 = sqrt3 e^{i pi/6}": 1 + z6,
    "z3 = 1 + i sqrt3": z6 * 2,
}
for label, value in named.items():
    depth = min(g.depth for g in gens if value in g)
    iv = value.to_interval(64)
    print(f"  {label}: first appears at depth {depth}, midpoint ~ {iv.midpoint():.6f}")

# every generation is closed under the complement z -> 1 - z
s2 = gens[2]
assert all((1 - p) in s2 for p in s2)
print("S_2 is closed under z -> 1 - z")

here = pathlib.Path(__file__).parent
csv_path = here / "closure_depth2.csv"
svg_path = here / "closure_depth2.svg"
csv_path.write_text(generations_to_csv(gens, 64, header={"angles": "0,pi*1/6,pi*1/3,pi*1/2"}))
svg_path.write_text(points_to_svg(gens, 64, viewport=(-3.0, 4.0, -3.0, 3.0)))
print(f"wrote {csv_path.name} and {svg_path.name}")
