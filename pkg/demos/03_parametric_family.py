"""The one-parameter family of direction sets {1, t, t^2, t^3}.

All arithmetic happens in the rational function field Q(t) with conjugation
t -> 1/t, so every identity below holds for every unit-circle value of t at
once.  Specializing t to a concrete angle afterwards recovers the numeric
cases, including the pi/6 example: t = e^{i pi/6} sends z2 to 1 + e^{i pi/3}.
"""

from fractions import Fraction

from origami_rings import AngleSet, ParamRational, Ring, UnitAngle, check_ring

t = ParamRational.t_power(1)
t2 = t * t
one = ParamRational.from_rational(Fraction(1))

angles = AngleSet([UnitAngle(one)] + [UnitAngle(ParamRational.t_power(k)) for k in (1, 2, 3)])

z1 = (1 + t2 + t2 * t2) / (1 + t2)
z2 = 1 + t2
z3 = 1 + t2 + t2 * t2
p1 = z1 / z2

print("z1 =", z1)
print("z2 =", z2)
print("z3 =", z3)
print("p1 =", p1)

# the whole multiplication table reduces to the projection family of p1
assert z1 * z2 == z3
assert z1 * z1 == p1 * z3
assert z2 * z2 == (one / p1) * z3
p3 = p1 / (p1 - 1)
assert z2 * z3 == p3 * (1 - z3)
assert z3 * z3 == p3 * p3 * (z3 - z2)
print("symbolic product identities hold for every unit t")

verdict = check_ring(angles, degree_bound=2)
assert isinstance(verdict, Ring)
print(f"check_ring: {verdict.verdict} with {len(verdict.certificates)} certificates")

# specialize t = e^{i pi/6} and compare against the numeric field value
iv = z2.to_interval(64, t_arg="pi*1/6")
from origami_rings import root_of_unity

numeric = 1 + root_of_unity(6, 1)
assert iv.encloses(numeric.to_interval(256))
print(f"z2 at t = e^(i pi/6): interval midpoint ~ {iv.midpoint():.6f} encloses 1 + e^(i pi/3)")
