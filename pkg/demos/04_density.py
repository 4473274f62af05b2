"""Closure points are dense: approximate any complex target exactly.

The witness has the shape a*p^N1 + b*p^N2*z with integers a, b: the scaling
projection p in (0, 1) shrinks a nontrivial monomial z until its imaginary
step is fine enough, b stacks rows to reach the target height, and a fixes
the real residue.  The final error bound is certified by an exact sign test
on epsilon^2 minus the squared error; no floating point decides anything.
"""

from fractions import Fraction

from origami_rings import AngleSet, UnitAngle, approximate, root_of_unity

angles = AngleSet(
    [
        UnitAngle(root_of_unity(1, 0)),
        UnitAngle(root_of_unity(12, 1)),
        UnitAngle(root_of_unity(6, 1)),
        UnitAngle(root_of_unity(4, 1)),
    ]
)

target_re, target_im = Fraction(1, 3), Fraction(-1, 2)
for eps in (Fraction(1, 10), Fraction(1, 1000), Fraction(1, 100000)):
    w = approximate(target_re, target_im, eps, angles)
    mid = w.value.to_interval(96).midpoint()
    err = abs(mid - complex(float(target_re), float(target_im)))
    print(
        f"eps = {str(eps):>9}: value = {w.a}*p^{w.n1} + {w.b}*p^{w.n2}*z"
        f"  ~ {mid.real:+.6f}{mid.imag:+.6f}i  (|error| ~ {err:.2e})"
    )

# the imaginary unit itself, pinned to three decimal places
w = approximate(0, 1, Fraction(1, 1000), angles)
print(f"\ni within 1/1000: a={w.a}, b={w.b}, N1={w.n1}, N2={w.n2}, p={w.p.as_fraction()}")
print(f"  witness midpoint ~ {w.value.to_interval(96).midpoint():.6f}")
