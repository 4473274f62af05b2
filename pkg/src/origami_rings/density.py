"""Constructive density: approximating complex targets by closure points.

With four or more directions including the real axis, the closure contains
a*p**N1 + b*p**N2*z for any projection value p in (0, 1), any nontrivial
elementary monomial z, and all integers a, b.  Shrinking p**N2 makes the rows
b*p**N2*z fine enough vertically, then p**N1 fixes the real residue, giving a
witness within any epsilon of any target.  Everything is exact: the steps,
the ceilings, and the final error comparison.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .construction import ProjectionSet, nontrivial_monomials, projection_set
from .errors import ScalingProjectionNotFoundError, UnsupportedConfigurationError
from .geometry import AngleSet
from .ratfunc import ParamRational
from .scalars import (
    ExactScalar,
    ceil_exact,
    real_imag_parts,
    real_sign,
)


def find_scaling_projection(projections: ProjectionSet) -> ExactScalar:
    """First projection-derived value strictly inside (0, 1).

    Tiers, each walked in canonical-key order: the nontrivial projection
    values themselves, their complements 1 - p, then products of two values
    from the union of both.  Sign tests are exact.
    """
    pool = list(projections.nontrivial)
    if not pool:
        raise ScalingProjectionNotFoundError("no nontrivial projections")
    if any(isinstance(p, ParamRational) for p in pool):
        raise UnsupportedConfigurationError(
            "formal parameter values have no canonical order"
        )

    def in_unit_interval(v):
        return real_sign(v) > 0 and real_sign(1 - v) > 0

    for v in pool:
        if in_unit_interval(v):
            return v
    complements = [1 - p for p in pool]
    for v in complements:
        if in_unit_interval(v):
            return v
    combined = sorted(
        {w.canonical_key(): w for w in pool + complements}.items()
    )
    values = [w for _, w in combined]
    for i in range(len(values)):
        for j in range(i, len(values)):
            v = values[i] * values[j]
            if in_unit_interval(v):
                return v
    raise ScalingProjectionNotFoundError(
        "no projection value in (0, 1) up to degree 2"
    )


@dataclass(frozen=True)
class DensityWitness:
    """Exact closure point a*p**n1 + b*p**n2*z within epsilon of the target."""

    target_re: Fraction
    target_im: Fraction
    epsilon: Fraction
    p: ExactScalar
    z: ExactScalar
    a: int
    b: int
    n1: int
    n2: int
    value: ExactScalar

    def value_interval(self, bits: int = 64):
        return self.value.to_interval(bits)

    def to_obj(self) -> dict:
        return {
            "target": {"re": str(self.target_re), "im": str(self.target_im)},
            "epsilon": str(self.epsilon),
            "p": self.p.to_obj(),
            "z": self.z.to_obj(),
            "a": str(self.a),
            "b": str(self.b),
            "n1": self.n1,
            "n2": self.n2,
            "value": self.value.to_obj(),
        }


def approximate(target_re, target_im, epsilon, angles: AngleSet) -> DensityWitness:
    """Produce a witness with |value - target| < epsilon, certified exactly.

    The final error bound is checked as a sign test on epsilon**2 minus the
    squared error, both exact real scalars, so no floating point enters the
    verdict.
    """
    target_re = Fraction(target_re)
    target_im = Fraction(target_im)
    epsilon = Fraction(epsilon)
    if epsilon <= 0:
        raise ValueError("epsilon must be positive")
    if len(angles) < 4 or not angles.contains_one():
        raise UnsupportedConfigurationError(
            "density needs at least four directions including the real axis"
        )
    if angles.is_parametric():
        raise UnsupportedConfigurationError(
            "density needs numeric directions; specialize the parameter first"
        )
    p = find_scaling_projection(projection_set(angles))
    candidates = [
        m.value for m in nontrivial_monomials(angles) if not m.value.is_real()
    ]
    z = min(candidates, key=lambda v: v.canonical_key())
    re_z, im_z = real_imag_parts(z)
    abs_im = im_z if real_sign(im_z) > 0 else -im_z
    half = epsilon / 2

    n2 = 0
    while real_sign(half - abs_im * p**n2) <= 0:
        n2 += 1
    theta = im_z * p**n2  # signed vertical step
    b = ceil_exact(target_im * theta.inv())

    n1 = 0
    while real_sign(half - p**n1) <= 0:
        n1 += 1
    residual = target_re - b * p**n2 * re_z
    a = ceil_exact(residual * (p**n1).inv())

    value = a * p**n1 + b * p**n2 * z
    re_v, im_v = real_imag_parts(value)
    err_sq = (re_v - target_re) ** 2 + (im_v - target_im) ** 2
    if real_sign(epsilon**2 - err_sq) <= 0:
        raise RuntimeError("witness failed its exact error certification")
    return DensityWitness(
        target_re=target_re,
        target_im=target_im,
        epsilon=epsilon,
        p=p,
        z=z,
        a=a,
        b=b,
        n1=n1,
        n2=n2,
        value=value,
    )
