"""Directed complex interval arithmetic on top of mpmath's ivmpf type.

A ComplexInterval is a rectangle [re] x [im] whose endpoints are binary
floats at a chosen working precision.  All constructors and operations round
outward, so a ComplexInterval computed from an exact scalar always encloses
the true value; refinement means recomputing at higher precision.
"""

from __future__ import annotations

import functools
from fractions import Fraction

from mpmath import ctx_iv, make_mpf, mp, nstr

from .errors import PrecisionError

MIN_PRECISION = 8


@functools.lru_cache(maxsize=None)
def interval_context(bits: int):
    if bits < MIN_PRECISION:
        raise ValueError(f"interval precision below {MIN_PRECISION} bits")
    ctx = ctx_iv.MPIntervalContext()
    ctx.prec = bits
    return ctx


def rational_to_iv(q: Fraction, ctx):
    # ctx.mpf cannot convert Fraction directly; divide two exact integers
    q = Fraction(q)
    return ctx.mpf(q.numerator) / ctx.mpf(q.denominator)


def iv_endpoints(iv):
    """Endpoints of an ivmpf as a pair of mpf scalars."""
    lo, hi = iv._mpi_
    return make_mpf(lo), make_mpf(hi)


def mpf_to_fraction(x) -> Fraction:
    if not mp.isfinite(x):
        raise PrecisionError("interval endpoint is not finite")
    sign, man, exp, _ = x._mpf_
    val = Fraction(int(man)) * Fraction(2) ** exp
    return -val if sign else val


def endpoint_str(x, bits: int) -> str:
    # enough decimal digits to round-trip the binary precision
    return nstr(x, int(bits * 0.302) + 3)


class ComplexInterval:
    """Axis-aligned rectangle enclosing a complex value."""

    __slots__ = ("re", "im", "prec")

    def __init__(self, re, im, prec: int):
        self.re = re
        self.im = im
        self.prec = prec

    @classmethod
    def from_rationals(cls, re: Fraction, im: Fraction, bits: int):
        ctx = interval_context(bits)
        return cls(rational_to_iv(re, ctx), rational_to_iv(im, ctx), bits)

    @classmethod
    def zero(cls, bits: int):
        return cls.from_rationals(Fraction(0), Fraction(0), bits)

    def _ctx(self):
        return interval_context(self.prec)

    def _align(self, other):
        if not isinstance(other, ComplexInterval):
            raise TypeError("expected a ComplexInterval")
        if other.prec == self.prec:
            return other
        ctx = self._ctx()
        # conversion across precisions rounds outward, keeping the enclosure
        return ComplexInterval(ctx.convert(other.re), ctx.convert(other.im), self.prec)

    def __add__(self, other):
        other = self._align(other)
        return ComplexInterval(self.re + other.re, self.im + other.im, self.prec)

    def __sub__(self, other):
        other = self._align(other)
        return ComplexInterval(self.re - other.re, self.im - other.im, self.prec)

    def __neg__(self):
        return ComplexInterval(-self.re, -self.im, self.prec)

    def __mul__(self, other):
        other = self._align(other)
        a, b, c, d = self.re, self.im, other.re, other.im
        return ComplexInterval(a * c - b * d, a * d + b * c, self.prec)

    def __truediv__(self, other):
        other = self._align(other)
        c, d = other.re, other.im
        den = c * c + d * d
        lo, _ = iv_endpoints(den)
        if not mp.isfinite(lo) or lo <= 0:
            raise PrecisionError(
                "division by an interval that may contain zero; raise precision"
            )
        a, b = self.re, self.im
        return ComplexInterval((a * c + b * d) / den, (b * c - a * d) / den, self.prec)

    def conj(self):
        return ComplexInterval(self.re, -self.im, self.prec)

    def magnitude(self):
        """Real interval (ivmpf) enclosing the absolute value."""
        ctx = self._ctx()
        return ctx.sqrt(self.re * self.re + self.im * self.im)

    def real_bounds(self) -> tuple[Fraction, Fraction]:
        lo, hi = iv_endpoints(self.re)
        return mpf_to_fraction(lo), mpf_to_fraction(hi)

    def imag_bounds(self) -> tuple[Fraction, Fraction]:
        lo, hi = iv_endpoints(self.im)
        return mpf_to_fraction(lo), mpf_to_fraction(hi)

    def magnitude_bounds(self) -> tuple[Fraction, Fraction]:
        lo, hi = iv_endpoints(self.magnitude())
        return mpf_to_fraction(lo), mpf_to_fraction(hi)

    def encloses(self, other: "ComplexInterval") -> bool:
        other = self._align(other)
        return other.re in self.re and other.im in self.im

    def contains_value(self, re: Fraction, im: Fraction = Fraction(0)) -> bool:
        ctx = self._ctx()
        return rational_to_iv(re, ctx) in self.re and rational_to_iv(im, ctx) in self.im

    def contains_zero(self) -> bool:
        return self.contains_value(Fraction(0), Fraction(0))

    def midpoint(self) -> complex:
        rl, rh = self.real_bounds()
        il, ih = self.imag_bounds()
        return complex((rl + rh) / 2, (il + ih) / 2)

    def width(self) -> float:
        rl, rh = self.real_bounds()
        il, ih = self.imag_bounds()
        return float(max(rh - rl, ih - il))

    def endpoint_strings(self) -> tuple[str, str, str, str]:
        """(re_lo, re_hi, im_lo, im_hi) as decimal strings."""
        rlo, rhi = iv_endpoints(self.re)
        ilo, ihi = iv_endpoints(self.im)
        b = self.prec
        return (
            endpoint_str(rlo, b),
            endpoint_str(rhi, b),
            endpoint_str(ilo, b),
            endpoint_str(ihi, b),
        )

    def __repr__(self):
        return f"ComplexInterval(re={self.re}, im={self.im}, prec={self.prec})"
