"""Rational functions of a formal unit-circle parameter t.

ParamRational models Q(t) where t stands for a generic point on the unit
circle, so complex conjugation acts by t -> 1/t.  Values are kept in the
canonical form numerator/denominator with a monic denominator and gcd 1,
which makes structural equality semantic equality.
"""

from __future__ import annotations

from fractions import Fraction

from . import _polys
from .errors import NonInvertibleError
from .intervals import ComplexInterval, interval_context, rational_to_iv
from .scalars import ExactScalar, Rational


def _normalize(num, den):
    num = _polys.trim(num)
    den = _polys.trim(den)
    if not den:
        raise ZeroDivisionError("zero denominator")
    if not num:
        return (), _polys.ONE
    g = _polys.gcd(num, den)
    if _polys.degree(g) > 0:
        num = _polys.divmod_(num, g)[0]
        den = _polys.divmod_(den, g)[0]
    lead = den[-1]
    if lead != 1:
        num = _polys.scale(num, 1 / lead)
        den = _polys.scale(den, 1 / lead)
    return num, den


class ParamRational(ExactScalar):
    """Element of Q(t) with conjugation t -> 1/t."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=(Fraction(1),)):
        self.num, self.den = _normalize(num, den)

    @classmethod
    def t_power(cls, k: int = 1) -> "ParamRational":
        if k >= 0:
            return cls(_polys.shift(_polys.ONE, k))
        return cls(_polys.ONE, _polys.shift(_polys.ONE, -k))

    @classmethod
    def from_rational(cls, value) -> "ParamRational":
        return cls(_polys.const(value))

    # -- backend hooks ------------------------------------------------------

    def _promote(self, r: Rational):
        return ParamRational.from_rational(r.value)

    def _add_same(self, other):
        num = _polys.add(
            _polys.mul(self.num, other.den), _polys.mul(other.num, self.den)
        )
        return ParamRational(num, _polys.mul(self.den, other.den))

    def _mul_same(self, other):
        return ParamRational(
            _polys.mul(self.num, other.num), _polys.mul(self.den, other.den)
        )

    def _eq_same(self, other):
        return self.num == other.num and self.den == other.den

    def neg(self):
        return ParamRational(_polys.neg(self.num), self.den)

    def inv(self):
        if not self.num:
            raise NonInvertibleError("inverse of zero")
        return ParamRational(self.den, self.num)

    def conj(self):
        """Substitute t -> 1/t and clear negative powers."""
        if not self.num:
            return self
        dn = _polys.degree(self.num)
        dd = _polys.degree(self.den)
        num = _polys.shift(tuple(reversed(self.num)), dd)
        den = _polys.shift(tuple(reversed(self.den)), dn)
        return ParamRational(num, den)

    # -- predicates and keys ------------------------------------------------

    def is_zero(self):
        return not self.num

    def is_rational(self):
        return _polys.degree(self.num) <= 0 and self.den == _polys.ONE

    def is_real(self):
        # realness under every unit-circle specialization of t
        return self._eq_same(self.conj())

    def as_fraction(self):
        if not self.is_rational():
            raise ValueError("value is not rational")
        return self.num[0] if self.num else Fraction(0)

    def canonical_key(self):
        if self.is_rational():
            return b"Q:%s" % str(self.as_fraction()).encode()
        num = ",".join(str(c) for c in self.num)
        den = ",".join(str(c) for c in self.den)
        return b"P:%s|%s" % (num.encode(), den.encode())

    def canonical_sign(self):
        for c in self.num:
            if c:
                return 1 if c > 0 else -1
        return 0

    # -- numerics ------------------------------------------------------------

    def to_interval(self, bits: int, t_arg=None) -> ComplexInterval:
        """Enclose the value at the specialization t = exp(i*t_arg).

        t_arg is an angle in radians: an int/Fraction (exact), a float, or a
        string "pi*p/q" for exact rational multiples of pi.
        """
        if t_arg is None:
            raise ValueError("parametric scalar needs a specialization angle")
        ctx = interval_context(bits)
        if isinstance(t_arg, str):
            if not t_arg.startswith("pi*"):
                raise ValueError(f"bad specialization {t_arg!r}")
            angle = ctx.pi * rational_to_iv(Fraction(t_arg[3:]), ctx)
        elif isinstance(t_arg, float):
            angle = ctx.mpf(t_arg)
        else:
            angle = rational_to_iv(Fraction(t_arg), ctx)
        t = ComplexInterval(ctx.cos(angle), ctx.sin(angle), bits)
        return self._eval_interval(self.num, t, bits) / self._eval_interval(
            self.den, t, bits
        )

    @staticmethod
    def _eval_interval(poly, t: ComplexInterval, bits: int) -> ComplexInterval:
        acc = ComplexInterval.zero(bits)
        for c in reversed(poly):
            acc = acc * t + ComplexInterval.from_rationals(Fraction(c), Fraction(0), bits)
        return acc

    def to_obj(self):
        if self.is_rational():
            return {"backend": "rational", "value": str(self.as_fraction())}
        return {
            "backend": "param",
            "num": [str(c) for c in self.num],
            "den": [str(c) for c in self.den],
        }

    def __repr__(self):
        num = ",".join(str(c) for c in self.num) or "0"
        den = ",".join(str(c) for c in self.den)
        return f"ParamRational({num} / {den})"
