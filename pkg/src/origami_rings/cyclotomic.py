"""Exact arithmetic in cyclotomic fields Q(zeta_n).

Elements are stored as coefficient vectors of length phi(n) over the power
basis 1, z, ..., z^(phi(n)-1) with z = exp(2*pi*i/n), always reduced mod the
n-th cyclotomic polynomial.  Canonical keys first descend to the smallest
cyclotomic field containing the value, so equal values constructed in
different orders compare and hash identically.
"""

from __future__ import annotations

import functools
import math
from fractions import Fraction

from . import _polys
from .errors import NonInvertibleError
from .intervals import ComplexInterval, interval_context, rational_to_iv
from .scalars import ExactScalar, Rational


@functools.lru_cache(maxsize=None)
def _prime_divisors(n: int) -> tuple[int, ...]:
    primes = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            primes.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        primes.append(n)
    return tuple(primes)


@functools.lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    result = n
    for p in _prime_divisors(n):
        result -= result // p
    return result


@functools.lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> _polys.Poly:
    """Coefficients of the n-th cyclotomic polynomial, ascending degree."""
    if n == 1:
        return _polys.trim([-1, 1])
    # x^n - 1 divided by the product of Phi_d over proper divisors d of n
    num = _polys.trim([-1] + [0] * (n - 1) + [1])
    for d in range(1, n):
        if n % d == 0:
            num, rem = _polys.divmod_(num, cyclotomic_polynomial(d))
            assert not rem
    return num


def _reduce(n: int, coeffs) -> tuple[Fraction, ...]:
    """Reduce arbitrary polynomial coefficients to the length-phi(n) basis."""
    cs = [Fraction(c) for c in coeffs]
    if len(cs) > n:
        folded = [Fraction(0)] * n
        for e, c in enumerate(cs):
            folded[e % n] += c
        cs = folded
    _, rem = _polys.divmod_(_polys.trim(cs), cyclotomic_polynomial(n))
    out = list(rem) + [Fraction(0)] * (euler_phi(n) - len(rem))
    return tuple(out)


@functools.lru_cache(maxsize=None)
def _subfield_transform(n: int, m: int):
    """Row transform T with T*E in reduced echelon form, E the embedding matrix.

    E has phi(n) rows and phi(m) columns; column j holds the coordinates of
    zeta_m^j inside Q(zeta_n).  E has full column rank, so T*E is the identity
    stacked on zero rows: solving E*y = c reads y off the first phi(m) entries
    of T*c and demands the rest vanish.
    """
    assert n % m == 0
    pn, pm = euler_phi(n), euler_phi(m)
    step = n // m
    cols = [_reduce(n, [Fraction(0)] * (j * step) + [Fraction(1)]) for j in range(pm)]
    rows = []
    for i in range(pn):
        aug = [cols[j][i] for j in range(pm)]
        aug += [Fraction(1) if k == i else Fraction(0) for k in range(pn)]
        rows.append(aug)
    r = 0
    for c in range(pm):
        pivot = next(i for i in range(r, pn) if rows[i][c] != 0)
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [v * inv for v in rows[r]]
        for i in range(pn):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        r += 1
    transform = tuple(tuple(row[pm:]) for row in rows)
    return transform, pm


def _subfield_coords(n: int, m: int, coeffs):
    transform, pm = _subfield_transform(n, m)
    d = [sum(t * c for t, c in zip(row, coeffs) if c) for row in transform]
    if any(d[pm:]):
        return None
    return tuple(Fraction(v) for v in d[:pm])


@functools.lru_cache(maxsize=200_000)
def _trig(n: int, j: int, bits: int):
    ctx = interval_context(bits)
    angle = 2 * ctx.pi * j / n
    return ctx.cos(angle), ctx.sin(angle)


class CyclotomicElement(ExactScalar):
    """Element of Q(zeta_n) in the reduced power basis."""

    __slots__ = ("order", "coeffs", "_min")

    def __init__(self, order: int, coeffs):
        if not isinstance(order, int) or order < 1:
            raise ValueError("order must be a positive integer")
        self.order = order
        # reduction is a no-op for already-reduced vectors, so always apply it
        self.coeffs = _reduce(order, coeffs)
        self._min = None

    @classmethod
    def root_of_unity(cls, order: int, k: int = 1) -> "CyclotomicElement":
        k %= order
        return cls(order, [Fraction(0)] * k + [Fraction(1)])

    @classmethod
    def from_rational(cls, value, order: int = 1) -> "CyclotomicElement":
        return cls(order, [Fraction(value)])

    # -- backend hooks ------------------------------------------------------

    def _merge(self, other):
        if self.order == other.order:
            return self, other
        m = math.lcm(self.order, other.order)
        return self.embed(m), other.embed(m)

    def _promote(self, r: Rational):
        return CyclotomicElement.from_rational(r.value, self.order)

    def _add_same(self, other):
        return CyclotomicElement(
            self.order, [a + b for a, b in zip(self.coeffs, other.coeffs)]
        )

    def _mul_same(self, other):
        prod = _polys.mul(_polys.trim(self.coeffs), _polys.trim(other.coeffs))
        return CyclotomicElement(self.order, prod)

    def _eq_same(self, other):
        return self.coeffs == other.coeffs

    def neg(self):
        return CyclotomicElement(self.order, [-c for c in self.coeffs])

    def inv(self):
        if self.is_zero():
            raise NonInvertibleError("inverse of zero")
        g, s, _ = _polys.xgcd(_polys.trim(self.coeffs), cyclotomic_polynomial(self.order))
        assert g == _polys.ONE  # cyclotomic polynomials are irreducible
        return CyclotomicElement(self.order, s)

    # -- field structure ------------------------------------------------------

    def galois(self, k: int) -> "CyclotomicElement":
        """Apply the automorphism zeta -> zeta^k; requires gcd(k, order) = 1."""
        n = self.order
        k %= n
        if math.gcd(k, n) != 1:
            raise ValueError(f"{k} does not define an automorphism of order {n}")
        out = [Fraction(0)] * n
        for j, c in enumerate(self.coeffs):
            if c:
                out[(j * k) % n] += c
        return CyclotomicElement(n, out)

    def conj(self):
        if self.order <= 2:
            return self
        return self.galois(self.order - 1)

    def embed(self, order: int) -> "CyclotomicElement":
        """Re-express in Q(zeta_order); order must be a multiple of self.order."""
        if order == self.order:
            return self
        if order % self.order:
            raise ValueError(f"{self.order} does not divide {order}")
        step = order // self.order
        out = [Fraction(0)] * order
        for j, c in enumerate(self.coeffs):
            if c:
                out[j * step] += c
        return CyclotomicElement(order, out)

    def minimal_form(self) -> tuple[int, tuple[Fraction, ...]]:
        """Smallest cyclotomic order containing the value, with coordinates."""
        if self._min is not None:
            return self._min
        n, cs = self.order, self.coeffs
        while n > 1:
            if not any(cs[1:]):
                n, cs = 1, (cs[0],)
                break
            for p in _prime_divisors(n):
                sol = _subfield_coords(n, n // p, cs)
                if sol is not None:
                    n, cs = n // p, sol
                    break
            else:
                break
        self._min = (n, cs)
        return self._min

    # -- predicates and keys ------------------------------------------------

    def is_zero(self):
        return not any(self.coeffs)

    def is_rational(self):
        return not any(self.coeffs[1:])

    def is_real(self):
        return self.coeffs == self.conj().coeffs

    def as_fraction(self):
        if not self.is_rational():
            raise ValueError("value is not rational")
        return self.coeffs[0]

    def canonical_key(self):
        n, cs = self.minimal_form()
        if n == 1:
            return b"Q:%s" % str(cs[0]).encode()
        body = ",".join(str(c) for c in cs)
        return b"C:%d:%s" % (n, body.encode())

    def canonical_sign(self):
        _, cs = self.minimal_form()
        for c in cs:
            if c:
                return 1 if c > 0 else -1
        return 0

    # -- numerics ------------------------------------------------------------

    def to_interval(self, bits: int, t_arg=None) -> ComplexInterval:
        if t_arg is not None:
            raise TypeError("specialization applies only to parametric scalars")
        ctx = interval_context(bits)
        re = ctx.mpf(0)
        im = ctx.mpf(0)
        for j, c in enumerate(self.coeffs):
            if c:
                cos_j, sin_j = _trig(self.order, j, bits)
                civ = rational_to_iv(c, ctx)
                re += civ * cos_j
                im += civ * sin_j
        return ComplexInterval(re, im, bits)

    def to_obj(self):
        if self.is_rational():
            return {"backend": "rational", "value": str(self.coeffs[0])}
        return {
            "backend": "cyclotomic",
            "order": self.order,
            "coeffs": [str(c) for c in self.coeffs],
        }

    def __repr__(self):
        body = ",".join(str(c) for c in self.coeffs)
        return f"CyclotomicElement({self.order}; {body})"
