"""Dense univariate polynomial helpers over exact rationals.

Polynomials are tuples of Fraction in ascending degree order with no
trailing zeros; the zero polynomial is the empty tuple.
"""

from __future__ import annotations

from fractions import Fraction

Poly = tuple


def trim(coeffs) -> Poly:
    cs = [Fraction(c) for c in coeffs]
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


def const(c) -> Poly:
    return trim([c])


ZERO: Poly = ()
ONE: Poly = const(1)


def degree(p: Poly) -> int:
    # degree of the zero polynomial reported as -1
    return len(p) - 1


def add(p: Poly, q: Poly) -> Poly:
    if len(p) < len(q):
        p, q = q, p
    out = list(p)
    for i, c in enumerate(q):
        out[i] += c
    return trim(out)


def neg(p: Poly) -> Poly:
    return tuple(-c for c in p)


def sub(p: Poly, q: Poly) -> Poly:
    return add(p, neg(q))


def mul(p: Poly, q: Poly) -> Poly:
    if not p or not q:
        return ZERO
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return trim(out)


def scale(p: Poly, c) -> Poly:
    c = Fraction(c)
    if c == 0:
        return ZERO
    return tuple(a * c for a in p)


def shift(p: Poly, k: int) -> Poly:
    """Multiply by x**k."""
    if not p:
        return ZERO
    return (Fraction(0),) * k + tuple(p)


def divmod_(p: Poly, q: Poly) -> tuple[Poly, Poly]:
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(p)
    dq = degree(q)
    lead = q[-1]
    quo = [Fraction(0)] * max(0, len(p) - dq)
    while len(rem) - 1 >= dq and any(rem):
        while rem and rem[-1] == 0:
            rem.pop()
        if len(rem) - 1 < dq:
            break
        f = rem[-1] / lead
        k = len(rem) - 1 - dq
        quo[k] = f
        for i, c in enumerate(q):
            rem[k + i] -= f * c
        rem.pop()
    return trim(quo), trim(rem)


def monic(p: Poly) -> Poly:
    if not p:
        return ZERO
    lead = p[-1]
    if lead == 1:
        return p
    return tuple(c / lead for c in p)


def gcd(p: Poly, q: Poly) -> Poly:
    # Euclid over Q[x]; result is monic (or zero when both inputs are zero)
    while q:
        p, q = q, divmod_(p, q)[1]
    return monic(p)


def lcm(p: Poly, q: Poly) -> Poly:
    if not p or not q:
        return ZERO
    g = gcd(p, q)
    return monic(divmod_(mul(p, q), g)[0])


def xgcd(p: Poly, q: Poly) -> tuple[Poly, Poly, Poly]:
    """Extended Euclid: returns (g, s, t) with s*p + t*q = g, g monic."""
    r0, r1 = p, q
    s0, s1 = ONE, ZERO
    t0, t1 = ZERO, ONE
    while r1:
        quo, rem = divmod_(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, sub(s0, mul(quo, s1))
        t0, t1 = t1, sub(t0, mul(quo, t1))
    if not r0:
        return ZERO, ZERO, ZERO
    lead = r0[-1]
    inv = 1 / lead
    return scale(r0, inv), scale(s0, inv), scale(t0, inv)
