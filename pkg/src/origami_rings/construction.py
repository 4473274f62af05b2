"""Iterated intersection closures and their distinguished values.

Starting from S0 = {0, 1}, each generation adds every intersection of two
lines drawn through existing points with directions from the angle set.
Since a point p is the intersection of two lines through p itself, each
generation contains the previous one.  Alongside the raw closure live the
elementary monomials (intersections seeded at 0 and 1), their products, and
their real-axis projections.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CapExceededError
from .geometry import AngleSet, UnitAngle, intersect, project_to_real_axis
from .scalars import ExactScalar, Rational


@dataclass(frozen=True)
class ConstructionConfig:
    angles: AngleSet
    max_depth: int = 3
    max_points: int = 250_000

    def __post_init__(self):
        if self.max_depth < 0:
            raise ValueError("max_depth must be nonnegative")
        if self.max_points < 2:
            raise ValueError("max_points must allow at least the seed points")


class GenerationSet:
    """Deduplicated point set of one construction depth, canonically ordered."""

    __slots__ = ("depth", "points", "_keys")

    def __init__(self, depth: int, points):
        by_key = {}
        for p in points:
            by_key.setdefault(p.canonical_key(), p)
        self.depth = depth
        self.points = tuple(by_key[k] for k in sorted(by_key))
        self._keys = frozenset(by_key)

    def contains(self, value: ExactScalar) -> bool:
        return value.canonical_key() in self._keys

    def __contains__(self, value):
        return self.contains(value)

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __repr__(self):
        return f"GenerationSet(depth={self.depth}, size={len(self.points)})"


def initial_generation() -> GenerationSet:
    return GenerationSet(0, [Rational(0), Rational(1)])


def step(gen: GenerationSet, angles: AngleSet, max_points: int = 250_000) -> GenerationSet:
    """One closure step: all intersections of point-pair lines, plus the old points."""
    found = {p.canonical_key(): p for p in gen.points}
    for alpha, beta in angles.pairs():
        for p in gen.points:
            for q in gen.points:
                z = intersect(alpha, beta, p, q)
                k = z.canonical_key()
                if k not in found:
                    found[k] = z
                    if len(found) > max_points:
                        raise CapExceededError(
                            f"generation {gen.depth + 1} exceeds {max_points} points",
                            partial=GenerationSet(gen.depth + 1, found.values()),
                        )
    return GenerationSet(gen.depth + 1, found.values())


def closure_to_depth(config: ConstructionConfig) -> list[GenerationSet]:
    """The chain S0, S1, ..., S_max_depth.

    On a cap overflow the raised CapExceededError carries the partial chain,
    ending with the truncated generation.
    """
    gens = [initial_generation()]
    for _ in range(config.max_depth):
        try:
            gens.append(step(gens[-1], config.angles, config.max_points))
        except CapExceededError as err:
            err.partial = gens + [err.partial]
            raise
    return gens


@dataclass(frozen=True)
class ElementaryMonomial:
    """Value intersect(alpha, beta, 0, 1) together with its direction pair."""

    alpha: UnitAngle
    beta: UnitAngle
    value: ExactScalar


def elementary_monomials(angles: AngleSet) -> tuple[ElementaryMonomial, ...]:
    """All intersect(alpha, beta, 0, 1) over ordered direction pairs, deduplicated
    by value (the first ordered pair producing a value names it)."""
    out = {}
    for a, b in angles.pairs():
        for alpha, beta in ((a, b), (b, a)):
            v = intersect(alpha, beta, Rational(0), Rational(1))
            out.setdefault(v.canonical_key(), ElementaryMonomial(alpha, beta, v))
    return tuple(out.values())


def nontrivial_monomials(angles: AngleSet) -> tuple[ElementaryMonomial, ...]:
    """Elementary monomials from non-axis direction pairs in argument order,
    dropping 0 and 1."""
    out = {}
    nu = angles.non_unit()
    for i in range(len(nu)):
        for j in range(i + 1, len(nu)):
            v = intersect(nu[i], nu[j], Rational(0), Rational(1))
            if v == 0 or v == 1:
                continue
            out.setdefault(v.canonical_key(), ElementaryMonomial(nu[i], nu[j], v))
    return tuple(out.values())


@dataclass(frozen=True)
class Monomial:
    """A product of elementary monomials, factored by direction pairs."""

    factors: tuple[tuple[UnitAngle, UnitAngle], ...]
    value: ExactScalar


def monomials_to_length(
    angles: AngleSet, length: int, max_monomials: int = 100_000
) -> tuple[Monomial, ...]:
    """Products of 1..length elementary monomials, deduplicated by value.

    The first factorization found names a value, so each value carries a
    shortest factor list.  Length 1 reproduces the elementary monomials.
    """
    if length < 1:
        raise ValueError("length must be at least 1")
    elems = elementary_monomials(angles)
    out: dict[bytes, Monomial] = {}
    level = []
    for e in elems:
        m = Monomial(((e.alpha, e.beta),), e.value)
        k = e.value.canonical_key()
        if k not in out:
            out[k] = m
            level.append(m)
    for _ in range(length - 1):
        next_level = []
        for m in level:
            for e in elems:
                v = m.value * e.value
                k = v.canonical_key()
                if k not in out:
                    if len(out) >= max_monomials:
                        raise CapExceededError(
                            f"more than {max_monomials} monomial values",
                            partial=tuple(out.values()),
                        )
                    nm = Monomial(m.factors + ((e.alpha, e.beta),), v)
                    out[k] = nm
                    next_level.append(nm)
        level = next_level
    return tuple(out.values())


@dataclass(frozen=True)
class ProjectionSet:
    """Real-axis projections of the elementary monomials.

    ``projections`` is the full set including the trivial values 0 and 1;
    ``nontrivial`` keeps only projections of nontrivial monomials that are
    themselves neither 0 nor 1.  For four directions containing the real
    axis, ``x`` is the projection of the widest intersection along the middle
    direction, and ``family`` is its closure under inversion x -> 1/x, the
    slide x -> x/(x-1), and complements: every projection lies there.
    """

    projections: tuple[ExactScalar, ...]
    nontrivial: tuple[ExactScalar, ...]
    x: ExactScalar | None
    family: tuple[ExactScalar, ...] | None


def projection_set(angles: AngleSet) -> ProjectionSet:
    nu = angles.non_unit()
    all_proj = {Rational(0).canonical_key(): Rational(0), Rational(1).canonical_key(): Rational(1)}
    for e in elementary_monomials(angles):
        for gamma in nu:
            v = project_to_real_axis(e.value, gamma)
            all_proj.setdefault(v.canonical_key(), v)
    nontrivial = {}
    for e in nontrivial_monomials(angles):
        for gamma in nu:
            v = project_to_real_axis(e.value, gamma)
            if v == 0 or v == 1:
                continue
            nontrivial.setdefault(v.canonical_key(), v)
    x = None
    family = None
    if len(nu) == 3 and angles.contains_one():
        u, v_mid, w = nu
        z1 = intersect(u, w, Rational(0), Rational(1))
        cand = project_to_real_axis(z1, v_mid)
        if cand != 0 and cand != 1:
            x = cand
            orbit = (x, x.inv(), x * (x - 1).inv())
            family = orbit + tuple(1 - f for f in orbit)
            allowed = {f.canonical_key() for f in family}
            allowed.add(Rational(0).canonical_key())
            allowed.add(Rational(1).canonical_key())
            stray = [p for k, p in all_proj.items() if k not in allowed]
            if stray:
                raise RuntimeError(
                    f"projections escape the x-family: {stray!r}"
                )
    order = lambda d: tuple(d[k] for k in sorted(d))
    return ProjectionSet(
        projections=order(all_proj),
        nontrivial=order(nontrivial),
        x=x,
        family=family,
    )
