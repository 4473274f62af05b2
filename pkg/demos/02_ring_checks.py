"""Decide whether a closure is a subring of C.

Three directions: always decidable, via the quadratic integer test on the
single new point x.  Four or more: the engine searches for certificates
expressing every product of elementary monomials as an integer combination
of monomial-scaled generators; a complete set proves Ring, an exhausted
bound reports Unknown (never NotRing).
"""

from origami_rings import (
    AngleSet,
    NotRing,
    Ring,
    UnitAngle,
    Unknown,
    check_ring,
    root_of_unity,
    verify_certificate,
)


def ua(order, k):
    return UnitAngle(root_of_unity(order, k))


def show(label, verdict):
    print(f"{label}: {verdict.verdict}")
    if isinstance(verdict, Ring):
        gens = verdict.context.generators
        projs = verdict.context.projections
        for cert in verdict.certificates:
            i, j = cert.product
            assert verify_certificate(cert, gens, projs)
            terms = " + ".join(
                f"{t.coefficient}*"
                + "*".join([f"p{pid}^{e}" for pid, e in t.monomial] + [f"g{t.generator}"])
                for t in cert.terms
            )
            print(f"  g{i}*g{j} = {terms or '0'}")
    elif isinstance(verdict, NotRing):
        print(f"  witness trace {verdict.trace.as_fraction()}, norm {verdict.norm.as_fraction()}")
    elif isinstance(verdict, Unknown):
        print(f"  unresolved pairs at degree bound {verdict.degree_bound}: {verdict.unresolved}")


# x = e^{i pi/3} satisfies x^2 = x - 1, a quadratic integer: Ring
show("directions 0, pi/3, 2pi/3", check_ring(AngleSet([ua(1, 0), ua(6, 1), ua(3, 1)])))

# x = 1 + i/sqrt3 has norm 4/3: NotRing
show("directions 0, pi/6, pi/2", check_ring(AngleSet([ua(1, 0), ua(12, 1), ua(4, 1)])))

# four directions: six product certificates at degree bound 2
show(
    "directions 0, pi/6, pi/3, pi/2",
    check_ring(AngleSet([ua(1, 0), ua(12, 1), ua(6, 1), ua(4, 1)]), degree_bound=2),
)

# pi/5 mixes in a field where the bounded search finds nothing: honest Unknown
show(
    "directions 0, pi/5, pi/4, pi/3",
    check_ring(AngleSet([ua(1, 0), ua(10, 1), ua(8, 1), ua(6, 1)]), degree_bound=2),
)
