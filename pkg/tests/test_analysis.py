"""Lattice structure, Z[P]-module membership, ring verdicts, tangent forms."""

import random
from fractions import Fraction

import pytest

from origami_rings import (
    AngleSet,
    Certificate,
    MembershipProblem,
    MembershipSolver,
    NotRing,
    ParamRational,
    Rational,
    Ring,
    Unknown,
    UnitAngle,
    UnsupportedConfigurationError,
    check_ring,
    lattice_coordinates,
    lattice_descriptor,
    membership,
    minimal_polynomial_pair,
    projection_set,
    quadratic_integer_test,
    root_of_unity,
    same_lattice,
    tangent_point,
    verify_certificate,
)
from origami_rings.analysis import (
    CertTerm,
    certificate_from_obj,
    certificate_to_obj,
    evaluate_certificate,
    verdict_to_obj,
)
from helpers import brute_lattice_points, quadratic_oracle, random_fraction


def ua(order, k):
    return UnitAngle(root_of_unity(order, k))


def example_angles():
    return AngleSet([ua(1, 0), ua(12, 1), ua(6, 1), ua(4, 1)])


def example_generators():
    z6 = root_of_unity(6, 1)
    z1 = (1 + z6) * Fraction(2, 3)
    z2 = 1 + z6
    z3 = z6 * 2
    return z1, z2, z3


def param_angles():
    t = ParamRational.t_power
    return AngleSet(
        [UnitAngle(ParamRational.from_rational(Fraction(1)))]
        + [UnitAngle(t(k)) for k in (1, 2, 3)]
    )


# --- quadratic integer test -------------------------------------------------


def test_quadratic_golden_values():
    assert quadratic_integer_test(root_of_unity(6, 1)) == (1, -1)
    assert quadratic_integer_test(root_of_unity(4, 1)) == (0, -1)
    z1, _, _ = example_generators()
    assert quadratic_integer_test(z1) is None  # norm 4/3 is not an integer
    with pytest.raises(ValueError):
        quadratic_integer_test(Rational(Fraction(2)))


def test_quadratic_matches_polynomial_expansion():
    rng = random.Random(81)
    count = 0
    while count < 100:
        order = rng.choice([3, 4, 6, 8, 12])
        a = random_fraction(rng, 6, 3)
        b = random_fraction(rng, 6, 3)
        x = Rational(a) + root_of_unity(order, 1) * b
        if x.is_real():
            continue
        count += 1
        assert quadratic_integer_test(x) == quadratic_oracle(x)
        if quadratic_integer_test(x) is not None:
            lam, mu = quadratic_integer_test(x)
            assert x * x == x * lam + mu


def test_minimal_polynomial_pair():
    x = root_of_unity(6, 1)
    c1, c0 = minimal_polynomial_pair(x)
    # X^2 - X + 1 annihilates e^{i pi/3}
    assert c1 == -1 and c0 == 1
    assert x * x + x * c1.as_fraction() + c0.as_fraction() == 0


# --- lattices -----------------------------------------------------------------


def test_lattice_descriptor():
    x = root_of_unity(6, 1)
    d = lattice_descriptor(x)
    assert d.re_part.as_fraction() == Fraction(1, 2)
    assert (d.im_part * d.im_part).as_fraction() == Fraction(3, 4)
    with pytest.raises(ValueError):
        lattice_descriptor(Rational(Fraction(1, 2)))


def make_point(a, b):
    """a + b*i with Fraction inputs."""
    return Rational(Fraction(a)) + root_of_unity(4, 1) * Fraction(b)


def test_same_lattice_golden():
    # integer translation preserves the lattice
    assert same_lattice(make_point(Fraction(1, 2), 3), make_point(Fraction(3, 2), 3))
    # scaling the imaginary part does not
    assert not same_lattice(make_point(0, 1), make_point(0, 2))
    # sign flip of the generator is the same lattice
    assert same_lattice(make_point(Fraction(1, 3), Fraction(1, 2)),
                        make_point(Fraction(-1, 3), Fraction(-1, 2)))
    x = root_of_unity(6, 1)
    assert same_lattice(x, x + 1)
    assert same_lattice(x, -x + 5)
    assert not same_lattice(x, x + Fraction(1, 2))
    with pytest.raises(ValueError):
        same_lattice(x, Rational(Fraction(1)))


def test_same_lattice_is_equivalence():
    rng = random.Random(82)
    pts = [
        make_point(random_fraction(rng, 4, 3), Fraction(rng.randint(1, 5), rng.randint(1, 3)))
        for _ in range(12)
    ]
    for x in pts:
        assert same_lattice(x, x)
        for y in pts:
            assert same_lattice(x, y) == same_lattice(y, x)
            for z in pts:
                if same_lattice(x, y) and same_lattice(y, z):
                    assert same_lattice(x, z)


def test_same_lattice_agrees_with_brute_force():
    rng = random.Random(83)
    box = (Fraction(-5, 4), Fraction(5, 4), Fraction(-5, 4), Fraction(5, 4))
    checked_equal = 0
    for _ in range(50):
        a = Fraction(rng.randint(-6, 6), 6)
        c = Fraction(rng.randint(-6, 6), 6)
        b = Fraction(rng.randint(2, 7), 6)
        d = Fraction(rng.randint(2, 7), 6)
        x = make_point(a, b)
        y = make_point(c, d)
        # the box is wide enough that distinct lattices always disagree inside
        # it, and |m|,|n| <= 6 covers every lattice point that can reach it
        same_sets = brute_lattice_points(a, b, box) == brute_lattice_points(c, d, box)
        assert same_lattice(x, y) == same_sets
        checked_equal += same_sets
    assert checked_equal >= 1  # the sample should hit at least one equal pair


def test_lattice_coordinates():
    x = root_of_unity(6, 1)
    z = Rational(Fraction(3)) - x * 2
    assert lattice_coordinates(x, z) == (3, -2)
    assert lattice_coordinates(x, Rational(Fraction(7))) == (7, 0)
    assert lattice_coordinates(x, Rational(Fraction(1, 2))) is None
    assert lattice_coordinates(x, root_of_unity(4, 1)) is None
    m, n = lattice_coordinates(x, x)
    assert (m, n) == (0, 1)


def test_lattice_coordinates_round_trip():
    rng = random.Random(84)
    x = root_of_unity(6, 1)
    for _ in range(50):
        m = rng.randint(-20, 20)
        n = rng.randint(-20, 20)
        z = Rational(Fraction(m)) + x * n
        assert lattice_coordinates(x, z) == (m, n)


# --- tangent point --------------------------------------------------------------


def test_tangent_point_golden():
    # phi = pi/3, theta = 2pi/3 meet at e^{i pi/3}
    got = tangent_point(ua(3, 1), ua(6, 1))
    assert got == root_of_unity(6, 1)


def test_tangent_point_vertical_fallback():
    # theta = pi/2 has no tangent; the direct intersection takes over
    got = tangent_point(ua(4, 1), ua(6, 1))
    assert got == root_of_unity(6, 1) * 2  # 1 + i sqrt3


def test_tangent_point_validation():
    with pytest.raises(ValueError):
        tangent_point(ua(6, 1), ua(3, 1))  # arguments in the wrong order
    with pytest.raises(ValueError):
        tangent_point(ua(6, 1), ua(6, 1))
    with pytest.raises(ValueError):
        tangent_point(ua(6, 1), ua(1, 0))  # real direction


def test_tangent_point_matches_intersect_random():
    args = [(12, 1), (8, 1), (6, 1), (12, 5), (8, 3), (3, 1), (4, 1), (12, 4)]
    from origami_rings import intersect
    from origami_rings.geometry import angle_arg_compare

    for i, a in enumerate(args):
        for b in args[i + 1 :]:
            phi, theta = ua(*a), ua(*b)
            if angle_arg_compare(phi, theta) > 0:
                phi, theta = theta, phi
            if angle_arg_compare(phi, theta) == 0:
                continue
            assert tangent_point(theta, phi) == intersect(
                phi, theta, Rational(0), Rational(1)
            )


# --- membership ------------------------------------------------------------------


def example_problem_parts():
    z1, z2, z3 = example_generators()
    generators = (Rational(1), z1, z2, z3)
    projections = tuple(projection_set(example_angles()).nontrivial)
    return generators, projections


def test_membership_square_decomposes_at_degree_one():
    generators, projections = example_problem_parts()
    z1, z2, z3 = example_generators()
    cert = membership(
        MembershipProblem(z1 * z1, generators, projections, degree_bound=1)
    )
    assert cert is not None
    assert verify_certificate(cert, generators, projections, expected=z1 * z1)
    assert all(sum(e for _, e in t.monomial) <= 1 for t in cert.terms)
    # the canonical decomposition (2/3) * z3 is itself a valid certificate
    proj_index = {p.canonical_key(): i for i, p in enumerate(projections)}
    two_thirds = proj_index[Rational(Fraction(2, 3)).canonical_key()]
    hand = Certificate(
        product=None,
        terms=(CertTerm(generator=3, monomial=((two_thirds, 1),), coefficient=1),),
        degree_bound=1,
    )
    assert verify_certificate(hand, generators, projections, expected=z1 * z1)


def test_membership_degree_zero_combination():
    generators, projections = example_problem_parts()
    z1, z2, z3 = example_generators()
    target = z3 * z3  # equals 4*z3 - 6*z1
    assert target == z3 * 4 - z1 * 6
    cert = membership(MembershipProblem(target, generators, projections, 1))
    assert cert is not None
    assert verify_certificate(cert, generators, projections, expected=target)


def test_membership_zero_target_empty_certificate():
    generators, projections = example_problem_parts()
    cert = membership(MembershipProblem(Rational(0), generators, projections, 2))
    assert cert is not None
    assert cert.terms == ()
    assert evaluate_certificate(cert, generators, projections) == 0


def test_membership_planted_instances():
    generators, projections = example_problem_parts()
    solver = MembershipSolver(generators, projections, degree_bound=2)
    rng = random.Random(85)
    vectors = solver.exponents
    for _ in range(60):
        terms = []
        for _ in range(rng.randint(1, 3)):
            vec = rng.choice(vectors)
            terms.append(
                CertTerm(
                    generator=rng.randrange(len(generators)),
                    monomial=tuple((pid, e) for pid, e in enumerate(vec) if e),
                    coefficient=rng.choice([c for c in range(-9, 10) if c]),
                )
            )
        planted = Certificate(product=None, terms=tuple(terms), degree_bound=2)
        target = evaluate_certificate(planted, generators, projections)
        found = solver.solve(target)
        assert found is not None
        assert verify_certificate(found, generators, projections, expected=target)


def test_membership_honest_negatives():
    generators, projections = example_problem_parts()
    # the imaginary unit is not an integer Z[P]-combination of these generators
    assert membership(MembershipProblem(root_of_unity(4, 1), generators, projections, 2)) is None
    # denominators of degree<=2 monomials divide 36, so 1/5 is unreachable
    assert membership(
        MembershipProblem(Rational(Fraction(1, 5)), generators, projections, 2)
    ) is None


def test_membership_solver_reuse_across_targets():
    generators, projections = example_problem_parts()
    z1, z2, z3 = example_generators()
    solver = MembershipSolver(generators, projections, degree_bound=2)
    for target in (z1 * z2, z2 * z3, z1 * z3, z2 * z2, Rational(0)):
        cert = solver.solve(target)
        assert cert is not None
        assert verify_certificate(cert, generators, projections, expected=target)


def test_membership_parametric():
    t = ParamRational.t_power(1)
    t2 = t * t
    z1 = (1 + t2 + t2 * t2) / (1 + t2)
    z2 = 1 + t2
    z3 = 1 + t2 + t2 * t2
    p1 = z1 / z2
    generators = (ParamRational.from_rational(Fraction(1)), z1, z2, z3)
    projections = tuple(projection_set(param_angles()).nontrivial)
    cert = membership(MembershipProblem(z1 * z2, generators, projections, 2))
    assert cert is not None
    assert verify_certificate(cert, generators, projections, expected=z1 * z2)
    assert z1 * z2 == z3  # the parametric analogue of the numeric identity


def test_verify_rejects_corruption():
    generators, projections = example_problem_parts()
    z1, z2, z3 = example_generators()
    cert = membership(MembershipProblem(z1 * z2, generators, projections, 2))
    assert cert is not None and cert.terms
    first = cert.terms[0]
    corrupted = Certificate(
        product=None,
        terms=(
            CertTerm(first.generator, first.monomial, first.coefficient + 1),
        ) + cert.terms[1:],
        degree_bound=cert.degree_bound,
    )
    assert not verify_certificate(corrupted, generators, projections, expected=z1 * z2)


def test_certificate_json_round_trip():
    generators, projections = example_problem_parts()
    z1, z2, z3 = example_generators()
    cert = membership(MembershipProblem(z2 * z3, generators, projections, 2))
    assert cert is not None
    again = certificate_from_obj(certificate_to_obj(cert))
    assert again == cert
    assert verify_certificate(again, generators, projections, expected=z2 * z3)


# --- ring verdicts ----------------------------------------------------------------


def test_check_ring_three_angles_positive():
    verdict = check_ring(AngleSet([ua(1, 0), ua(6, 1), ua(3, 1)]))
    assert isinstance(verdict, Ring)
    assert verdict.verdict == "ring"
    (cert,) = verdict.certificates
    assert cert.product == (1, 1)
    gens = verdict.context.generators
    x = gens[1]
    # x^2 = x - 1 for x = e^{i pi/3}
    assert verify_certificate(cert, gens, verdict.context.projections)
    assert x * x == x - 1


def test_check_ring_three_angles_negative():
    verdict = check_ring(AngleSet([ua(1, 0), ua(12, 1), ua(4, 1)]))
    assert isinstance(verdict, NotRing)
    assert verdict.verdict == "not_ring"
    # witness 1 + i/sqrt3 has trace 2 but norm 4/3
    assert verdict.trace.as_fraction() == 2
    assert verdict.norm.as_fraction() == Fraction(4, 3)


def test_check_ring_example_certifies_all_products():
    verdict = check_ring(example_angles(), degree_bound=2)
    assert isinstance(verdict, Ring)
    gens = verdict.context.generators
    projs = verdict.context.projections
    assert len(verdict.certificates) == 6
    for cert in verdict.certificates:
        assert verify_certificate(cert, gens, projs)
    # golden closed forms, checked as value identities
    z1, z2, z3 = example_generators()
    assert z1 * z1 == z3 * Fraction(2, 3)
    assert z1 * z2 == z3
    assert z1 * z3 == z1 * 4 - 4
    assert z2 * z2 == z3 * Fraction(3, 2)
    assert z2 * z3 == z1 * 6 - 6
    assert z3 * z3 == z3 * 4 - z1 * 6
    # the generator tuple is (1, <the three nontrivial values in pair order>)
    keys = {g.canonical_key() for g in gens}
    for z in (z1, z2, z3):
        assert z.canonical_key() in keys


def test_check_ring_parametric():
    verdict = check_ring(param_angles(), degree_bound=2)
    assert isinstance(verdict, Ring)
    gens = verdict.context.generators
    projs = verdict.context.projections
    for cert in verdict.certificates:
        assert verify_certificate(cert, gens, projs)
    t = ParamRational.t_power(1)
    t2 = t * t
    z2 = 1 + t2
    z3 = 1 + t2 + t2 * t2
    # product expansions in the parameter
    assert z2 * z3 == ParamRational(
        tuple(Fraction(c) for c in (1, 0, 2, 0, 2, 0, 1))
    )
    assert z3 * z3 == ParamRational(
        tuple(Fraction(c) for c in (1, 0, 2, 0, 3, 0, 2, 0, 1))
    )


def test_check_ring_unknown_is_honest():
    angles = AngleSet([ua(1, 0), ua(10, 1), ua(8, 1), ua(6, 1)])
    verdict = check_ring(angles, degree_bound=1)
    assert isinstance(verdict, Unknown)
    assert verdict.verdict == "unknown"
    assert verdict.degree_bound == 1
    assert len(verdict.unresolved) >= 1
    # never NotRing for four or more directions
    assert not isinstance(verdict, NotRing)


def test_check_ring_unsupported_configurations():
    with pytest.raises(UnsupportedConfigurationError):
        check_ring(AngleSet([ua(12, 1), ua(6, 1), ua(4, 1)]))  # missing the axis
    with pytest.raises(UnsupportedConfigurationError):
        check_ring(AngleSet([ua(1, 0), ua(4, 1)]))


def test_verdict_json_forms():
    ring = check_ring(example_angles(), degree_bound=2)
    obj = verdict_to_obj(ring)
    assert obj["verdict"] == "ring"
    assert len(obj["certificates"]) == 6
    assert len(obj["generators"]) == 4
    not_ring = check_ring(AngleSet([ua(1, 0), ua(12, 1), ua(4, 1)]))
    obj = verdict_to_obj(not_ring)
    assert obj["verdict"] == "not_ring"
    assert obj["norm"] == "4/3"
    unknown = check_ring(AngleSet([ua(1, 0), ua(10, 1), ua(8, 1), ua(6, 1)]), 1)
    obj = verdict_to_obj(unknown)
    assert obj["verdict"] == "unknown"
    assert obj["degree_bound"] == 1
    assert obj["unresolved"]
