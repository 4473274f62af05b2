"""Exact intersection-closure constructions and their ring structure."""

from .analysis import (
    Certificate,
    LatticeDescriptor,
    MembershipProblem,
    MembershipSolver,
    NotRing,
    Ring,
    RingContext,
    Unknown,
    check_ring,
    lattice_coordinates,
    lattice_descriptor,
    membership,
    minimal_polynomial_pair,
    quadratic_integer_test,
    same_lattice,
    tangent_point,
    verify_certificate,
)
from .construction import (
    ConstructionConfig,
    ElementaryMonomial,
    GenerationSet,
    Monomial,
    ProjectionSet,
    closure_to_depth,
    elementary_monomials,
    initial_generation,
    monomials_to_length,
    nontrivial_monomials,
    projection_set,
    step,
)
from .cyclotomic import CyclotomicElement, cyclotomic_polynomial, euler_phi
from .density import DensityWitness, approximate, find_scaling_projection
from .errors import (
    BackendMismatchError,
    CapExceededError,
    NonInvertibleError,
    OrigamiError,
    ParallelLinesError,
    PrecisionError,
    ScalingProjectionNotFoundError,
    UnsupportedConfigurationError,
)
from .geometry import AngleSet, Line, UnitAngle, bracket, intersect, project_to_real_axis
from .intervals import ComplexInterval
from .ratfunc import ParamRational
from .scalars import (
    ExactScalar,
    Rational,
    as_scalar,
    ceil_exact,
    coerce,
    floor_exact,
    real_compare,
    real_imag_parts,
    real_sign,
    scalar_from_obj,
)

root_of_unity = CyclotomicElement.root_of_unity

__version__ = "0.1.0"

__all__ = [
    "AngleSet",
    "BackendMismatchError",
    "CapExceededError",
    "Certificate",
    "ComplexInterval",
    "ConstructionConfig",
    "CyclotomicElement",
    "DensityWitness",
    "ElementaryMonomial",
    "ExactScalar",
    "GenerationSet",
    "LatticeDescriptor",
    "Line",
    "MembershipProblem",
    "MembershipSolver",
    "Monomial",
    "NonInvertibleError",
    "NotRing",
    "OrigamiError",
    "ParallelLinesError",
    "ParamRational",
    "PrecisionError",
    "ProjectionSet",
    "Rational",
    "Ring",
    "RingContext",
    "ScalingProjectionNotFoundError",
    "Unknown",
    "UnitAngle",
    "UnsupportedConfigurationError",
    "approximate",
    "as_scalar",
    "bracket",
    "ceil_exact",
    "check_ring",
    "closure_to_depth",
    "coerce",
    "cyclotomic_polynomial",
    "elementary_monomials",
    "euler_phi",
    "find_scaling_projection",
    "floor_exact",
    "initial_generation",
    "intersect",
    "lattice_coordinates",
    "lattice_descriptor",
    "membership",
    "minimal_polynomial_pair",
    "monomials_to_length",
    "nontrivial_monomials",
    "project_to_real_axis",
    "projection_set",
    "quadratic_integer_test",
    "real_compare",
    "real_imag_parts",
    "real_sign",
    "root_of_unity",
    "scalar_from_obj",
    "same_lattice",
    "step",
    "tangent_point",
    "verify_certificate",
]
