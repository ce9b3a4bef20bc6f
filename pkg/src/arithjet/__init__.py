"""Exact computer algebra for arithmetic jets, Segre classes and Manin-Mumford bounds."""

from .bound import (
    BoundReport,
    SegreDegreeVector,
    buium_curve_bound,
    complete_intersection_bound,
    interior_degree,
    theorem_b_bound,
)
from .chow import (
    AmbientSpec,
    ChernSeries,
    CycleClass,
    IntersectionTable,
    ci_cotangent_segre,
    evaluate,
    frobenius_pullback,
    invert_series,
    restrict_to_ci,
    whitney_product,
)
from .delta import DeltaContext, delta, delta_iter, fermat_quotient, frobenius_substitution
from .errors import (
    AmbientMismatch,
    ArithJetError,
    HypothesisViolation,
    InvalidInput,
    InvalidSeries,
    InvariantViolation,
    MissingIntersectionNumber,
    NotDivisible,
    ParseError,
    ResourceLimit,
)
from .jetspace import (
    JetPresentation,
    SpecialFiberPresentation,
    jet_presentation,
    prolongation_commutation_check,
    special_fiber,
)
from .parsing import parse_polynomial
from .polyring import Monomial, Polynomial, Variable, divide_exact, substitute, term_limit

__version__ = "0.1.0"
