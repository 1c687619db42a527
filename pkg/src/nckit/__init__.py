"""Exact symbolic calculus for noncommutative surfaces.

The package works with formal points of an elliptic curve (free rational
coefficients over named generators), divisor classes, exact Hilbert series,
section spaces of three-generator Sklyanin algebras, and the surface-level
blowup and blowdown bookkeeping built on top of them. Everything is computed
over the rationals with no floating point and no randomness.
"""

from .curvegroup import EMPTY_DIVISOR, ZERO, Divisor, Point, gen, point
from .errors import CheckFailed, InputError, NckitError, UnsupportedQuery
from .hilbert import (
    HilbertSeries,
    LineCohomology,
    elliptic_algebra_series,
    lift_central_divisible,
    line_cohomology_table,
    line_module_series,
    tcr_section_series,
)
from .picard import SheafClass, class_of_divisor, collinear_wrt, trivial_class
from .sklyanin import SectionSpace, SklyaninContext, word_str
from .surface import (
    BlowdownLog,
    CheckRecord,
    CremonaResult,
    DerivationRecord,
    EllipticAlgebra,
    IdealClass,
    LineClass,
    QuadricData,
    QuadricResult,
    RecognitionResult,
    blowdown,
    blowup,
    check_balance,
    converse_scene,
    cremona_scene,
    cremona_transform,
    genericity_gate,
    hexagon_matrix,
    intersection_additivity,
    line_ideal_generators_two_point,
    plane_algebra,
    quadric_to_plane,
    recognize,
)
from .tcrhom import TwistedRing, recognition_hom_matrix, section_dim
from .zalgebra import (
    SolvedPlane,
    StandardZAlgebra,
    ZPiece,
    binomial_growth_ok,
    check_periodic,
    composite_class,
    exponent_map,
    normalize,
    recognition_zalgebra,
    sheaf_sequence_window,
    solve_three_generator,
    veronese,
)

__version__ = "0.1.0"

__all__ = [
    "BlowdownLog",
    "CheckFailed",
    "CheckRecord",
    "CremonaResult",
    "DerivationRecord",
    "Divisor",
    "EMPTY_DIVISOR",
    "EllipticAlgebra",
    "HilbertSeries",
    "IdealClass",
    "InputError",
    "LineClass",
    "LineCohomology",
    "NckitError",
    "Point",
    "QuadricData",
    "QuadricResult",
    "RecognitionResult",
    "SectionSpace",
    "SheafClass",
    "SklyaninContext",
    "SolvedPlane",
    "StandardZAlgebra",
    "TwistedRing",
    "UnsupportedQuery",
    "ZERO",
    "ZPiece",
    "binomial_growth_ok",
    "blowdown",
    "blowup",
    "check_balance",
    "check_periodic",
    "class_of_divisor",
    "collinear_wrt",
    "composite_class",
    "converse_scene",
    "cremona_scene",
    "cremona_transform",
    "elliptic_algebra_series",
    "exponent_map",
    "gen",
    "genericity_gate",
    "hexagon_matrix",
    "intersection_additivity",
    "lift_central_divisible",
    "line_cohomology_table",
    "line_ideal_generators_two_point",
    "line_module_series",
    "normalize",
    "plane_algebra",
    "point",
    "quadric_to_plane",
    "recognition_hom_matrix",
    "recognition_zalgebra",
    "recognize",
    "section_dim",
    "sheaf_sequence_window",
    "solve_three_generator",
    "tcr_section_series",
    "trivial_class",
    "veronese",
    "word_str",
]
