"""Arithmetic of m-adic limits of Baumslag-Solitar groups.

Words in two generators, the groups BS(m, n), their metabelian
quotients, and the limits of BS(m, y) as y runs to an m-adic integer:
word problems, stabilizer exponents, tree actions, and explicit
separating witnesses, all in exact integer arithmetic.
"""

from .bs import BsParams, britton_reduce, gamma_image, is_trivial_bs
from .engine import (
    EngineContext,
    PolyExponent,
    RSTable,
    SymbolicWord,
    build_context,
    evaluate,
    is_trivial_limit,
    pinch_type1,
    pinch_type2,
    reduce_in_limit,
    stabilizer_exponent,
    symbolic_reduce,
)
from .errors import (
    BsLimitsError,
    InsufficientLevel,
    InsufficientPrecision,
    InternalInvariantViolation,
    ModulusMismatch,
    NonUnit,
    NotADivisor,
    NotDivisible,
    NotInClass,
    PreconditionViolated,
    WordSyntaxError,
    ZeroModulus,
    ZeroRing,
)
from .madic import (
    DistanceBound,
    MAdicResidue,
    Modulus,
    crt_combine,
    crt_split,
    distance,
    factorize,
)
from .marked import (
    Classification,
    ConvergenceReport,
    GroupOracle,
    MarkedDistance,
    bs_oracle,
    build_separating_sequence,
    check_convergence,
    classify_equal,
    discriminating_word,
    discriminating_word_bounded,
    gamma_oracle,
    lamplighter_oracle,
    limit_oracle,
    make_congruence_witness,
    marked_distance,
    witness_gcd_mismatch,
)
from .quotients import (
    AffineMap,
    LamplighterElement,
    LaurentPoly,
    affine_image,
    in_kernel_N,
    lamplighter_image,
)
from .tree import EdgeHandle, LimitTree, VertexHandle
from .words import Word, enumerate_reduced, parse

__version__ = "0.1.0"

__all__ = [
    "AffineMap",
    "BsLimitsError",
    "BsParams",
    "Classification",
    "ConvergenceReport",
    "DistanceBound",
    "EdgeHandle",
    "EngineContext",
    "GroupOracle",
    "InsufficientLevel",
    "InsufficientPrecision",
    "InternalInvariantViolation",
    "LamplighterElement",
    "LaurentPoly",
    "LimitTree",
    "MAdicResidue",
    "MarkedDistance",
    "ModulusMismatch",
    "Modulus",
    "NonUnit",
    "NotADivisor",
    "NotDivisible",
    "NotInClass",
    "PolyExponent",
    "PreconditionViolated",
    "RSTable",
    "SymbolicWord",
    "VertexHandle",
    "Word",
    "WordSyntaxError",
    "ZeroModulus",
    "ZeroRing",
    "affine_image",
    "britton_reduce",
    "bs_oracle",
    "build_context",
    "build_separating_sequence",
    "check_convergence",
    "classify_equal",
    "crt_combine",
    "crt_split",
    "discriminating_word",
    "discriminating_word_bounded",
    "distance",
    "enumerate_reduced",
    "evaluate",
    "factorize",
    "gamma_image",
    "gamma_oracle",
    "in_kernel_N",
    "is_trivial_bs",
    "is_trivial_limit",
    "lamplighter_image",
    "lamplighter_oracle",
    "limit_oracle",
    "make_congruence_witness",
    "marked_distance",
    "parse",
    "pinch_type1",
    "pinch_type2",
    "reduce_in_limit",
    "stabilizer_exponent",
    "symbolic_reduce",
    "witness_gcd_mismatch",
]
