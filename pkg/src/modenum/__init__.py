"""Exact modular enumeration: remainders mod x^n - 1 from cyclotomic residues."""

from .core import (
    ResidueSystem,
    canonical_rep,
    crt_combine,
    g_coeff,
    g_poly,
    invariant_equal,
    simplify_class_from_residues,
    simplify_from_residues,
)
from .errors import (
    DomainError,
    EmptyWord,
    InexactDivision,
    LengthNotDivisible,
    ModEnumError,
    NonIntegerResult,
    NonIntegralInput,
    NonMonicModulus,
    NotFlatNonDyck,
)
from .numtheory import cyclotomic, divisors, euler_phi, moebius, ramanujan
from .poly import (
    Polynomial,
    arith,
    coeff_class,
    format_poly,
    from_json,
    is_periodic,
    parse_poly,
    poly_rem,
    simplify,
    to_json,
)
from .qcomb import (
    catalan_major_count,
    q_catalan,
    q_catalan_residue,
    q_multinomial,
    q_multinomial_class,
    q_multinomial_residue,
)
from .subset import subset_sum_class, subset_sum_poly, subset_sum_residue

__version__ = "0.1.0"
