"""Perfect powers in denominator sequences of rational points.

For a non-torsion rational point P on y^2 = x(x^2 + b) the multiples mP
have coordinates (A_m/B_m^2, C_m/B_m^3) in lowest terms.  This package
computes the sequence {B_m}, scans it for perfect powers, decomposes terms
into the quartic v^2 - a*u^4 = (b/a)*w^(4*ell), attaches the associated
curve over Q(sqrt(a)) with its invariants and reduction types, and
assembles the effective bound on the exponent of any perfect-power term.
"""
from .arith import (
    Budget,
    DEFAULT_BUDGET,
    Factorization,
    exact_root,
    factorize,
    is_probable_prime,
    is_squarefree,
    perfect_power,
    squarefree_split,
    valuation,
)
from .curve import Curve, INFINITY, Point, add, is_torsion, make_curve_xb, mul, neg, on_curve
from .descent import DescentDatum, decompose, to_frey
from .eds import (
    EDSTerm,
    PrimitiveDivisors,
    Sequence,
    check_strong_divisibility,
    check_valuation_growth,
    extend,
    generate,
    primitive_divisors,
    scan_powers,
    term,
)
from .errors import BudgetExhausted, HypothesisError
from .frey import FreyCurve, FreySolution, Reduction, bad_set, classify_reduction, construct, exponent_divisibility, invariants_oracle
from .ledger import (
    EigenRecord,
    EnvelopeBound,
    LedgerReport,
    LevelSupport,
    build_report,
    envelope_bound,
    exact_bound_with_eigenvalues,
    find_k_p0,
    level_support,
    load_eigenvalue_table,
    threshold,
)
from .quadfield import QuadElement, QuadPrime, SplitType, norm, prime_valuation, primes_above, splitting_type

__version__ = "0.1.0"

__all__ = [
    "Budget", "DEFAULT_BUDGET", "Factorization", "exact_root", "factorize",
    "is_probable_prime", "is_squarefree", "perfect_power", "squarefree_split",
    "valuation",
    "Curve", "INFINITY", "Point", "add", "is_torsion", "make_curve_xb", "mul",
    "neg", "on_curve",
    "EDSTerm", "PrimitiveDivisors", "Sequence", "check_strong_divisibility",
    "check_valuation_growth", "extend", "generate", "primitive_divisors",
    "scan_powers", "term",
    "QuadElement", "QuadPrime", "SplitType", "norm", "prime_valuation",
    "primes_above", "splitting_type",
    "FreyCurve", "FreySolution", "Reduction", "bad_set", "classify_reduction",
    "construct", "exponent_divisibility", "invariants_oracle",
    "DescentDatum", "decompose", "to_frey",
    "EigenRecord", "EnvelopeBound", "LedgerReport", "LevelSupport",
    "build_report", "envelope_bound", "exact_bound_with_eigenvalues",
    "find_k_p0", "level_support", "load_eigenvalue_table", "threshold",
    "BudgetExhausted", "HypothesisError",
    "__version__",
]
