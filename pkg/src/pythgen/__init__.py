"""Exact generator pairs of Pythagorean triples."""
from .exact import (
    DomainError,
    IncompatibleRadicandError,
    Rational,
    Surd,
    ValueKind,
    classify_value,
    sqrt_exact,
    squarefree_decompose,
    surd_add,
    surd_cmp,
    surd_mul,
    surd_pow4,
    surd_square,
    surd_sub,
)
from .generators import (
    AnalysisReport,
    GeneratorPair,
    MixedRadicandError,
    NonIntegerSide,
    PairKind,
    analyze,
    classify_pair,
    pair_from_leg,
    scaled_pairs,
    triple_from_pair,
)
from .identities import (
    IdentityReport,
    PairMismatch,
    check_hypotenuse_relation,
    check_pythagoras_rewritten,
    check_relations,
)
from .oracle import ViolationRecord, approx_value, brute_force_integer_pair, sweep, sweep_verify
from .surdtext import ParseError, parse_value, render
from .triples import (
    NonPositiveSide,
    NotATriple,
    PythTriple,
    TripleDecomposition,
    decompose,
    enumerate_triples,
    is_primitive,
    validate,
)

__version__ = "0.1.0"
