"""Exact Pfaffian calculus for skew-symmetric matrices.

Words over matrix indices carry a ring value that generalizes
sub-Pfaffians; arbitrary minors det(T[R; S]) come out as signed sums of
products of two such values. All arithmetic is exact (big integers,
rationals, or residues mod m) and every algebraic identity the package
relies on is machine-checked against brute-force oracles.
"""

from .brill import (
    MinorReport,
    PATH_DIRECT,
    PATH_DOUBLING,
    PATH_ORACLE,
    brill_minor,
    brill_minor_via_doubling,
    vanishing_term_check,
)
from .detoracle import MAX_COFACTOR_DIM, det_bareiss, det_cofactor
from .pfaffian import (
    PfCache,
    STRATEGIES,
    pf_eliminate,
    pf_expand,
    pf_matchsum,
    pfaffian,
)
from .scalar import (
    Mod,
    ModularRing,
    IntegerRing,
    NonDivisibleError,
    QQ,
    RationalRing,
    Ring,
    RingMismatchError,
    Scalar,
    UnsupportedRingError,
    ZZ,
    add,
    exact_div,
    format_scalar,
    mul,
    neg,
    parse_ring,
    ring_of,
)
from .skewmatrix import (
    GeneralMatrix,
    IndexSet,
    MatrixFormatError,
    SkewMatrix,
    even_lift,
    format_skew_matrix,
    odd_lift,
    parse_skew_matrix,
    random_skew_matrix,
)
from .words import (
    Word,
    has_repeated_letter,
    sign,
    sort_word,
    subwords_of_size,
    word_remove,
)

__version__ = "0.1.0"

__all__ = [
    "GeneralMatrix",
    "IndexSet",
    "IntegerRing",
    "MAX_COFACTOR_DIM",
    "MatrixFormatError",
    "MinorReport",
    "Mod",
    "ModularRing",
    "NonDivisibleError",
    "PATH_DIRECT",
    "PATH_DOUBLING",
    "PATH_ORACLE",
    "PfCache",
    "QQ",
    "RationalRing",
    "Ring",
    "RingMismatchError",
    "STRATEGIES",
    "Scalar",
    "SkewMatrix",
    "UnsupportedRingError",
    "Word",
    "ZZ",
    "add",
    "brill_minor",
    "brill_minor_via_doubling",
    "det_bareiss",
    "det_cofactor",
    "even_lift",
    "exact_div",
    "format_scalar",
    "format_skew_matrix",
    "has_repeated_letter",
    "mul",
    "neg",
    "odd_lift",
    "parse_ring",
    "parse_skew_matrix",
    "pf_eliminate",
    "pf_expand",
    "pf_matchsum",
    "pfaffian",
    "random_skew_matrix",
    "ring_of",
    "sign",
    "sort_word",
    "subwords_of_size",
    "vanishing_term_check",
    "word_remove",
]
