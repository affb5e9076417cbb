"""Ordered coin-stack counts, their rational generating function, and
Frobenius coin-problem representability queries."""

from .denominations import DenominationSet, mask_of, parse_denominations, serialize
from .errors import (
    CoinstackError,
    DenominationError,
    EmptyInput,
    Malformed,
    NonPositive,
    NonUnitConstantTerm,
    OracleLimitExceeded,
    ResourceLimit,
    SearchLimitExceeded,
    TooLarge,
    UnsupportedIndex,
)
from .frobenius import (
    FrobeniusKind,
    FrobeniusResult,
    RepresentabilityReport,
    frobenius_number,
    is_representable,
    partition_count,
    partition_counts,
    representability_batch,
)
from .genfunc import (
    IntPolynomial,
    RationalGF,
    build_denominator,
    build_numerator_literal,
    literal_gf,
    render,
    series_expand,
    simplified_gf,
)
from .recurrence import (
    PartMultiset,
    StackCountSequence,
    e_sequence,
    e_term_dp,
    e_term_fast,
    enumerate_compositions,
    iter_terms,
    multinomial_count,
    symbolic_expansion_check,
)

__version__ = "0.1.0"
