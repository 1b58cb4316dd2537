"""Word problem tooling for small overlap monoid presentations.

Decides equivalence of words (and the joint "equivalent with a given
possible prefix" question) over finitely presented monoids satisfying the
small overlap condition C(4), in time linear in the shorter input word.
Ships the supporting machinery: piece queries, maximal piece prefix/suffix
scans, X|Y|Z decompositions, C(n) and OL(x) condition checks, clean overlap
prefix detection, a brute-force rewriting oracle for differential testing,
and a CLI.
"""

from .errors import (
    AmbiguityViolation,
    NotC3Error,
    NotC4Error,
    ParseError,
    PieceExpectedError,
)
from .oracle import (
    OracleCaps,
    OracleClosure,
    closure,
    oracle_equivalent,
    oracle_possible_prefix,
    rewrite_neighbors,
)
from .prefixes import (
    CleanXY,
    OverlapChain,
    RelationPrefixHit,
    SuffixSplit,
    clean_overlap_prefix_xy,
    is_p_active,
    maximal_common_suffix,
    overlap_chain,
    shortest_relation_prefix,
    xy_occurrence_at,
)
from .presentation import (
    EPSILON,
    Presentation,
    PresentationIndex,
    Relation,
    RelationDecomposition,
    Word,
    build_index,
    c4_certificate,
    check_condition,
    check_condition_bruteforce,
    check_ol,
    decompose,
    enumerate_pieces,
    is_piece,
    max_piece_prefix,
    max_piece_suffix,
    min_piece_factorisation,
    parse_presentation,
)
from .solver import WpOutcome, equivalent, uniform_solve, wp_prefix

__all__ = [
    "AmbiguityViolation",
    "CleanXY",
    "EPSILON",
    "NotC3Error",
    "NotC4Error",
    "OracleCaps",
    "OracleClosure",
    "OverlapChain",
    "ParseError",
    "PieceExpectedError",
    "Presentation",
    "PresentationIndex",
    "Relation",
    "RelationDecomposition",
    "RelationPrefixHit",
    "SuffixSplit",
    "Word",
    "WpOutcome",
    "build_index",
    "c4_certificate",
    "check_condition",
    "check_condition_bruteforce",
    "check_ol",
    "clean_overlap_prefix_xy",
    "closure",
    "decompose",
    "enumerate_pieces",
    "equivalent",
    "is_p_active",
    "is_piece",
    "max_piece_prefix",
    "max_piece_suffix",
    "maximal_common_suffix",
    "min_piece_factorisation",
    "oracle_equivalent",
    "oracle_possible_prefix",
    "overlap_chain",
    "parse_presentation",
    "rewrite_neighbors",
    "shortest_relation_prefix",
    "uniform_solve",
    "wp_prefix",
    "xy_occurrence_at",
]
