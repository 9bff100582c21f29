"""Q-polynomials, Kauffman brackets and crossing-change classification for
signed plane graphs."""

from ._crossdrop import (
    CapExceeded,
    DomainError,
    Error,
    InvariantViolation,
    ParseError,
    PlaneGraph,
    classify_edge,
    corollary,
    corpus_graph,
    corpus_names,
    dual,
    kauffman_bracket,
    link_components,
    maximal_pds,
    parse_graph,
    q_after_flip,
    q_polynomial,
    q_terms,
    run_cli,
    selftest,
    tutte_neg_eval,
    verify,
)

__all__ = [
    "CapExceeded",
    "DomainError",
    "Error",
    "InvariantViolation",
    "ParseError",
    "PlaneGraph",
    "classify_edge",
    "corollary",
    "corpus_graph",
    "corpus_names",
    "dual",
    "kauffman_bracket",
    "link_components",
    "maximal_pds",
    "parse_graph",
    "q_after_flip",
    "q_polynomial",
    "q_terms",
    "run_cli",
    "selftest",
    "tutte_neg_eval",
    "verify",
]
