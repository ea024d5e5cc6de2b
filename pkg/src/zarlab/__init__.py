"""Small cancellation construction, Dehn solver and word-map membership tests."""

from .dehn import (
    Candidate,
    DehnTrace,
    Verdict,
    decide,
    dehn_step,
    equal_in_group,
    find_candidates,
    is_identity,
    verify_trace,
)
from .presentation import (
    GenericPresentation,
    PresentationParams,
    RelatorFamily,
    check_metric_condition,
    load_presentation,
    max_piece_length,
    parse_presentation,
    relator,
    relevant_indices,
    symmetrized_family,
)
from .word_maps import (
    GroupPolynomial,
    SemigroupPolynomial,
    c_polynomial,
    coefficient_indices,
    eval_group,
    fresh_index,
    in_subbasic_closed_group,
    in_subbasic_closed_semigroup,
    normalize,
    parse_polynomial,
)
from .words import (
    EMPTY,
    Family,
    Letter,
    ParseError,
    Word,
    concat,
    cyclic_permutation,
    find_occurrences,
    free_reduce,
    invert,
    longest_common_prefix,
    parse_word,
    polarity,
    render_word,
)
from .zero_monoid import (
    ZERO,
    SPolynomial,
    SWord,
    eval_s,
    kill_generator,
    parse_spolynomial,
    parse_sword,
    s_equal,
    s_mul,
    s_normalize,
)

__version__ = "0.1.0"
