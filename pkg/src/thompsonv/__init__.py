"""Exact computation in Thompson's group V.

Elements are tables between finite maximal prefix codes over {a, b}, with
composition, unique maximum extension, word-problem decision over a fixed
nine-generator set, canonical factorization and compilation into generator
words with certified length bounds, explicit subgroup embeddings with
distortion-witness verification, and the polycyclic monoid algebra with
rewriting to normal form.
"""

from .words import (
    dict_compare,
    enumerate_maximal_codes,
    format_code,
    format_word,
    ideal_intersection_code,
    is_maximal_prefix_code,
    is_prefix,
    is_prefix_code,
    parse_code,
    parse_word,
    quotient,
)
from .tables import (
    IDENTITY,
    Table,
    compose,
    enumerate_elements,
    equal_in_v,
    format_table,
    invert,
    longest_entry,
    max_extend,
    multiply,
    parse_table,
    preserves_dict_order,
    restrict,
)
from .generators import (
    C_DELTA,
    GENERATOR_NAMES,
    apply_word,
    evaluate_balanced,
    evaluate_sequential,
    find_witness,
    format_genword,
    generator_table,
    is_identity_word,
    parse_genword,
    superadditive_envelope,
)
from .normalform import (
    Factorization,
    Transposition,
    balanced_code,
    canonical_factor,
    element_to_word,
    f_word,
    left_edge_exponent,
    order_iso,
    permutation_to_transpositions,
    transposition_table,
    transposition_word,
)
from .subgroups import (
    closed_form_witness,
    double_a,
    double_b,
    evaluate_free,
    finitary_perm_table,
    free_generators,
    int_embed,
    product_size_check,
    shift_table,
    verify_distortion,
)
from .algebra import (
    AlgebraElement,
    Monomial,
    format_sum,
    is_congruent,
    is_unary_sum,
    mono_mul,
    parse_sum,
    phi_of,
    reduce_mod_iv,
    sigma_of,
    star,
    unary_multiply,
)

__version__ = "0.1.0"
