"""Computational algebra for right restriction monoids.

Finite table monoids with a star operation, their completion by
acceptable sets, the companion construction whose partial units recover
a Boolean inverse monoid, and the symbolic universe of prefix codes,
polycyclic basic maps, table maps and Cantor-algebra terms.
"""

from .tables import (
    FiniteRRMonoid,
    AxiomReport,
    Classification,
    MalformedTableError,
    InterchangeError,
    ResourceLimitError,
    check_axioms,
    classify,
    leq,
    left_compatible,
    meet_of_compatible,
    partial_units,
    inverse_of,
    left_orthogonalize,
    cayley_embed,
    build_PT,
    build_I,
    build_boolean_algebra,
    find_isomorphism,
    to_json,
    from_json,
)
from .companion import (
    StructuralError,
    down_closure,
    acceptable_sets,
    nucleus_closure,
    check_nucleus,
    completion,
    universal_extension,
    etale_of,
    verify_inv_iso,
    extend_hom,
    fixed_point_check,
    reconstruct_projection_pure,
)
from .words import (
    BasicMap,
    comparable,
    is_prefix_code,
    is_maximal_prefix_code,
    caret_expand,
    caret_reduce,
    pn_mul,
    pn_star,
    pn_inverse,
    pn_leq,
    pn_left_compatible,
    orthogonal_set_check,
)
from .cuntz import (
    TableMap,
    make,
    compose,
    reduce,
    star,
    invert,
    equals,
    join,
    is_partial_unit,
    is_total,
    is_unit,
    alpha,
    lambda_op,
    eval_term,
    term_for,
    endo_check,
    zero_simplifying_witness,
)

__version__ = "0.1.0"
