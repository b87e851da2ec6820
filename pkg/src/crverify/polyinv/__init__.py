"""Polynomials, matrix groups acting on forms, explicit varieties and singular scans."""

from __future__ import annotations

from .matgroup import (
    E6_CARTAN,
    ClosureBudgetError,
    EnumerationMissingError,
    MatrixGroup,
    derived_subgroup,
    group_closure,
    invariance_nullity,
    invariant_space_dim_direct,
    matrix_from_root_permutation,
    reynolds,
    root_permutations,
    root_system,
    simple_reflections,
    weyl_e6,
)
from .poly import (
    DegenerateInputError,
    ExactMatrix,
    MultiPoly,
    act,
    elementary_symmetric,
    exact_rank,
    integer_rank,
    is_invariant,
    jacobian_rank_at,
    monomials,
)
from .scan import reduce_point, singular_points_mod_p
from .varieties import (
    VARIETIES,
    Variety,
    get_variety,
    klein_55_generators,
    klein_cubic,
    klein_exponents,
    palatini_quartic,
    segre_node_orbit,
)

__all__ = [
    "E6_CARTAN", "ClosureBudgetError", "EnumerationMissingError", "MatrixGroup",
    "derived_subgroup", "group_closure", "invariance_nullity", "invariant_space_dim_direct",
    "matrix_from_root_permutation", "reynolds", "root_permutations", "root_system",
    "simple_reflections", "weyl_e6", "DegenerateInputError", "ExactMatrix", "MultiPoly",
    "act", "elementary_symmetric", "exact_rank", "integer_rank", "is_invariant",
    "jacobian_rank_at", "monomials", "reduce_point", "singular_points_mod_p", "VARIETIES",
    "Variety", "get_variety", "klein_55_generators", "klein_cubic", "klein_exponents",
    "palatini_quartic", "segre_node_orbit",
]
