"""Nonabelian tensor products of Lie algebra pairs over the rationals."""

from .catalog import (
    AlgebraDocument,
    DocumentError,
    PairDocument,
    SelectorError,
    abelian,
    algebra_from_document,
    catalog_pairs,
    catalog_selectors,
    heisenberg,
    load_path,
    nonabelian2,
    pair_center,
    pair_direct_sum,
    pair_from_document,
    pair_full,
    parse,
    resolve_selector,
    serialize,
    serialize_report,
)
from .gamma import GammaSpace, PsiDefect, gamma_dim, psi_image, psi_map, psi_welldefined, sigma
from .liealg import (
    AlgebraHom,
    AlgebraSubspace,
    LieAlgebra,
    NotAnIdealError,
    StructureError,
    StructureViolation,
    abelianization,
    center,
    direct_sum,
    quotient_algebra,
    validate_structure,
)
from .linalg import LinalgError, LinearMap, Matrix, Subspace, kernel, parse_scalar
from .pairs import (
    ActionData,
    ActionViolation,
    CompatibilityViolation,
    Pair,
    PairValidationError,
    QuotientPair,
    complement_condition,
    direct_sum_pair,
    make_pair,
    make_pair_with_actions,
    pair_is_clean,
    quotient_pair,
    relative_abelianization_dim,
    relative_commutator,
    relative_commutator_in_ideal,
)
from .tensor import (
    DerivedMaps,
    NonabelianTensor,
    SymbolSpace,
    TensorConstructionError,
    beta_bracket,
    closure,
    construct_tensor,
    diagonal,
    exterior,
    kappa_maps,
    relation_seed,
    symbol_expand,
)
from .verify import (
    CheckRecord,
    VerificationReport,
    check_names,
    verify_abelian_basis,
    verify_diagram,
    verify_diagonal_descent,
    verify_j2_decomposition,
    verify_ker_pi,
    verify_kunneth,
    verify_pair,
    verify_splitting,
)

__all__ = [
    "ActionData",
    "ActionViolation",
    "AlgebraDocument",
    "AlgebraHom",
    "AlgebraSubspace",
    "CheckRecord",
    "CompatibilityViolation",
    "DerivedMaps",
    "DocumentError",
    "GammaSpace",
    "LieAlgebra",
    "LinalgError",
    "LinearMap",
    "Matrix",
    "NonabelianTensor",
    "NotAnIdealError",
    "Pair",
    "PairDocument",
    "PairValidationError",
    "PsiDefect",
    "QuotientPair",
    "SelectorError",
    "StructureError",
    "StructureViolation",
    "Subspace",
    "SymbolSpace",
    "TensorConstructionError",
    "VerificationReport",
    "abelian",
    "abelianization",
    "algebra_from_document",
    "beta_bracket",
    "catalog_pairs",
    "catalog_selectors",
    "center",
    "check_names",
    "closure",
    "complement_condition",
    "construct_tensor",
    "diagonal",
    "direct_sum",
    "direct_sum_pair",
    "exterior",
    "gamma_dim",
    "heisenberg",
    "kappa_maps",
    "kernel",
    "load_path",
    "make_pair",
    "make_pair_with_actions",
    "nonabelian2",
    "pair_center",
    "pair_direct_sum",
    "pair_from_document",
    "pair_full",
    "pair_is_clean",
    "parse",
    "parse_scalar",
    "psi_image",
    "psi_map",
    "psi_welldefined",
    "quotient_algebra",
    "quotient_pair",
    "relation_seed",
    "relative_abelianization_dim",
    "relative_commutator",
    "relative_commutator_in_ideal",
    "resolve_selector",
    "serialize",
    "serialize_report",
    "sigma",
    "symbol_expand",
    "validate_structure",
    "verify_abelian_basis",
    "verify_diagram",
    "verify_diagonal_descent",
    "verify_j2_decomposition",
    "verify_ker_pi",
    "verify_kunneth",
    "verify_pair",
    "verify_splitting",
]
