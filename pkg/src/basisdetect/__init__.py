"""Exact detection of Groebner and SAGBI term orders for polynomial sets."""

from .groebner import (
    DivisionResult,
    buchberger,
    is_groebner_basis,
    is_universal_gb,
    normal_form,
    s_polynomial,
    weight_vectors_realizing_gb,
)
from .orders import (
    LatticePolytope,
    OrderClass,
    cone_feasibility,
    extract_weight_vectors,
    leading_tuple,
    normalized_volume,
    polytope_dim,
)
from .polyring import (
    Polynomial,
    PolynomialRing,
    TermOrder,
    homogenize_with_t,
    initial_form,
    initial_term,
    normalize_weight,
    ring,
    support,
)
from .sagbi import (
    HilbertBoundWarning,
    HilbertVector,
    SubductionLimitError,
    SubductionResult,
    hilbert_vector,
    is_sagbi_hilbert,
    is_sagbi_subduction,
    is_universal_sagbi,
    rank_orders,
    subduction,
    weight_vectors_realizing_sagbi,
)
from .toric import (
    ExponentMatrix,
    ToricBinomial,
    solve_monomial_membership,
    toric_ideal_generators,
)

__all__ = [
    "DivisionResult",
    "ExponentMatrix",
    "HilbertBoundWarning",
    "HilbertVector",
    "LatticePolytope",
    "OrderClass",
    "Polynomial",
    "PolynomialRing",
    "SubductionLimitError",
    "SubductionResult",
    "TermOrder",
    "ToricBinomial",
    "buchberger",
    "cone_feasibility",
    "extract_weight_vectors",
    "hilbert_vector",
    "homogenize_with_t",
    "initial_form",
    "initial_term",
    "is_groebner_basis",
    "is_sagbi_hilbert",
    "is_sagbi_subduction",
    "is_universal_gb",
    "is_universal_sagbi",
    "leading_tuple",
    "normal_form",
    "normalize_weight",
    "normalized_volume",
    "polytope_dim",
    "rank_orders",
    "ring",
    "s_polynomial",
    "solve_monomial_membership",
    "subduction",
    "support",
    "toric_ideal_generators",
    "weight_vectors_realizing_gb",
    "weight_vectors_realizing_sagbi",
]
