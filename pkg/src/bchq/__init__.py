"""Primitive narrow-sense BCH codes: dual containment decided from design
parameters, exact dimensions, distance bounds, and the two derived families
of quantum stabilizer code parameters, all cross-checked by brute-force
oracles at small scale."""

__version__ = "0.1.0"

from .bchcore import (
    BchCode,
    OutOfTheoremRange,
    construct,
    dimension_formula,
    effective_designed_distance,
    formula_delta_limit,
    formula_dimension_value,
)
from .bounds import DistanceEstimate, farr_condition, refined_min_distance
from .duality import (
    ContainmentVerdict,
    NotCoveredByTheorem,
    contains_euclidean_dual,
    contains_hermitian_dual,
    coset_oracle_delta_max,
    delta_max_euclidean,
    delta_max_hermitian,
    dual_distance_bound_euclidean,
    dual_distance_bound_hermitian,
)
from .gf import (
    Field,
    FieldPoly,
    FieldSpec,
    FieldTooLarge,
    build_field,
    euclidean_dual_generator,
    generator_polynomial,
    hermitian_dual_generator,
    minimal_polynomial,
)
from .modnum import (
    CyclotomicCoset,
    DefiningSet,
    DesignParams,
    cyclotomic_coset,
    defining_set,
    prime_power_parts,
    scale_set,
)
from .oracle import (
    OracleReport,
    exhaustive_min_distance,
    verify_containment_by_matrices,
    verify_containment_by_polynomials,
    verify_dual_distance_bound,
)
from .quantum import (
    DualContainmentError,
    QuantumParams,
    css_from_bch,
    hermitian_from_bch,
    purity_refinement,
)

__all__ = [
    "BchCode",
    "ContainmentVerdict",
    "CyclotomicCoset",
    "DefiningSet",
    "DesignParams",
    "DistanceEstimate",
    "DualContainmentError",
    "Field",
    "FieldPoly",
    "FieldSpec",
    "FieldTooLarge",
    "NotCoveredByTheorem",
    "OracleReport",
    "OutOfTheoremRange",
    "QuantumParams",
    "build_field",
    "construct",
    "contains_euclidean_dual",
    "contains_hermitian_dual",
    "coset_oracle_delta_max",
    "css_from_bch",
    "cyclotomic_coset",
    "defining_set",
    "delta_max_euclidean",
    "delta_max_hermitian",
    "dimension_formula",
    "dual_distance_bound_euclidean",
    "dual_distance_bound_hermitian",
    "effective_designed_distance",
    "euclidean_dual_generator",
    "exhaustive_min_distance",
    "farr_condition",
    "formula_delta_limit",
    "formula_dimension_value",
    "generator_polynomial",
    "hermitian_dual_generator",
    "hermitian_from_bch",
    "minimal_polynomial",
    "prime_power_parts",
    "purity_refinement",
    "refined_min_distance",
    "scale_set",
    "verify_containment_by_matrices",
    "verify_containment_by_polynomials",
    "verify_dual_distance_bound",
]
