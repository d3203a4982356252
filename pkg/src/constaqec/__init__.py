"""Optimal asymmetric quantum codes from constacyclic codes over GF(q^2).

Layers, bottom up: exact finite-field arithmetic (field), cyclotomic
coset combinatorics (cosets), the six code families (families),
classical constacyclic codes with distance oracles (codes), the CSS
combination into quantum parameters (aqecc), and verification sweeps
against the published tables (verify).
"""

from .aqecc import (
    AqeccParams,
    ContainmentError,
    OptimalityError,
    css_combine,
    emit_table,
    enumerate_family,
    singleton_margin,
)
from .codes import (
    ConstacyclicCode,
    DistanceResult,
    SplittingFieldError,
    bch_designed_distance,
    hermitian_containment_oracle,
)
from .cosets import (
    CosetContext,
    DefiningSet,
    cyclotomic_coset,
    dual_contained_in,
    is_subcode,
    omega_set,
)
from .families import (
    CONSTRUCTIONS,
    FamilyConstraintError,
    FamilySpec,
    all_family_instances,
    family_defining_set,
)
from .field import FieldElement, GaloisField, embedding, field

__version__ = "0.1.0"

__all__ = [
    "AqeccParams",
    "CONSTRUCTIONS",
    "ConstacyclicCode",
    "ContainmentError",
    "CosetContext",
    "DefiningSet",
    "DistanceResult",
    "FamilyConstraintError",
    "FamilySpec",
    "FieldElement",
    "GaloisField",
    "OptimalityError",
    "SplittingFieldError",
    "all_family_instances",
    "bch_designed_distance",
    "css_combine",
    "cyclotomic_coset",
    "dual_contained_in",
    "embedding",
    "emit_table",
    "enumerate_family",
    "family_defining_set",
    "field",
    "hermitian_containment_oracle",
    "is_subcode",
    "omega_set",
    "singleton_margin",
]
