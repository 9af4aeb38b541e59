from orbifano.invariants.formulas import (
    FamilyInvariants,
    defect_bounds,
    defect_from_pi1,
    hilbert_function,
    invariants_of,
    poincare_numerator,
    poincare_series,
)
from orbifano.invariants.sieve import (
    CASCADE_ROOTS,
    INDEX_FAMILIES,
    CandidateStatus,
    cascade,
    cascade_families,
    candidate_sieve,
    defective_candidates,
    family_name,
    no_toric_degeneration,
    not_occurring,
    numerical_bounds,
    pro2_bounds,
    root_degrees,
    survivors,
)

__all__ = [
    "CASCADE_ROOTS",
    "INDEX_FAMILIES",
    "CandidateStatus",
    "FamilyInvariants",
    "candidate_sieve",
    "cascade",
    "cascade_families",
    "defect_bounds",
    "defect_from_pi1",
    "defective_candidates",
    "family_name",
    "hilbert_function",
    "invariants_of",
    "no_toric_degeneration",
    "not_occurring",
    "numerical_bounds",
    "poincare_numerator",
    "poincare_series",
    "pro2_bounds",
    "root_degrees",
    "survivors",
]
