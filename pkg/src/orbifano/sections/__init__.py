from orbifano.sections.identities import (
    IdentityCheck,
    antisymmetric_from_upper,
    pfaffian4,
    pfaffian_incidence,
    verify_basis_from_rays,
    verify_binomials,
    verify_octahedral_relations,
    verify_pfaffian,
)
from orbifano.sections.monomials import (
    Monomial,
    MonomialPoly,
    check_homogeneity,
    check_substitution_identity,
    monomial_basis,
    parse_poly,
    restricted_basis,
    terms,
)
from orbifano.sections.quotients import quotient_surface_basket
from orbifano.sections.strata import (
    StratumReport,
    basket_of_report,
    ci_singularity_report,
    quotient_type,
    stratum_report,
)

__all__ = [
    "IdentityCheck",
    "Monomial",
    "MonomialPoly",
    "StratumReport",
    "antisymmetric_from_upper",
    "basket_of_report",
    "check_homogeneity",
    "check_substitution_identity",
    "ci_singularity_report",
    "monomial_basis",
    "parse_poly",
    "pfaffian4",
    "pfaffian_incidence",
    "quotient_surface_basket",
    "quotient_type",
    "restricted_basis",
    "stratum_report",
    "terms",
    "verify_basis_from_rays",
    "verify_binomials",
    "verify_octahedral_relations",
    "verify_pfaffian",
]
